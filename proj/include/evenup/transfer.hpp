#pragma once

// Transfer-matrix counting: linear counts as 1^T M^{n-1} 1, cyclic
// counts as trace(M^n). Independent of both the brute-force oracle and
// the generating functions.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "evenup/numeric.hpp"
#include "evenup/words.hpp"

namespace evenup {

// 0/1 adjacency of allowed letter pairs: entry (a, b) says letter b may
// immediately follow letter a. Rows of unconstrained letters (odd for
// even-up, even for odd-up) are all ones.
struct TransitionMatrix {
  int k = 1;
  Strictness strictness = Strictness::strict;
  Parity parity = Parity::even_up;
  std::vector<std::uint8_t> allow;  // k*k, row-major, 1-based letters

  bool allowed(int a, int b) const {
    return allow[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(k) +
                 static_cast<std::size_t>(b - 1)] != 0;
  }
};

inline TransitionMatrix build_matrix(Strictness s, Parity p, int k) {
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  TransitionMatrix m{k, s, p, {}};
  m.allow.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 1; a <= k; ++a)
    for (int b = 1; b <= k; ++b)
      m.allow[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(k) +
              static_cast<std::size_t>(b - 1)] =
          step_allowed(a, b, s, p) ? 1 : 0;
  return m;
}

namespace detail {

using IntMatrix = std::vector<Int>;  // k*k row-major

inline IntMatrix to_int_matrix(const TransitionMatrix& m) {
  IntMatrix r(m.allow.size());
  for (std::size_t i = 0; i < m.allow.size(); ++i) r[i] = Int(m.allow[i]);
  return r;
}

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b, int k) {
  const std::size_t n = static_cast<std::size_t>(k);
  IntMatrix r(n * n, Int(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < n; ++l) {
      if (a[i * n + l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j)
        r[i * n + j] += a[i * n + l] * b[l * n + j];
    }
  return r;
}

inline IntMatrix mat_pow(IntMatrix base, unsigned long e, int k) {
  const std::size_t n = static_cast<std::size_t>(k);
  IntMatrix r(n * n, Int(0));
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
  while (e > 0) {
    if (e & 1ul) r = mat_mul(r, base, k);
    e >>= 1ul;
    if (e > 0) base = mat_mul(base, base, k);
  }
  return r;
}

// counts of length-n words ending at each letter: start from the
// all-ones vector (n = 1) and apply the transition n-1 times.
inline std::vector<Int> ending_counts(const TransitionMatrix& m, int n) {
  const std::size_t k = static_cast<std::size_t>(m.k);
  std::vector<Int> u(k, Int(1));
  for (int step = 1; step < n; ++step) {
    std::vector<Int> v(k, Int(0));
    for (std::size_t a = 0; a < k; ++a) {
      if (u[a] == 0) continue;
      for (std::size_t b = 0; b < k; ++b)
        if (m.allow[a * k + b]) v[b] += u[a];
    }
    u = std::move(v);
  }
  return u;
}

}  // namespace detail

inline Int count_linear(const TransitionMatrix& m, int n) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  if (n == 0) return Int(1);
  Int total(0);
  for (const Int& v : detail::ending_counts(m, n)) total += v;
  return total;
}

// n = 0 and n = 1 are conventions (the empty word, and all k single
// letters: the wrap condition only binds from length 2 on).
inline Int count_cyclic(const TransitionMatrix& m, int n) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  if (n == 0) return Int(1);
  if (n == 1) return Int(m.k);
  detail::IntMatrix p = detail::mat_pow(detail::to_int_matrix(m),
                                        static_cast<unsigned long>(n), m.k);
  Int tr(0);
  const std::size_t k = static_cast<std::size_t>(m.k);
  for (std::size_t i = 0; i < k; ++i) tr += p[i * k + i];
  return tr;
}

inline Int count_by_last_letter(const TransitionMatrix& m, int n, int last) {
  if (n < 1) throw std::invalid_argument("word length must be >= 1");
  if (last < 1 || last > m.k)
    throw std::out_of_range("last letter " + std::to_string(last) +
                            " outside [1, " + std::to_string(m.k) + "]");
  return detail::ending_counts(m, n)[static_cast<std::size_t>(last - 1)];
}

}  // namespace evenup
