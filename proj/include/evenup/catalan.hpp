#pragma once

// Restricted Catalan words: words over [n] with w_1 = 1 and
// w_{i+1} <= w_i + 1, filtered by a (weak/strict, even-up/odd-up)
// condition and optionally by the parity of the last letter.
//
// Four counting routes: exhaustive enumeration, a last-letter dynamic
// program, the coupled convolution recurrences of the weak family, and
// expansion of the algebraic closed forms.

#include <array>
#include <string>
#include <vector>

#include "evenup/errors.hpp"
#include "evenup/numeric.hpp"
#include "evenup/series.hpp"
#include "evenup/words.hpp"

namespace evenup {

enum class Ending : std::uint8_t { any, odd, even };

struct CatalanVariant {
  Strictness strictness = Strictness::weak;
  Parity parity = Parity::even_up;
  Ending ending = Ending::any;

  friend bool operator==(const CatalanVariant&, const CatalanVariant&) = default;
};

// The eight variants with a closed-form generating function: the weak
// family pairs even-up with an odd last letter and odd-up with an even
// last letter, and likewise for the strict family.
inline constexpr std::array<CatalanVariant, 8> all_catalan_variants() {
  return {{
      {Strictness::weak, Parity::even_up, Ending::any},
      {Strictness::weak, Parity::odd_up, Ending::any},
      {Strictness::weak, Parity::even_up, Ending::odd},
      {Strictness::weak, Parity::odd_up, Ending::even},
      {Strictness::strict, Parity::even_up, Ending::any},
      {Strictness::strict, Parity::odd_up, Ending::any},
      {Strictness::strict, Parity::even_up, Ending::odd},
      {Strictness::strict, Parity::odd_up, Ending::even},
  }};
}

inline std::string variant_name(CatalanVariant v) {
  std::string name = v.strictness == Strictness::weak ? "weakly-" : "strict-";
  name += v.parity == Parity::even_up ? "even-up" : "odd-up";
  if (v.ending == Ending::odd) name += "-odd-end";
  if (v.ending == Ending::even) name += "-even-end";
  return name;
}

inline bool parse_catalan_variant(const std::string& name, CatalanVariant& out) {
  for (CatalanVariant v : all_catalan_variants()) {
    if (variant_name(v) == name) {
      out = v;
      return true;
    }
  }
  return false;
}

inline Int catalan_number(int n) {
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), 2ul * static_cast<unsigned long>(n),
               static_cast<unsigned long>(n));
  return b / (n + 1);
}

inline void check_catalan_budget(int n, const Int& budget) {
  if (catalan_number(n) > budget)
    throw budget_error("enumerating " + to_string(catalan_number(n)) +
                       " Catalan words of length " + std::to_string(n) +
                       " exceeds budget " + to_string(budget));
}

// Visits all Catalan words of length n in lexicographic order.
template <typename Visitor>
void for_each_catalan_word(int n, Visitor&& visit) {
  std::vector<int> w;
  if (n == 0) {
    visit(w);
    return;
  }
  w.reserve(static_cast<std::size_t>(n));
  w.push_back(1);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(w.size()) == n) {
      visit(w);
      return;
    }
    const int top = w.back() + 1;
    for (int next = 1; next <= top; ++next) {
      w.push_back(next);
      self(self);
      w.pop_back();
    }
  };
  rec(rec);
}

inline std::vector<Word> enumerate_catalan(
    int n, const Int& budget = default_enumeration_budget()) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  check_catalan_budget(n, budget);
  std::vector<Word> out;
  for_each_catalan_word(n, [&](const std::vector<int>& w) {
    out.push_back(Word{w, std::max(n, 1)});
  });
  return out;
}

inline bool ending_matches(const std::vector<int>& w, Ending e) {
  if (e == Ending::any || w.empty()) return true;
  return (w.back() % 2 == 1) == (e == Ending::odd);
}

inline Int count_catalan_enum(CatalanVariant v, int n,
                              const Int& budget = default_enumeration_budget()) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  check_catalan_budget(n, budget);
  WordClass linear{v.strictness, v.parity, Topology::linear};
  std::uint64_t count = 0;
  for_each_catalan_word(n, [&](const std::vector<int>& w) {
    if (satisfies(w, linear) && ending_matches(w, v.ending)) ++count;
  });
  return Int(static_cast<unsigned long>(count));
}

namespace detail {

// Last-letter DP. cur[v] = number of valid prefixes of the current
// length ending with letter v; `restricted` switches the up-condition
// on (off = all Catalan words).
inline Int catalan_dp(int n, Ending ending, bool restricted, Strictness s,
                      Parity p) {
  if (n == 0) return Int(1);
  const std::size_t size = static_cast<std::size_t>(n) + 2;
  std::vector<Int> cur(size, Int(0));
  cur[1] = 1;
  for (int len = 2; len <= n; ++len) {
    std::vector<Int> nxt(size, Int(0));
    // suffix[v] = sum of cur[u] over unconstrained u >= v
    std::vector<Int> suffix(size + 1, Int(0));
    for (std::size_t v = size - 1; v >= 1; --v) {
      suffix[v] = suffix[v + 1];
      if (!restricted || !constrained(static_cast<int>(v), p))
        suffix[v] += cur[v];
    }
    for (std::size_t u = 1; u < size; ++u)
      nxt[u] = suffix[u == 1 ? 1 : u - 1];  // from any u' >= u-1, unconstrained
    if (restricted) {
      for (std::size_t v = 1; v + 1 < size; ++v) {
        if (!constrained(static_cast<int>(v), p) || cur[v] == 0) continue;
        nxt[v + 1] += cur[v];
        if (s == Strictness::weak) nxt[v] += cur[v];
      }
    }
    cur = std::move(nxt);
  }
  Int total(0);
  for (std::size_t v = 1; v < size; ++v) {
    if (ending == Ending::odd && v % 2 == 0) continue;
    if (ending == Ending::even && v % 2 == 1) continue;
    total += cur[v];
  }
  return total;
}

}  // namespace detail

inline Int count_catalan_dp(CatalanVariant v, int n) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  return detail::catalan_dp(n, v.ending, true, v.strictness, v.parity);
}

// All Catalan words of length n with the given ending parity (no
// up-condition); the two parities sum to the n-th Catalan number.
inline Int count_catalan_unrestricted(Ending ending, int n) {
  if (n < 0) throw std::invalid_argument("word length must be >= 0");
  return detail::catalan_dp(n, ending, false, Strictness::weak,
                            Parity::even_up);
}

// ---- closed forms ----

namespace detail {

inline Series catalan_radical(Strictness s, std::size_t order) {
  // weak family: (1+x^2)^2 - 4x; strict family: (1+x)(1-3x)
  IntPoly radicand = s == Strictness::weak
                         ? IntPoly{Int(1), Int(-4), Int(2), Int(0), Int(1)}
                         : IntPoly{Int(1), Int(-2), Int(-3)};
  return series_sqrt(Series::from_poly(radicand, order));
}

}  // namespace detail

// Expands the variant's algebraic closed form to order n_max. Every
// formula divides by the formal x, so the numerator's constant term is
// checked to vanish before shifting.
inline std::vector<Int> expand_catalan_gf(CatalanVariant v, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const std::size_t order = static_cast<std::size_t>(n_max) + 2;
  const Series s = detail::catalan_radical(v.strictness, order);
  auto poly = [&](std::initializer_list<Int> c) {
    return Series::from_poly(IntPoly(c), order);
  };
  const char* what = "catalan closed form";

  Series result(order);
  if (v.strictness == Strictness::weak) {
    if (v.parity == Parity::even_up && v.ending == Ending::any)
      result = series_shift_down(poly({Int(1), Int(-1)}) - s, 1, what);
    else if (v.parity == Parity::odd_up && v.ending == Ending::any)
      result = Rat(1, 2) * series_shift_down(poly({Int(2), Int(-1), Int(-2), Int(-1)}) -
                                                 poly({Int(2), Int(1)}) * s,
                                             1, what);
    else if (v.parity == Parity::even_up && v.ending == Ending::odd)
      result = Rat(1, 2) *
               series_shift_down(poly({Int(1), Int(0), Int(1)}) - s, 1, what);
    else if (v.parity == Parity::odd_up && v.ending == Ending::even)
      result = Rat(1, 2) *
               series_shift_down(poly({Int(1), Int(0), Int(-1)}) - s, 1, what);
    else
      throw std::invalid_argument("no closed form for variant " +
                                  variant_name(v));
  } else {
    if (v.parity == Parity::even_up && v.ending == Ending::any)
      result = series_div(series_shift_down(poly({Int(2), Int(1), Int(-1)}) -
                                                poly({Int(2), Int(1)}) * s,
                                            1, what),
                          poly({Int(2), Int(2)}));
    else if (v.parity == Parity::odd_up && v.ending == Ending::any)
      result = series_div(series_shift_down(poly({Int(1)}) - s, 1, what),
                          poly({Int(1), Int(1)}));
    else if (v.parity == Parity::even_up && v.ending == Ending::odd)
      result =
          Rat(1, 2) * series_shift_down(poly({Int(1), Int(1)}) - s, 1, what);
    else if (v.parity == Parity::odd_up && v.ending == Ending::even)
      result = series_div(series_shift_down(poly({Int(1), Int(1)}) - s, 1, what),
                          poly({Int(2), Int(2)}));
    else
      throw std::invalid_argument("no closed form for variant " +
                                  variant_name(v));
  }

  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int i = 0; i <= n_max; ++i) {
    const Rat& q = result.coeff(static_cast<std::size_t>(i));
    if (!is_integer(q) || q < 0)
      throw integrity_error(
          "catalan closed form produced a non-integer or negative "
          "coefficient at n=" +
          std::to_string(i) + ": " + to_string(q));
    out.push_back(q.get_num());
  }
  return out;
}

// The weak family's four sequences computed jointly from the coupled
// convolution recurrences, e.g.
//   a_n = b_{n-1} + sum_{i=2}^{n} b'_{i-2} a_{n-i+1}   (n >= 2),
// seeded with the n <= 1 values a=1,1  b=1,1  a'=1,1  b'=1,0.
struct WeakCatalanCounts {
  std::vector<Int> even_up;           // a
  std::vector<Int> odd_up;            // b
  std::vector<Int> even_up_odd_end;   // a'
  std::vector<Int> odd_up_even_end;   // b'
};

inline WeakCatalanCounts weak_convolution_counts(int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  WeakCatalanCounts r;
  r.even_up = {Int(1), Int(1)};
  r.odd_up = {Int(1), Int(1)};
  r.even_up_odd_end = {Int(1), Int(1)};
  r.odd_up_even_end = {Int(1), Int(0)};
  auto convolve = [](const std::vector<Int>& aux, const std::vector<Int>& seq,
                     int n) {
    Int acc(0);
    for (int i = 2; i <= n; ++i) acc += aux[i - 2] * seq[n - i + 1];
    return acc;
  };
  for (int n = 2; n <= n_max; ++n) {
    const auto& a = r.even_up;
    const auto& b = r.odd_up;
    const auto& ap = r.even_up_odd_end;
    const auto& bp = r.odd_up_even_end;
    Int an = b[n - 1] + convolve(bp, a, n);
    Int bn = a[n - 1] + convolve(ap, b, n);
    Int apn = bp[n - 1] + convolve(bp, ap, n);
    Int bpn = ap[n - 1] + convolve(ap, bp, n);
    r.even_up.push_back(std::move(an));
    r.odd_up.push_back(std::move(bn));
    r.even_up_odd_end.push_back(std::move(apn));
    r.odd_up_even_end.push_back(std::move(bpn));
  }
  if (n_max < 1)
    for (auto* v : {&r.even_up, &r.odd_up, &r.even_up_odd_end, &r.odd_up_even_end})
      v->resize(static_cast<std::size_t>(n_max) + 1);
  return r;
}

}  // namespace evenup
