#pragma once

// Truncated formal power series with exact rational coefficients.
//
// A Series of order N stores coefficients 0..N. Binary operations
// truncate to the smaller order of the two operands, so the order of a
// result always bounds the range on which its coefficients are trusted.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "evenup/errors.hpp"
#include "evenup/numeric.hpp"
#include "evenup/poly.hpp"

namespace evenup {

class Series {
 public:
  // the zero series at the given truncation order
  explicit Series(std::size_t order) : c_(order + 1, Rat(0)) {}

  explicit Series(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.emplace_back(0);
  }

  static Series from_poly(const IntPoly& p, std::size_t order) {
    Series s(order);
    for (std::size_t i = 0; i <= order; ++i) s.c_[i] = Rat(p.coeff(i));
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  const Rat& coeff(std::size_t i) const { return c_.at(i); }
  const std::vector<Rat>& coefficients() const { return c_; }

  Series truncated(std::size_t order) const {
    Series r(order);
    for (std::size_t i = 0; i <= std::min(order, this->order()); ++i)
      r.c_[i] = c_[i];
    return r;
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
  }

  friend Series operator-(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
  }

  friend Series operator-(const Series& a) {
    Series r = a;
    for (Rat& v : r.c_) v = -v;
    return r;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) r.c_[i] += a.c_[j] * b.c_[i - j];
      r.c_[i].canonicalize();
    }
    return r;
  }

  friend Series operator*(const Rat& s, const Series& a) {
    Series r = a;
    for (Rat& v : r.c_) {
      v *= s;
      v.canonicalize();
    }
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rat> c_;
};

// Long division; requires den(0) != 0.
inline Series series_div(const Series& num, const Series& den) {
  if (den.coeff(0) == 0)
    throw std::domain_error("series division by zero constant term");
  Series q(std::min(num.order(), den.order()));
  std::vector<Rat> qc(q.order() + 1, Rat(0));
  for (std::size_t n = 0; n <= q.order(); ++n) {
    Rat acc = num.coeff(n);
    for (std::size_t i = 1; i <= n; ++i) acc -= den.coeff(i) * qc[n - i];
    qc[n] = acc / den.coeff(0);
    qc[n].canonicalize();
  }
  return Series(std::move(qc));
}

// Square root by Newton iteration r <- (r + s/r)/2; each step doubles
// the number of correct coefficients. Requires s(0) = 1.
inline Series series_sqrt(const Series& s) {
  if (s.coeff(0) != 1)
    throw std::domain_error("series sqrt requires constant term 1");
  const std::size_t target = s.order();
  std::vector<Rat> rc{Rat(1)};
  std::size_t good = 0;  // coefficients 0..good are correct
  while (good < target) {
    std::size_t next = std::min(2 * good + 1, target);
    Series r = Series(std::vector<Rat>(rc)).truncated(next);
    Series lifted = Rat(1, 2) * (r + series_div(s.truncated(next), r));
    rc = lifted.coefficients();
    good = next;
  }
  return Series(std::move(rc));
}

// Divide by x^m: requires the first m coefficients to vanish. The
// result keeps the same order (top m coefficients are unknown, so the
// input must carry m orders of slack).
inline Series series_shift_down(const Series& s, std::size_t m,
                                const char* what = "series") {
  for (std::size_t i = 0; i < std::min(m, s.order() + 1); ++i)
    if (s.coeff(i) != 0)
      throw integrity_error(std::string(what) +
                            ": expected leading coefficients to vanish before "
                            "dividing by x^" +
                            std::to_string(m));
  std::vector<Rat> r(s.order() + 1 - m);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = s.coeff(i + m);
  return Series(std::move(r));
}

}  // namespace evenup
