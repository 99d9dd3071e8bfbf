#pragma once

// Dense integer polynomials in canonical form: coefficient i is the
// coefficient of x^i, trailing zeros are stripped, zero is the empty
// coefficient vector.

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "evenup/numeric.hpp"

namespace evenup {

class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { normalize(); }
  explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    normalize();
  }

  static IntPoly constant(Int v) { return IntPoly{std::move(v)}; }
  static IntPoly x() { return IntPoly{Int(0), Int(1)}; }
  // c * x^e
  static IntPoly monomial(Int coeff, std::size_t e) {
    std::vector<Int> v(e + 1, Int(0));
    v[e] = std::move(coeff);
    return IntPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const Int& coeff(std::size_t i) const {
    static const Int zero(0);
    return i < c_.size() ? c_[i] : zero;
  }

  const std::vector<Int>& coefficients() const { return c_; }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(r));
  }

  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<Int> r(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(r));
  }

  friend IntPoly operator-(const IntPoly& a) {
    std::vector<Int> r = a.c_;
    for (Int& v : r) v = -v;
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return IntPoly(std::move(r));
  }

  friend IntPoly operator*(const Int& s, const IntPoly& a) {
    std::vector<Int> r = a.c_;
    for (Int& v : r) v *= s;
    return IntPoly(std::move(r));
  }

  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  // d/dx
  IntPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Int> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Int(i) * c_[i];
    return IntPoly(std::move(r));
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Int> c_;
};

inline IntPoly poly_pow(const IntPoly& p, unsigned e) {
  IntPoly r = IntPoly::constant(1);
  IntPoly base = p;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

}  // namespace evenup
