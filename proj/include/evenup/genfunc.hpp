#pragma once

// Closed-form rational generating functions for the eight word classes,
// coefficient extraction through the linear recurrence induced by the
// denominator, and the telescoping decomposition used to collapse the
// cyclic even-up sum.

#include <string>
#include <vector>

#include "evenup/errors.hpp"
#include "evenup/numeric.hpp"
#include "evenup/poly.hpp"
#include "evenup/series.hpp"
#include "evenup/words.hpp"

namespace evenup {

// num/den in lowest structural form: den(0) != 0 and den(0) > 0.
// No polynomial gcd reduction is performed; expansion does not need it.
struct RationalGF {
  IntPoly num;
  IntPoly den = IntPoly::constant(1);

  friend bool operator==(const RationalGF&, const RationalGF&) = default;
};

inline RationalGF make_gf(IntPoly num, IntPoly den) {
  if (den.coeff(0) == 0)
    throw std::invalid_argument("generating function denominator has zero constant term");
  if (den.coeff(0) < 0) {
    num = -num;
    den = -den;
  }
  return RationalGF{std::move(num), std::move(den)};
}

inline RationalGF gf_from_poly(IntPoly p) {
  return RationalGF{std::move(p), IntPoly::constant(1)};
}

inline RationalGF gf_constant(Int v) {
  return gf_from_poly(IntPoly::constant(std::move(v)));
}

inline RationalGF operator+(const RationalGF& a, const RationalGF& b) {
  return make_gf(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline RationalGF operator-(const RationalGF& a, const RationalGF& b) {
  return make_gf(a.num * b.den - b.num * a.den, a.den * b.den);
}

inline RationalGF operator*(const RationalGF& a, const RationalGF& b) {
  return make_gf(a.num * b.num, a.den * b.den);
}

inline RationalGF operator-(const RationalGF& a) {
  return RationalGF{-a.num, a.den};
}

// Coefficients a_0..a_n_max via den_0 * a_n = num_n - sum_{i>=1} den_i * a_{n-i}.
// Counts must come out as nonnegative integers; anything else signals a
// wrong formula and raises integrity_error.
inline std::vector<Int> expand_gf(const RationalGF& gf, int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const IntPoly& p = gf.num;
  const IntPoly& q = gf.den;
  std::vector<Rat> a(static_cast<std::size_t>(n_max) + 1, Rat(0));
  std::vector<Int> out;
  out.reserve(a.size());
  const std::size_t qdeg = static_cast<std::size_t>(q.degree());
  for (std::size_t n = 0; n < a.size(); ++n) {
    Rat acc(p.coeff(n));
    for (std::size_t i = 1; i <= std::min(n, qdeg); ++i)
      acc -= Rat(q.coeff(i)) * a[n - i];
    a[n] = acc / Rat(q.coeff(0));
    a[n].canonicalize();
    if (!is_integer(a[n]) || a[n] < 0)
      throw integrity_error("expansion produced a non-integer or negative "
                            "coefficient at n=" +
                            std::to_string(n) + ": " + to_string(a[n]));
    out.push_back(a[n].get_num());
  }
  return out;
}

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

inline IntPoly xp1_pow(long e) {  // (x+1)^e
  return poly_pow(IntPoly{Int(1), Int(1)}, static_cast<unsigned>(e));
}

inline IntPoly omx_pow(long e) {  // (1-x)^e
  return poly_pow(IntPoly{Int(1), Int(-1)}, static_cast<unsigned>(e));
}

}  // namespace detail

// The closed form for each of the eight classes, as a single
// numerator/denominator pair with all additive terms combined.
//
// The cyclic weakly odd-up form is the logarithmic-derivative identity
// F(x) = 1 - x Q'(x)/Q(x), where Q(x) is the linear weakly odd-up
// denominator: Q = det(I - xM) for the weak odd-up transition matrix M,
// sum_{n>=1} trace(M^n) x^n = -x Q'/Q, and trace(M) = k, so the x^1
// coefficient is k as required.
inline RationalGF build_gf(WordClass c, int k) {
  using detail::ceil_div;
  using detail::floor_div;
  using detail::omx_pow;
  using detail::xp1_pow;
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");

  const bool strict = c.strictness == Strictness::strict;
  const bool even = c.parity == Parity::even_up;
  const bool cyclic = c.topology == Topology::cyclic;
  const IntPoly one = IntPoly::constant(1);
  const IntPoly two = IntPoly::constant(2);
  const IntPoly x = IntPoly::x();

  if (strict && even && !cyclic)
    return make_gf(xp1_pow(floor_div(k, 2)),
                   two - xp1_pow(floor_div(k + 1, 2)));

  if (strict && !even && !cyclic)
    return make_gf(xp1_pow(floor_div(k + 1, 2)),
                   x + two - xp1_pow(floor_div(k + 2, 2)));

  if (strict && even && cyclic) {
    RationalGF frac = make_gf(Int(floor_div(k + 1, 2)) * xp1_pow(floor_div(k - 1, 2)),
                              xp1_pow(floor_div(k + 1, 2)) - two);
    return gf_constant(1) +
           gf_from_poly(x) * (gf_constant(floor_div(k, 2)) - frac);
  }

  if (strict && !even && cyclic) {
    RationalGF frac =
        make_gf(Int(floor_div(k + 2, 2)) * xp1_pow(floor_div(k, 2)) - one,
                x + two - xp1_pow(floor_div(k + 2, 2)));
    return gf_constant(1) +
           gf_from_poly(x) * (gf_constant(floor_div(k + 1, 2)) + frac);
  }

  if (!strict && even && !cyclic) {
    if (k % 2 == 0) {
      long m = (k + 2) / 2;
      return make_gf(one, omx_pow(m) + omx_pow(m - 1) + x - one);
    }
    long m = (k + 1) / 2;
    return make_gf(one, omx_pow(m) + omx_pow(m - 1) - one);
  }

  if (!strict && !even && !cyclic) {
    if (k % 2 == 0) return make_gf(one, Int(2) * omx_pow(k / 2) - one);
    return make_gf(one, Int(2) * omx_pow((k + 1) / 2) + x - one);
  }

  if (!strict && even && cyclic) {
    long m = ceil_div(k, 2);
    RationalGF lead = make_gf(Int(floor_div(k, 2)) * x, one - x);
    RationalGF frac = make_gf(Int(2) * omx_pow(m) + Int(m) * x - one,
                              (two - x) * omx_pow(m) + x - one);
    return lead + frac;
  }

  // cyclic weakly odd-up
  if (k % 2 == 0)
    return gf_constant(1) + make_gf(Int(k) * x * omx_pow(k / 2 - 1),
                                    Int(2) * omx_pow(k / 2) - one);
  long m = (k - 1) / 2;
  return gf_constant(1) +
         make_gf(x * (Int(k + 1) * omx_pow(m) - one),
                 Int(2) * omx_pow(m + 1) + x - one);
}

// Second algebraic arrangement of the cyclic even-up closed form, the
// one the telescoped sum produces directly. Must expand identically to
// build_gf(cyclic even-up).
inline RationalGF cyclic_even_up_gf_telescoped(int k) {
  using detail::floor_div;
  using detail::xp1_pow;
  if (k < 1) throw std::invalid_argument("alphabet size must be >= 1");
  const IntPoly two = IntPoly::constant(2);
  RationalGF frac =
      make_gf(Int(floor_div(k + 1, 2)) * xp1_pow(floor_div(k - 1, 2)),
              two - xp1_pow(floor_div(k + 1, 2)));
  return gf_constant(1) +
         gf_from_poly(IntPoly::x()) * (gf_constant(floor_div(k, 2)) + frac);
}

// Partial-sum witness G(i) = (i+1)(x+1)^i / (2 - (x+1)^{i+1}) whose
// differences G(i) - G(i-1) reproduce the cyclic even-up summands;
// G(-1) = 0 by convention.
inline RationalGF telescoping_witness(int i) {
  if (i < 0) return RationalGF{};
  return make_gf(Int(i + 1) * detail::xp1_pow(i),
                 IntPoly::constant(2) - detail::xp1_pow(i + 1));
}

// The i-th summand of the collapsed sum:
//   [(x+1)^{3i} - 4(x+1)^{2i} - 2ix(x+1)^{2i-1} + 4(x+1)^i + 4ix(x+1)^{i-1}]
//   / [(2 - (x+1)^i)^2 (2 - (x+1)^{i+1})].
// For i = 0 the two terms with factor i vanish, avoiding the negative
// exponents.
inline RationalGF telescoping_summand(int i) {
  using detail::xp1_pow;
  if (i < 0) throw std::invalid_argument("summand index must be >= 0");
  const IntPoly x = IntPoly::x();
  IntPoly num = xp1_pow(3 * i) - Int(4) * xp1_pow(2 * i) + Int(4) * xp1_pow(i);
  if (i >= 1)
    num = num - Int(2 * i) * x * xp1_pow(2 * i - 1) +
          Int(4 * i) * x * xp1_pow(i - 1);
  IntPoly g = IntPoly::constant(2) - xp1_pow(i);
  IntPoly den = g * g * (IntPoly::constant(2) - xp1_pow(i + 1));
  return make_gf(std::move(num), std::move(den));
}

inline Series gf_to_series(const RationalGF& gf, std::size_t order) {
  return series_div(Series::from_poly(gf.num, order),
                    Series::from_poly(gf.den, order));
}

// Verifies G(i) - G(i-1) = summand(i) as series up to the given order,
// for every 0 <= i <= i_max.
inline bool telescoping_check(int i_max, std::size_t order) {
  for (int i = 0; i <= i_max; ++i) {
    Series lhs = gf_to_series(telescoping_witness(i), order) -
                 gf_to_series(telescoping_witness(i - 1), order);
    if (lhs != gf_to_series(telescoping_summand(i), order)) return false;
  }
  return true;
}

}  // namespace evenup
