#pragma once

// Exact arithmetic aliases. All counting and series work is done over
// arbitrary-precision integers and rationals (GMP); no floating point.

#include <gmpxx.h>

#include <string>

namespace evenup {

using Int = mpz_class;
using Rat = mpq_class;

inline Int ipow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& q) {
  Rat c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace evenup
