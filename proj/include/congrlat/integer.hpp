#pragma once

#include <gmpxx.h>

#include <string>

namespace congrlat {

// Arbitrary-precision integer. Residues, moduli and solution counts all use
// this type; counts grow like d*|m|^(n-1) and overflow fixed width quickly.
using Int = mpz_class;

// Remainder in [0, m-1]. Requires m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Divisibility with the convention 0 | x  <=>  x == 0.
inline bool divides(const Int& d, const Int& x) {
  if (d == 0) return x == 0;
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int pow_ui(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace congrlat
