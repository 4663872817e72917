#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace plexus {

// Exact arithmetic throughout the library: coefficients are rationals,
// serial numbers are arbitrary-precision naturals.
using Rational = mpq_class;
using Natural = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }
inline std::string to_string(const Natural& n) { return n.get_str(); }

inline Natural pow2(unsigned long e) {
  Natural n = 1;
  n <<= e;
  return n;
}

inline Natural binomial(unsigned long n, unsigned long k) {
  Natural b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

inline unsigned long bit_length(const Natural& n) {
  return n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
}

}  // namespace plexus
