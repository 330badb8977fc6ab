#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;

// gmpxx has no long long constructors; long is 64-bit on every supported
// platform here.
inline Integer make_integer(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long long num, long long den) {
  return make_rational(make_integer(num), make_integer(den));
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool fits_int64(const Integer& z) {
  static_assert(sizeof(long) == 8, "expects 64-bit long");
  return z.fits_slong_p();
}

inline long long to_int64(const Integer& z) {
  if (!fits_int64(z)) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/// Least common multiple of the denominators of a list of rationals.
inline Integer common_denominator(const std::vector<Rational>& qs) {
  Integer l = 1;
  for (const auto& q : qs) l = lcm(l, Integer(q.get_den()));
  return l;
}

}  // namespace toric
