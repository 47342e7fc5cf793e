#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

#include "solidring/errors.hpp"

namespace solidring {

using Int = mpz_class;       // arbitrary-precision integer
using Nat = mpz_class;       // nonnegative by contract of the operations below
using Rational = mpq_class;  // canonical form: lowest terms, denominator > 0

/// Deterministic primality via trial division. Correct for any size; intended
/// for inputs up to ~2^64 (larger values work but slowly).
inline bool is_prime(const Nat& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  Nat d = 5;
  while (d * d <= n) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
    d += 6;
  }
  return true;
}

inline void require_prime(const Nat& p) {
  if (!is_prime(p)) throw DomainError(p.get_str() + " is not prime");
}

/// Exponent of p in the factorization of n. Requires p prime and n >= 1;
/// n = 0 is rejected (the valuation would be infinite).
inline Nat vp(const Nat& p, const Nat& n) {
  require_prime(p);
  if (n < 1) throw DomainError("vp requires n >= 1");
  Nat k = 0;
  Nat m = n;
  while (m % p == 0) {
    m /= p;
    ++k;
  }
  return k;
}

/// Full factorization of n >= 1 by trial division. n = 1 gives the empty map.
inline std::map<Nat, Nat> factorize(const Nat& n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::map<Nat, Nat> out;
  Nat m = n;
  auto strip = [&](const Nat& p) {
    Nat k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (k > 0) out[p] = k;
  };
  strip(2);
  strip(3);
  Nat d = 5;
  while (d * d <= m) {
    strip(d);
    strip(d + 2);
    d += 6;
  }
  if (m > 1) out[m] = 1;
  return out;
}

/// base^exp for Nat exponents. The exponent must fit in unsigned long; the
/// result would not be materializable otherwise.
inline Nat pow_nat(const Nat& base, const Nat& exp) {
  if (exp < 0) throw DomainError("negative exponent");
  if (!exp.fits_ulong_p()) throw DomainError("exponent too large: " + exp.get_str());
  Nat out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
  return out;
}

/// lcm in the "characteristic" monoid: 0 means infinite additive order and
/// absorbs.
inline Nat char_lcm(const Nat& a, const Nat& b) {
  if (a == 0 || b == 0) return 0;
  Nat out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Nat gcd_nat(const Nat& a, const Nat& b) {
  Nat out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace solidring
