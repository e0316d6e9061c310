#pragma once

#include <gmpxx.h>

#include <string>

namespace plethys {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; `make_rat` canonicalizes explicit fractions.
using Rat = mpq_class;
using BigInt = mpz_class;

inline Rat make_rat(long num, long den = 1) {
  Rat r{BigInt(num), BigInt(den)};
  r.canonicalize();
  return r;
}

inline Rat make_rat(const BigInt& num, const BigInt& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace plethys
