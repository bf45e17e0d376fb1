#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qlab {

// GMP keeps mpq_class values canonical after every arithmetic operation, so
// the lowest-terms / positive-denominator invariant holds for free.
using BigRational = mpq_class;
using BigInteger = mpz_class;

// Parses "p/q" or "p" (optional leading '-'); rejects decimals, blanks and a
// zero denominator with std::invalid_argument.
BigRational parse_rational(std::string_view text);

std::string to_string(const BigRational& value);

// Integer power; negative exponents invert (throws std::domain_error on 0).
BigRational pow(const BigRational& base, int exponent);

// mpq_class(num, den) does not reduce; this does.
inline BigRational make_rational(long num, long den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRational& value) { return value.get_den() == 1; }

}  // namespace qlab
