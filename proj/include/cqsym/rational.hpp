#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cqsym {

/// Exact coefficient field. All algebra lives over the rationals.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" into a canonicalized rational.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& value);

/// num/den in lowest terms. The two-argument mpq_class constructor does not
/// reduce, and unreduced values compare unequal to their reduced forms.
inline Rational ratio(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

inline Rational sign_power(std::size_t exponent) {
  return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace cqsym
