#ifndef POLYPROD_RATIONAL_HPP
#define POLYPROD_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace polyprod {

// Exact scalar used everywhere. mpq_class keeps values canonical (lowest
// terms, positive denominator) as long as every construction path goes
// through canonicalize(); the helpers below guarantee that.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional leading sign). Decimals, whitespace and
// zero denominators are rejected with std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical form "p/q", with "/1" omitted: "-31/4", "9", "0".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Exact 2^k for any integer k.
Rational pow2(std::int64_t k);

Rational pow(const Rational& base, unsigned long exponent);

// true iff numerator and denominator are coprime and denominator > 0.
bool is_canonical(const Rational& q);

// Decimal rendering rounded half away from zero to `places` digits.
std::string to_decimal(const Rational& q, int places = 6);

}  // namespace polyprod

#endif  // POLYPROD_RATIONAL_HPP
