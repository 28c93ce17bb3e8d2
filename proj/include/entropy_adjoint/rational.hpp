#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// With C++20 reversed candidates, boost's mixed rational/int operator==
// picks itself and recurses forever. Exact-match overloads win instead.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace entropy_adjoint {

using Rational = boost::rational<std::int64_t>;

// Accepts "p/q", "p", and terminating decimals such as "2.9" or "-0.25".
// Throws InputError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

// Decimal form when the expansion terminates ("1.2"), else "p/q".
std::string to_display(const Rational& value);

Rational floor(const Rational& value);
Rational ceil(const Rational& value);
bool is_integer(const Rational& value);
double to_double(const Rational& value);

std::int64_t lcm(std::int64_t a, std::int64_t b);

// Exact rational power base^exponent for rational exponent. Empty when the
// result is irrational (e.g. 2^(1/2)). base must be positive.
std::optional<Rational> rational_pow(const Rational& base, const Rational& exponent);

}  // namespace entropy_adjoint
