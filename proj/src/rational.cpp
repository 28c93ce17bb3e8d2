#include "entropy_adjoint/rational.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>

#include "entropy_adjoint/errors.hpp"

namespace entropy_adjoint {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InputError("invalid rational '" + std::string(whole) + "'");
  }
  return value;
}

std::optional<std::int64_t> exact_root(std::int64_t value, std::int64_t degree) {
  if (value < 0) return std::nullopt;
  if (value <= 1 || degree == 1) return value;
  auto guess = static_cast<std::int64_t>(std::llround(std::pow(static_cast<double>(value), 1.0 / degree)));
  for (std::int64_t r = std::max<std::int64_t>(guess - 1, 0); r <= guess + 1; ++r) {
    std::int64_t acc = 1;
    bool overflow = false;
    for (std::int64_t i = 0; i < degree && !overflow && acc <= value; ++i) overflow = __builtin_mul_overflow(acc, r, &acc);
    if (!overflow && acc == value) return r;
  }
  return std::nullopt;
}

std::optional<std::int64_t> checked_power(std::int64_t base, std::int64_t exponent) {
  std::int64_t acc = 1;
  for (std::int64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(acc, base, &acc)) return std::nullopt;
  }
  return acc;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InputError("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_int(text.substr(0, slash), whole);
    const auto den = parse_int(text.substr(slash + 1), whole);
    if (den == 0) throw InputError("zero denominator in '" + std::string(whole) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    bool negative = text.front() == '-';
    auto int_part = text.substr(0, dot);
    auto frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.size() > 17) {
      throw InputError("invalid rational '" + std::string(whole) + "'");
    }
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    std::int64_t ip = 0;
    if (int_part != "-" && int_part != "+" && !int_part.empty()) ip = parse_int(int_part, whole);
    if (frac_part.front() == '-' || frac_part.front() == '+') {
      throw InputError("invalid rational '" + std::string(whole) + "'");
    }
    const std::int64_t fp = parse_int(frac_part, whole);
    Rational magnitude = Rational(ip < 0 ? -ip : ip) + Rational(fp, scale);
    return negative ? -magnitude : magnitude;
  }
  return Rational(parse_int(text, whole));
}

std::string to_string(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" + std::to_string(value.denominator());
}

std::string to_display(const Rational& value) {
  std::int64_t den = value.denominator();
  int twos = 0;
  int fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) return to_string(value);
  if (value.denominator() == 1) return std::to_string(value.numerator());

  const int digits = std::max(twos, fives);
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const std::int64_t scaled = value.numerator() * (scale / value.denominator());
  const bool negative = scaled < 0;
  const std::int64_t mag = negative ? -scaled : scaled;
  std::string frac = std::to_string(mag % scale);
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + std::to_string(mag / scale) + "." + frac;
}

Rational floor(const Rational& value) {
  const auto n = value.numerator();
  const auto d = value.denominator();
  auto q = n / d;
  if (n % d != 0 && n < 0) --q;
  return Rational(q);
}

Rational ceil(const Rational& value) {
  const auto n = value.numerator();
  const auto d = value.denominator();
  auto q = n / d;
  if (n % d != 0 && n > 0) ++q;
  return Rational(q);
}

bool is_integer(const Rational& value) { return value.denominator() == 1; }

double to_double(const Rational& value) {
  return static_cast<double>(value.numerator()) / static_cast<double>(value.denominator());
}

std::int64_t lcm(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

std::optional<Rational> rational_pow(const Rational& base, const Rational& exponent) {
  if (base <= 0) throw InputError("rational_pow requires a positive base");
  const auto p = exponent.numerator();
  const auto q = exponent.denominator();
  auto num_root = exact_root(base.numerator(), q);
  auto den_root = exact_root(base.denominator(), q);
  if (!num_root || !den_root) return std::nullopt;
  const std::int64_t mag = p < 0 ? -p : p;
  auto num = checked_power(*num_root, mag);
  auto den = checked_power(*den_root, mag);
  if (!num || !den) return std::nullopt;
  return p < 0 ? Rational(*den, *num) : Rational(*num, *den);
}

}  // namespace entropy_adjoint
