#include "superlink/rational.hpp"

#include <charconv>
#include <functional>

#include "superlink/errors.hpp"

namespace superlink {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("invalid rational literal '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s, text));
  const std::int64_t num = parse_int(trim(s.substr(0, slash)), text);
  const std::int64_t den = parse_int(trim(s.substr(slash + 1)), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t floor(const Rational& r) {
  const std::int64_t n = r.numerator();
  const std::int64_t d = r.denominator();
  std::int64_t q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

std::int64_t ceil(const Rational& r) { return -floor(-r); }

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

std::size_t hash_value(const Rational& r) {
  const std::size_t h1 = std::hash<std::int64_t>{}(r.numerator());
  const std::size_t h2 = std::hash<std::int64_t>{}(r.denominator());
  return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

}  // namespace superlink
