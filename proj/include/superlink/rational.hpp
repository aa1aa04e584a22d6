#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

// Under C++20 the reversed candidates of boost's mixed rational/integer
// comparisons recurse into each other; exact non-template matches win.
namespace boost {
#define SUPERLINK_RATIONAL_EQ(T)                                                              \
  inline constexpr bool operator==(const rational<std::int64_t>& a, T b) {                   \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);            \
  }                                                                                           \
  inline constexpr bool operator==(T b, const rational<std::int64_t>& a) { return a == b; } \
  inline constexpr bool operator!=(const rational<std::int64_t>& a, T b) { return !(a == b); } \
  inline constexpr bool operator!=(T b, const rational<std::int64_t>& a) { return !(a == b); }
SUPERLINK_RATIONAL_EQ(int)
SUPERLINK_RATIONAL_EQ(long)
SUPERLINK_RATIONAL_EQ(long long)
#undef SUPERLINK_RATIONAL_EQ
}  // namespace boost

namespace superlink {

using Rational = boost::rational<std::int64_t>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

// Largest integer not exceeding r.
std::int64_t floor(const Rational& r);
std::int64_t ceil(const Rational& r);

// r - floor(r), in [0, 1).
Rational frac(const Rational& r);

std::size_t hash_value(const Rational& r);

}  // namespace superlink
