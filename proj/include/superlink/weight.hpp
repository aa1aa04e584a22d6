#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "superlink/rational.hpp"

namespace superlink {

// A vector in h* written in the owning datum's coordinate basis.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim, Rational(0)) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight from_ints(std::initializer_list<std::int64_t> values);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  Weight& operator*=(const Rational& c);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& c, Weight a) { return a *= c; }
  friend Weight operator-(Weight a) { return a *= Rational(-1); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords_ == b.coords_; }
  // Lexicographic; used only for deterministic ordering.
  friend bool operator<(const Weight& a, const Weight& b);

  // Plain "(c1,c2,...)" rendering without family separators.
  std::string str() const;

 private:
  std::vector<Rational> coords_;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

}  // namespace superlink
