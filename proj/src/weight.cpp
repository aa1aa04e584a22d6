#include "superlink/weight.hpp"

#include <algorithm>

#include "superlink/errors.hpp"

namespace superlink {

Weight Weight::from_ints(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> coords;
  coords.reserve(values.size());
  for (auto v : values) coords.emplace_back(v);
  return Weight(std::move(coords));
}

bool Weight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r == 0; });
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.dim() != dim()) throw DimensionMismatch("weight dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.dim() != dim()) throw DimensionMismatch("weight dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& c) {
  for (auto& x : coords_) x *= c;
  return *this;
}

bool operator<(const Weight& a, const Weight& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

std::string Weight::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ',';
    out += to_string(coords_[i]);
  }
  return out + ")";
}

std::size_t WeightHash::operator()(const Weight& w) const {
  std::size_t h = w.dim();
  for (const auto& c : w.coords()) h ^= hash_value(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace superlink
