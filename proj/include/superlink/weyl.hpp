#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superlink/limits.hpp"
#include "superlink/root_data.hpp"
#include "superlink/weight.hpp"

namespace superlink {

// Signed permutation of the coordinate basis: w(e_i) = sign * e_j with
// image_[i] = sign * (j + 1). Every even Weyl group handled here (products
// of S_k and hyperoctahedral groups) embeds this way.
class WeylElement {
 public:
  WeylElement() = default;
  static WeylElement identity(std::size_t dim);
  // `image` uses the signed 1-based convention above.
  explicit WeylElement(std::vector<std::int32_t> image);

  std::size_t dim() const { return image_.size(); }
  const std::vector<std::int32_t>& image() const { return image_; }
  bool is_identity() const;

  Weight apply(const Weight& lambda) const;
  WeylElement inverse() const;

  // (a * b)(x) = a(b(x)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.image_ == b.image_; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.image_ < b.image_; }

  // Cycle notation on signed 1-based coordinate letters, "()" for identity.
  std::string to_cycle_string() const;
  static WeylElement parse_cycles(std::string_view text, std::size_t dim);

 private:
  std::vector<std::int32_t> image_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const;
};

// Parabolic subgroup generated by the simple reflections of a subset of Pi_0
// (0-based indices into RootDatum::simple_even, kept sorted).
struct Parabolic {
  std::vector<std::size_t> simple;

  static Parabolic full(const RootDatum& datum);
  static Parabolic trivial() { return {}; }
  bool contains(std::size_t simple_index) const;
  friend bool operator==(const Parabolic&, const Parabolic&) = default;
};

Parabolic make_parabolic(const RootDatum& datum, std::vector<std::size_t> simple);

// Positive even roots lying in the span of the parabolic's simple roots.
std::vector<Root> positive_roots(const RootDatum& datum, const Parabolic& sub);

Weight reflect(const RootDatum& datum, const Weight& alpha, const Weight& lambda);
inline Weight reflect(const RootDatum& datum, const Root& alpha, const Weight& lambda) {
  return reflect(datum, alpha.weight, lambda);
}

WeylElement reflection_element(const RootDatum& datum, const Weight& alpha);
WeylElement simple_reflection(const RootDatum& datum, std::size_t simple_index);

// Whether a signed permutation belongs to the even Weyl group of the datum.
bool in_weyl_group(const RootDatum& datum, const WeylElement& w);
WeylElement parse_weyl_element(const RootDatum& datum, std::string_view text);

// w . lambda = w(lambda + rho0) - rho0.
Weight dot(const RootDatum& datum, const WeylElement& w, const Weight& lambda);

bool is_dominant(const RootDatum& datum, const Weight& lambda);
bool is_antidominant(const RootDatum& datum, const Weight& lambda, const Parabolic& sub);
inline bool is_antidominant(const RootDatum& datum, const Weight& lambda) {
  return is_antidominant(datum, lambda, Parabolic::full(datum));
}

// The unique sub-antidominant weight in the sub-dot-orbit of an integral
// lambda, with a witness w such that w . lambda = rep.
std::pair<Weight, WeylElement> antidominant_rep(const RootDatum& datum, const Weight& lambda,
                                                const Parabolic& sub);

// {alpha in Phi_0^+ : <lambda + rho0, alpha^vee> = 0}.
std::vector<Root> stabilizer_roots(const RootDatum& datum, const Weight& lambda);

// All elements of the subgroup generated by `generators`, identity first.
std::vector<WeylElement> generate_subgroup(std::size_t dim, const std::vector<WeylElement>& generators,
                                           std::size_t cap = kDefaultSubgroupCap);
std::vector<WeylElement> enumerate_parabolic(const RootDatum& datum, const Parabolic& sub,
                                             std::size_t cap = kDefaultSubgroupCap);

std::size_t length(const RootDatum& datum, const WeylElement& w);
WeylElement longest_element(const RootDatum& datum, const Parabolic& sub);
// Reduced word as 0-based indices into Pi_0; w = s_{word[0]} s_{word[1]} ...
std::vector<std::size_t> reduced_word(const RootDatum& datum, const WeylElement& w);
WeylElement from_word(const RootDatum& datum, const std::vector<std::size_t>& word);

// Dot-orbit of lambda under the parabolic, sorted.
std::vector<Weight> orbit_dot(const RootDatum& datum, const Weight& lambda, const Parabolic& sub,
                              std::size_t cap = kDefaultSubgroupCap);

}  // namespace superlink
