#include "superlink/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "superlink/errors.hpp"

namespace superlink {

WeylElement WeylElement::identity(std::size_t dim) {
  std::vector<std::int32_t> image(dim);
  for (std::size_t i = 0; i < dim; ++i) image[i] = static_cast<std::int32_t>(i + 1);
  return WeylElement(std::move(image));
}

WeylElement::WeylElement(std::vector<std::int32_t> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (auto v : image_) {
    const auto j = static_cast<std::size_t>(std::abs(v));
    if (v == 0 || j > image_.size() || hit[j - 1]) throw DomainError("not a signed permutation");
    hit[j - 1] = true;
  }
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<std::int32_t>(i + 1)) return false;
  return true;
}

Weight WeylElement::apply(const Weight& lambda) const {
  if (lambda.dim() != dim()) throw DimensionMismatch("Weyl element and weight dimensions differ");
  Weight out(dim());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const auto j = static_cast<std::size_t>(std::abs(image_[i]) - 1);
    out[j] = image_[i] > 0 ? lambda[i] : -lambda[i];
  }
  return out;
}

WeylElement WeylElement::inverse() const {
  std::vector<std::int32_t> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    const auto j = static_cast<std::size_t>(std::abs(image_[i]) - 1);
    inv[j] = (image_[i] > 0 ? 1 : -1) * static_cast<std::int32_t>(i + 1);
  }
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("Weyl element dimensions differ");
  std::vector<std::int32_t> out(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const std::int32_t mid = b.image_[i];
    const std::int32_t img = a.image_[static_cast<std::size_t>(std::abs(mid) - 1)];
    out[i] = mid > 0 ? img : -img;
  }
  return WeylElement(std::move(out));
}

std::string WeylElement::to_cycle_string() const {
  auto map = [&](std::int32_t letter) {
    const std::int32_t img = image_[static_cast<std::size_t>(std::abs(letter) - 1)];
    return letter > 0 ? img : -img;
  };
  std::set<std::int32_t> visited;
  std::string out;
  for (std::int32_t i = 1; i <= static_cast<std::int32_t>(dim()); ++i) {
    if (visited.count(i)) continue;
    std::vector<std::int32_t> cycle{i};
    visited.insert(i);
    for (std::int32_t cur = map(i); cur != i; cur = map(cur)) {
      cycle.push_back(cur);
      visited.insert(cur);
    }
    const bool self_paired = std::find(cycle.begin(), cycle.end(), -i) != cycle.end();
    if (!self_paired)
      for (auto c : cycle) visited.insert(-c);
    if (cycle.size() == 1) continue;
    out += '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out += ' ';
      out += std::to_string(cycle[k]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

WeylElement WeylElement::parse_cycles(std::string_view text, std::size_t dim) {
  WeylElement result = identity(dim);
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("invalid Weyl element '" + std::string(text) + "': " + why);
  };
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  if (text.substr(i) == "e" || i == text.size()) return result;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    ++i;
    std::vector<std::int32_t> letters;
    while (true) {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
      if (i == text.size()) fail("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      std::size_t j = i;
      if (text[j] == '-' || text[j] == '+') ++j;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i) fail("expected a coordinate index");
      const int v = std::stoi(std::string(text.substr(i, j - i)));
      if (v == 0 || static_cast<std::size_t>(std::abs(v)) > dim) fail("index out of range");
      letters.push_back(v);
      i = j;
    }
    if (letters.empty()) continue;
    for (std::size_t a = 0; a < letters.size(); ++a)
      for (std::size_t b = a + 1; b < letters.size(); ++b)
        if (letters[a] == letters[b]) fail("repeated letter in a cycle");
    std::vector<std::int32_t> image(dim, 0);
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const std::int32_t from = letters[k];
      const std::int32_t to = letters[(k + 1) % letters.size()];
      const auto idx = static_cast<std::size_t>(std::abs(from) - 1);
      const std::int32_t value = from > 0 ? to : -to;
      if (image[idx] != 0 && image[idx] != value) fail("inconsistent signed cycle");
      image[idx] = value;
    }
    for (std::size_t k = 0; k < dim; ++k)
      if (image[k] == 0) image[k] = static_cast<std::int32_t>(k + 1);
    try {
      result = result * WeylElement(std::move(image));
    } catch (const DomainError&) {
      fail("cycle is not a signed permutation");
    }
  }
  return result;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const {
  std::size_t h = w.dim();
  for (auto v : w.image()) h = h * 1000003u ^ static_cast<std::size_t>(v + 64);
  return h;
}

Parabolic Parabolic::full(const RootDatum& datum) {
  Parabolic p;
  for (std::size_t i = 0; i < datum.simple_even.size(); ++i) p.simple.push_back(i);
  return p;
}

bool Parabolic::contains(std::size_t simple_index) const {
  return std::binary_search(simple.begin(), simple.end(), simple_index);
}

Parabolic make_parabolic(const RootDatum& datum, std::vector<std::size_t> simple) {
  std::sort(simple.begin(), simple.end());
  simple.erase(std::unique(simple.begin(), simple.end()), simple.end());
  for (auto i : simple) {
    if (i >= datum.simple_even.size()) {
      throw DomainError("simple root index " + std::to_string(i + 1) + " out of range for " +
                        datum.name);
    }
  }
  return Parabolic{std::move(simple)};
}

std::vector<Root> positive_roots(const RootDatum& datum, const Parabolic& sub) {
  std::vector<Root> out;
  for (std::size_t k = 0; k < datum.even_positive.size(); ++k) {
    const auto& coeffs = datum.even_positive_coeffs[k];
    bool inside = true;
    for (std::size_t i = 0; i < coeffs.size() && inside; ++i)
      if (coeffs[i] != 0 && !sub.contains(i)) inside = false;
    if (inside) out.push_back(datum.even_positive[k]);
  }
  return out;
}

Weight reflect(const RootDatum& datum, const Weight& alpha, const Weight& lambda) {
  return lambda - pairing_coroot(datum, lambda, alpha) * alpha;
}

WeylElement reflection_element(const RootDatum& datum, const Weight& alpha) {
  std::vector<std::int32_t> image(datum.dim);
  for (std::size_t i = 0; i < datum.dim; ++i) {
    Weight e(datum.dim);
    e[i] = 1;
    const Weight r = reflect(datum, alpha, e);
    std::int32_t target = 0;
    for (std::size_t j = 0; j < datum.dim; ++j) {
      if (r[j] == 0) continue;
      if (target != 0 || (r[j] != 1 && r[j] != -1)) {
        throw DomainError("reflection in " + alpha.str() + " is not a signed permutation");
      }
      target = (r[j] > 0 ? 1 : -1) * static_cast<std::int32_t>(j + 1);
    }
    image[i] = target;
  }
  return WeylElement(std::move(image));
}

WeylElement simple_reflection(const RootDatum& datum, std::size_t simple_index) {
  if (simple_index >= datum.simple_even.size()) throw DomainError("simple root index out of range");
  return reflection_element(datum, datum.simple_even[simple_index].weight);
}

bool in_weyl_group(const RootDatum& datum, const WeylElement& w) {
  if (w.dim() != datum.dim) return false;
  std::vector<int> component(datum.dim, -1);
  for (std::size_t c = 0; c < datum.weyl_components.size(); ++c)
    for (auto i : datum.weyl_components[c].coords) component[i] = static_cast<int>(c);
  for (std::size_t i = 0; i < datum.dim; ++i) {
    const std::int32_t v = w.image()[i];
    const auto j = static_cast<std::size_t>(std::abs(v) - 1);
    if (component[i] < 0) {
      if (v != static_cast<std::int32_t>(i + 1)) return false;
      continue;
    }
    if (component[j] != component[i]) return false;
    if (v < 0 && datum.weyl_components[static_cast<std::size_t>(component[i])].type == WeylType::A)
      return false;
  }
  return true;
}

WeylElement parse_weyl_element(const RootDatum& datum, std::string_view text) {
  WeylElement w = WeylElement::parse_cycles(text, datum.dim);
  if (!in_weyl_group(datum, w)) {
    throw DomainError("'" + std::string(text) + "' is not in the Weyl group of " + datum.name);
  }
  return w;
}

Weight dot(const RootDatum& datum, const WeylElement& w, const Weight& lambda) {
  check_dim(datum, lambda);
  return w.apply(lambda + datum.rho0) - datum.rho0;
}

bool is_dominant(const RootDatum& datum, const Weight& lambda) {
  const Weight shifted = lambda + datum.rho0;
  for (const auto& a : datum.even_positive) {
    const Rational p = pairing_coroot(datum, shifted, a);
    if (is_integer(p) && p < 0) return false;
  }
  return true;
}

bool is_antidominant(const RootDatum& datum, const Weight& lambda, const Parabolic& sub) {
  const Weight shifted = lambda + datum.rho0;
  for (const auto& a : positive_roots(datum, sub)) {
    const Rational p = pairing_coroot(datum, shifted, a);
    if (is_integer(p) && p > 0) return false;
  }
  return true;
}

std::pair<Weight, WeylElement> antidominant_rep(const RootDatum& datum, const Weight& lambda,
                                                const Parabolic& sub) {
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) {
    throw UnsupportedInput("antidominant representative needs an integral weight, got " +
                           format_weight(datum, lambda));
  }
  Weight shifted = lambda + datum.rho0;
  WeylElement w = WeylElement::identity(datum.dim);
  // Each step strictly shortens the remaining distance to the antidominant
  // chamber, so the loop ends after at most l(w_0) reflections.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto idx : sub.simple) {
      const auto& alpha = datum.simple_even[idx];
      if (pairing_coroot(datum, shifted, alpha) > 0) {
        shifted = reflect(datum, alpha, shifted);
        w = simple_reflection(datum, idx) * w;
        changed = true;
        break;
      }
    }
  }
  return {shifted - datum.rho0, w};
}

std::vector<Root> stabilizer_roots(const RootDatum& datum, const Weight& lambda) {
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) {
    throw UnsupportedInput("stabilizer roots need an integral weight, got " +
                           format_weight(datum, lambda));
  }
  const Weight shifted = lambda + datum.rho0;
  std::vector<Root> out;
  for (const auto& a : datum.even_positive)
    if (pairing_coroot(datum, shifted, a) == 0) out.push_back(a);
  return out;
}

std::vector<WeylElement> generate_subgroup(std::size_t dim, const std::vector<WeylElement>& generators,
                                           std::size_t cap) {
  std::vector<WeylElement> elements{WeylElement::identity(dim)};
  std::unordered_set<WeylElement, WeylElementHash> seen(elements.begin(), elements.end());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      WeylElement next = g * elements[head];
      if (seen.insert(next).second) {
        if (elements.size() >= cap) {
          throw CapExceeded("subgroup enumeration exceeds cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
      }
    }
  }
  return elements;
}

std::vector<WeylElement> enumerate_parabolic(const RootDatum& datum, const Parabolic& sub, std::size_t cap) {
  std::vector<WeylElement> gens;
  for (auto idx : sub.simple) gens.push_back(simple_reflection(datum, idx));
  return generate_subgroup(datum.dim, gens, cap);
}

namespace {

bool is_positive_even(const RootDatum& datum, const Weight& beta) {
  return std::any_of(datum.even_positive.begin(), datum.even_positive.end(),
                     [&](const Root& r) { return r.weight == beta; });
}

}  // namespace

std::size_t length(const RootDatum& datum, const WeylElement& w) {
  std::size_t count = 0;
  for (const auto& a : datum.even_positive)
    if (!is_positive_even(datum, w.apply(a.weight))) ++count;
  return count;
}

WeylElement longest_element(const RootDatum& datum, const Parabolic& sub) {
  WeylElement w = WeylElement::identity(datum.dim);
  bool grew = true;
  while (grew) {
    grew = false;
    for (auto idx : sub.simple) {
      if (is_positive_even(datum, w.apply(datum.simple_even[idx].weight))) {
        w = w * simple_reflection(datum, idx);
        grew = true;
        break;
      }
    }
  }
  return w;
}

std::vector<std::size_t> reduced_word(const RootDatum& datum, const WeylElement& w) {
  if (!in_weyl_group(datum, w)) throw DomainError("element is not in the Weyl group of " + datum.name);
  std::vector<std::size_t> word;
  WeylElement cur = w;
  while (!cur.is_identity()) {
    bool found = false;
    for (std::size_t idx = 0; idx < datum.simple_even.size(); ++idx) {
      if (!is_positive_even(datum, cur.apply(datum.simple_even[idx].weight))) {
        word.push_back(idx);
        cur = cur * simple_reflection(datum, idx);
        found = true;
        break;
      }
    }
    if (!found) throw DomainError("element has no descent but is not the identity");
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement from_word(const RootDatum& datum, const std::vector<std::size_t>& word) {
  WeylElement w = WeylElement::identity(datum.dim);
  for (auto idx : word) w = w * simple_reflection(datum, idx);
  return w;
}

std::vector<Weight> orbit_dot(const RootDatum& datum, const Weight& lambda, const Parabolic& sub,
                              std::size_t cap) {
  check_dim(datum, lambda);
  std::vector<Weight> orbit{lambda};
  std::unordered_set<Weight, WeightHash> seen{lambda};
  std::vector<WeylElement> gens;
  for (auto idx : sub.simple) gens.push_back(simple_reflection(datum, idx));
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : gens) {
      Weight next = dot(datum, g, orbit[head]);
      if (seen.insert(next).second) {
        if (orbit.size() >= cap) throw CapExceeded("orbit exceeds cap of " + std::to_string(cap));
        orbit.push_back(std::move(next));
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace superlink
