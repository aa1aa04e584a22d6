#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "superlink/root_data.hpp"
#include "superlink/weight.hpp"

namespace superlink {

struct Typicality {
  enum class Kind { Typical, Atypical, NotApplicable };
  Kind kind = Kind::Typical;
  std::size_t degree = 0;

  friend bool operator==(const Typicality&, const Typicality&) = default;
};

// Maximal number of mutually orthogonal isotropic roots annihilating
// lambda + rho. p(n) reports NotApplicable.
Typicality typicality(const RootDatum& datum, const Weight& lambda);

// gl(m|n): lambda + rho = (a | b); the entries of a and of -b that cancel in
// a maximal multiset matching are removed.
struct GlLabel {
  std::vector<Rational> core_a;
  std::vector<Rational> core_b;
  std::size_t atyp = 0;
  friend bool operator==(const GlLabel&, const GlLabel&) = default;
};

// osp(2|2n): lambda + rho = (e; d). Typical: eps = e, core = sorted |d_i|.
// Atypical: one |d_i| = |e| is removed and eps holds e mod 1.
struct OspLabel {
  std::vector<Rational> core;
  Rational eps{0};
  std::size_t atyp = 0;
  friend bool operator==(const OspLabel&, const OspLabel&) = default;
};

// p(n): j = number of odd entries of lambda + rho0 - shift * omega, where
// shift is the common fractional part of the coordinates.
struct PLabel {
  std::size_t j = 0;
  Rational shift{0};
  friend bool operator==(const PLabel&, const PLabel&) = default;
};

// osp(3|2): lambda + rho = (a, b) up to independent sign changes. Atypical
// weights (|a| = |b|) collapse to one class per residue of a mod 1 and sign.
struct Osp32Label {
  std::size_t atyp = 0;
  Rational abs_delta{0};
  Rational abs_eps{0};
  Rational residue{0};
  friend bool operator==(const Osp32Label&, const Osp32Label&) = default;
};

struct ReductiveLabel {
  Weight rep;
  friend bool operator==(const ReductiveLabel&, const ReductiveLabel&) = default;
};

using BlockLabel = std::variant<GlLabel, OspLabel, PLabel, Osp32Label, ReductiveLabel>;

// Canonical JSON, keys in a fixed order, rationals as strings.
std::string label_to_json(const BlockLabel& label);
BlockLabel label_from_json(const std::string& text);

BlockLabel block_label(const RootDatum& datum, const Weight& lambda);
BlockLabel chi_label_osp32(const RootDatum& datum, const Weight& lambda);

enum class LinkStatus { Linked, NotLinked, LinkedSufficientOnly, NoLinkKnown };

std::string to_string(LinkStatus status);

LinkStatus same_block(const RootDatum& datum, const Weight& lambda, const Weight& mu);

}  // namespace superlink
