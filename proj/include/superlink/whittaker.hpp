#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "superlink/root_data.hpp"
#include "superlink/weyl.hpp"

namespace superlink {

// A character of n_0^+ identified with its support Pi_zeta (0-based indices
// into Pi_0). Scalar values are carried as metadata only.
class WhittakerCharacter {
 public:
  WhittakerCharacter() = default;
  WhittakerCharacter(const RootDatum& datum, std::vector<std::size_t> support,
                     std::map<std::size_t, Rational> values = {});

  static WhittakerCharacter zero() { return {}; }
  static WhittakerCharacter nonsingular(const RootDatum& datum);

  const std::vector<std::size_t>& support() const { return support_; }
  const std::map<std::size_t, Rational>& values() const { return values_; }

  // Equality ignores the scalar values.
  friend bool operator==(const WhittakerCharacter& a, const WhittakerCharacter& b) {
    return a.support_ == b.support_;
  }

 private:
  std::vector<std::size_t> support_;
  std::map<std::size_t, Rational> values_;
};

struct SimpleWhittakerParam {
  std::string datum;
  WhittakerCharacter zeta;
  Weight rep;

  friend bool operator==(const SimpleWhittakerParam& a, const SimpleWhittakerParam& b) {
    return a.datum == b.datum && a.zeta == b.zeta && a.rep == b.rep;
  }
};

Parabolic weyl_subgroup_of(const RootDatum& datum, const WhittakerCharacter& zeta);
bool is_nonsingular(const RootDatum& datum, const WhittakerCharacter& zeta);

SimpleWhittakerParam classify_simple(const RootDatum& datum, const Weight& lambda,
                                     const WhittakerCharacter& zeta);

// Singular simple roots of a dominant integral nu.
std::vector<std::size_t> upsilon_of(const RootDatum& datum, const Weight& nu);

// Integral dominant nu with upsilon_of(nu) = Pi_zeta: (nu + rho0) is constant
// on each connected piece of Pi_zeta, steps by one across the remaining
// simple roots, and vanishes on sign-type coordinates exactly when the
// corresponding long/short simple root is in Pi_zeta.
Weight dominant_partner(const RootDatum& datum, const WhittakerCharacter& zeta);

bool in_X0(const RootDatum& datum, const Weight& nu, const Weight& lambda);
// Equals in_X0 for the type-I families and reductive data; closed form for
// osp(3|2) with nonsingular nu. Other combinations throw UnsupportedInput.
bool in_X(const RootDatum& datum, const Weight& nu, const Weight& lambda);

}  // namespace superlink
