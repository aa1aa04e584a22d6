#include "superlink/whittaker.hpp"

#include <algorithm>

#include "superlink/errors.hpp"

namespace superlink {

WhittakerCharacter::WhittakerCharacter(const RootDatum& datum, std::vector<std::size_t> support,
                                       std::map<std::size_t, Rational> values)
    : support_(make_parabolic(datum, std::move(support)).simple), values_(std::move(values)) {
  for (const auto& [idx, value] : values_) {
    if (!std::binary_search(support_.begin(), support_.end(), idx)) {
      throw DomainError("character value given outside its support");
    }
    if (value == 0) throw DomainError("character values on the support must be nonzero");
  }
}

WhittakerCharacter WhittakerCharacter::nonsingular(const RootDatum& datum) {
  return WhittakerCharacter(datum, Parabolic::full(datum).simple);
}

Parabolic weyl_subgroup_of(const RootDatum& datum, const WhittakerCharacter& zeta) {
  return make_parabolic(datum, zeta.support());
}

bool is_nonsingular(const RootDatum& datum, const WhittakerCharacter& zeta) {
  return zeta.support().size() == datum.simple_even.size();
}

SimpleWhittakerParam classify_simple(const RootDatum& datum, const Weight& lambda,
                                     const WhittakerCharacter& zeta) {
  auto [rep, witness] = antidominant_rep(datum, lambda, weyl_subgroup_of(datum, zeta));
  return {datum.name, zeta, std::move(rep)};
}

std::vector<std::size_t> upsilon_of(const RootDatum& datum, const Weight& nu) {
  check_dim(datum, nu);
  if (!is_integral(datum, nu) || !is_dominant(datum, nu)) {
    throw DomainError(format_weight(datum, nu) + " is not dominant integral for " + datum.name);
  }
  const Weight shifted = nu + datum.rho0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < datum.simple_even.size(); ++i)
    if (pairing_coroot(datum, shifted, datum.simple_even[i]) == 0) out.push_back(i);
  return out;
}

Weight dominant_partner(const RootDatum& datum, const WhittakerCharacter& zeta) {
  const Parabolic sub = weyl_subgroup_of(datum, zeta);
  Weight shifted(datum.dim);
  // Simple roots are listed component by component in coordinate order:
  // k-1 type-A roots per component, plus one sign root for B/C.
  std::size_t next_simple = 0;
  for (const auto& comp : datum.weyl_components) {
    const std::size_t k = comp.coords.size();
    if (k == 0) continue;
    const std::size_t adjacent = k - 1;
    Rational tail(0);
    if (comp.type != WeylType::A) {
      const bool singular = sub.contains(next_simple + adjacent);
      tail = singular ? Rational(0) : (comp.type == WeylType::C ? Rational(1) : Rational(1, 2));
    }
    shifted[comp.coords[k - 1]] = tail;
    for (std::size_t a = k - 1; a-- > 0;) {
      const bool singular = sub.contains(next_simple + a);
      shifted[comp.coords[a]] = shifted[comp.coords[a + 1]] + (singular ? 0 : 1);
    }
    next_simple += adjacent + (comp.type == WeylType::A ? 0 : 1);
  }
  return shifted - datum.rho0;
}

bool in_X0(const RootDatum& datum, const Weight& nu, const Weight& lambda) {
  check_dim(datum, lambda);
  const auto ups = upsilon_of(datum, nu);
  if (!is_integral(datum, lambda - nu)) return false;
  return is_antidominant(datum, lambda, make_parabolic(datum, ups));
}

bool in_X(const RootDatum& datum, const Weight& nu, const Weight& lambda) {
  switch (datum.family()) {
    case Family::GL:
    case Family::OSP2:
    case Family::P:
    case Family::Reductive:
      return in_X0(datum, nu, lambda);
    case Family::OSP32: {
      check_dim(datum, lambda);
      if (upsilon_of(datum, nu).size() != datum.simple_even.size()) {
        throw UnsupportedInput("X(nu) for osp(3|2) is only available for nu with W_nu = W");
      }
      if (!is_integral(datum, lambda - nu)) return false;
      // lambda + rho = a delta + b eps with a, b in -1/2 - Z_{>=0}.
      const Weight shifted = lambda + datum.rho;
      auto admissible = [](const Rational& c) {
        const Rational t = -c - Rational(1, 2);
        return is_integer(t) && t >= 0;
      };
      return admissible(shifted[0]) && admissible(shifted[1]);
    }
  }
  throw UnsupportedInput("X(nu) is not available for " + datum.name);
}

}  // namespace superlink
