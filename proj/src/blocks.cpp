#include "superlink/blocks.hpp"

#include <algorithm>

#include <json.hpp>

#include "superlink/errors.hpp"
#include "superlink/weyl.hpp"
#include "superlink/whittaker.hpp"

namespace superlink {

namespace {

using ojson = nlohmann::ordered_json;

std::size_t max_orthogonal_subset(const RootDatum& datum, const std::vector<Weight>& roots,
                                  std::vector<std::size_t>& chosen, std::size_t start) {
  std::size_t best = chosen.size();
  for (std::size_t i = start; i < roots.size(); ++i) {
    bool ok = true;
    for (auto c : chosen) {
      if (bilinear(datum, roots[c], roots[i]) != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(i);
    best = std::max(best, max_orthogonal_subset(datum, roots, chosen, i + 1));
    chosen.pop_back();
  }
  return best;
}

void require_integral(const RootDatum& datum, const Weight& lambda) {
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) {
    throw UnsupportedInput("block labels need an integral weight, got " + format_weight(datum, lambda));
  }
}

GlLabel gl_label(const RootDatum& datum, const Weight& lambda) {
  const Weight x = lambda + datum.rho;
  const auto m = static_cast<std::size_t>(datum.spec.m);
  std::vector<Rational> a(x.coords().begin(), x.coords().begin() + static_cast<std::ptrdiff_t>(m));
  std::vector<Rational> b;
  for (std::size_t i = m; i < datum.dim; ++i) b.push_back(-x[i]);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  GlLabel label;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      label.core_a.push_back(a[i++]);
    } else if (i == a.size() || b[j] < a[i]) {
      label.core_b.push_back(b[j++]);
    } else {
      ++label.atyp;
      ++i;
      ++j;
    }
  }
  return label;
}

OspLabel osp_label(const RootDatum& datum, const Weight& lambda) {
  const Weight x = lambda + datum.rho;
  const Rational e = x[0];
  OspLabel label;
  for (std::size_t i = 1; i < datum.dim; ++i) label.core.push_back(abs(x[i]));
  std::sort(label.core.begin(), label.core.end());
  const auto hit = std::find(label.core.begin(), label.core.end(), abs(e));
  if (hit != label.core.end()) {
    label.core.erase(hit);
    label.atyp = 1;
    label.eps = frac(e);
  } else {
    label.eps = e;
  }
  return label;
}

PLabel p_label(const RootDatum& datum, const Weight& lambda) {
  const Weight x = lambda + datum.rho0;
  PLabel label;
  label.shift = frac(x[0]);
  for (std::size_t i = 0; i < datum.dim; ++i) {
    const Rational y = x[i] - label.shift;
    if (!is_integer(y)) throw UnsupportedInput("p(n) weight coordinates must share one coset mod Z");
    if (y.numerator() % 2 != 0) ++label.j;
  }
  return label;
}

ojson rationals_json(const std::vector<Rational>& values) {
  ojson arr = ojson::array();
  for (const auto& v : values) arr.push_back(to_string(v));
  return arr;
}

std::vector<Rational> rationals_from(const ojson& arr) {
  std::vector<Rational> out;
  for (const auto& v : arr) out.push_back(parse_rational(v.get<std::string>()));
  return out;
}

}  // namespace

Typicality typicality(const RootDatum& datum, const Weight& lambda) {
  check_dim(datum, lambda);
  if (datum.family() == Family::P) return {Typicality::Kind::NotApplicable, 0};
  const Weight x = lambda + datum.rho;
  // One representative per +/- pair.
  std::vector<Weight> annihilating;
  for (const auto& r : datum.odd_positive)
    if (r.isotropic && bilinear(datum, x, r.weight) == 0) annihilating.push_back(r.weight);
  std::vector<std::size_t> chosen;
  const std::size_t degree = max_orthogonal_subset(datum, annihilating, chosen, 0);
  if (degree == 0) return {Typicality::Kind::Typical, 0};
  return {Typicality::Kind::Atypical, degree};
}

BlockLabel chi_label_osp32(const RootDatum& datum, const Weight& lambda) {
  if (datum.family() != Family::OSP32) throw DomainError("chi_label_osp32 called for " + datum.name);
  require_integral(datum, lambda);
  const Weight x = lambda + datum.rho;
  Osp32Label label;
  const Rational a = abs(x[0]);
  const Rational b = abs(x[1]);
  if (a == b) {
    label.atyp = 1;
    label.residue = std::min(frac(x[0]), frac(-x[0]));
  } else {
    label.abs_delta = a;
    label.abs_eps = b;
  }
  return label;
}

BlockLabel block_label(const RootDatum& datum, const Weight& lambda) {
  require_integral(datum, lambda);
  switch (datum.family()) {
    case Family::GL: return gl_label(datum, lambda);
    case Family::OSP2: return osp_label(datum, lambda);
    case Family::P: return p_label(datum, lambda);
    case Family::OSP32: return chi_label_osp32(datum, lambda);
    case Family::Reductive:
      return ReductiveLabel{antidominant_rep(datum, lambda, Parabolic::full(datum)).first};
  }
  throw UnsupportedInput("no block label for " + datum.name);
}

std::string label_to_json(const BlockLabel& label) {
  ojson j;
  std::visit(
      [&](const auto& l) {
        using T = std::decay_t<decltype(l)>;
        if constexpr (std::is_same_v<T, GlLabel>) {
          j["family"] = "gl";
          j["coreA"] = rationals_json(l.core_a);
          j["coreB"] = rationals_json(l.core_b);
          j["atyp"] = l.atyp;
        } else if constexpr (std::is_same_v<T, OspLabel>) {
          j["family"] = "osp";
          j["core"] = rationals_json(l.core);
          j["eps"] = to_string(l.eps);
          j["atyp"] = l.atyp;
        } else if constexpr (std::is_same_v<T, PLabel>) {
          j["family"] = "p";
          j["j"] = l.j;
          if (l.shift != 0) j["shift"] = to_string(l.shift);
        } else if constexpr (std::is_same_v<T, Osp32Label>) {
          j["family"] = "osp32";
          j["atyp"] = l.atyp;
          if (l.atyp) {
            j["residue"] = to_string(l.residue);
          } else {
            j["abs"] = rationals_json({l.abs_delta, l.abs_eps});
          }
        } else {
          j["family"] = "reductive";
          j["rep"] = rationals_json(l.rep.coords());
        }
      },
      label);
  return j.dump();
}

BlockLabel label_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
    const auto family = j.at("family").get<std::string>();
    if (family == "gl") {
      return GlLabel{rationals_from(j.at("coreA")), rationals_from(j.at("coreB")),
                     j.at("atyp").get<std::size_t>()};
    }
    if (family == "osp") {
      return OspLabel{rationals_from(j.at("core")), parse_rational(j.at("eps").get<std::string>()),
                      j.at("atyp").get<std::size_t>()};
    }
    if (family == "p") {
      PLabel l{j.at("j").get<std::size_t>(), Rational(0)};
      if (j.contains("shift")) l.shift = parse_rational(j["shift"].get<std::string>());
      return l;
    }
    if (family == "osp32") {
      Osp32Label l;
      l.atyp = j.at("atyp").get<std::size_t>();
      if (l.atyp) {
        l.residue = parse_rational(j.at("residue").get<std::string>());
      } else {
        const auto abs_vals = rationals_from(j.at("abs"));
        if (abs_vals.size() != 2) throw ParseError("osp32 label needs two abs entries");
        l.abs_delta = abs_vals[0];
        l.abs_eps = abs_vals[1];
      }
      return l;
    }
    if (family == "reductive") return ReductiveLabel{Weight(rationals_from(j.at("rep")))};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed label JSON: ") + e.what());
  }
  throw ParseError("unknown label family in " + text);
}

std::string to_string(LinkStatus status) {
  switch (status) {
    case LinkStatus::Linked: return "Linked";
    case LinkStatus::NotLinked: return "NotLinked";
    case LinkStatus::LinkedSufficientOnly: return "LinkedSufficientOnly";
    case LinkStatus::NoLinkKnown: return "NoLinkKnown";
  }
  return "?";
}

LinkStatus same_block(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  const BlockLabel a = block_label(datum, lambda);
  const BlockLabel b = block_label(datum, mu);
  switch (datum.family()) {
    case Family::GL:
    case Family::OSP2:
    case Family::Reductive:
      return a == b ? LinkStatus::Linked : LinkStatus::NotLinked;
    case Family::P:
      // Only sufficiency of the generated relation is known.
      return a == b ? LinkStatus::LinkedSufficientOnly : LinkStatus::NoLinkKnown;
    case Family::OSP32: {
      // Distinct central characters always separate blocks; equal ones link
      // only for weights in X(nu) with nu nonsingular.
      if (!(a == b)) return LinkStatus::NotLinked;
      const Weight nu = dominant_partner(datum, WhittakerCharacter::nonsingular(datum));
      if (in_X(datum, nu, lambda) && in_X(datum, nu, mu)) return LinkStatus::Linked;
      return LinkStatus::NoLinkKnown;
    }
  }
  return LinkStatus::NoLinkKnown;
}

}  // namespace superlink
