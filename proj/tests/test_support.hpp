#pragma once

#include "superlink/root_data.hpp"
#include "superlink/weyl.hpp"

namespace test {

inline superlink::RootDatum gl(int m, int n) { return superlink::build_root_datum(superlink::FamilySpec::gl(m, n)); }
inline superlink::RootDatum osp(int n) { return superlink::build_root_datum(superlink::FamilySpec::osp2(n)); }
inline superlink::RootDatum p(int n) { return superlink::build_root_datum(superlink::FamilySpec::p(n)); }
inline superlink::RootDatum osp32() { return superlink::build_root_datum(superlink::FamilySpec::osp32()); }
inline superlink::RootDatum red(const char* type) {
  return superlink::build_root_datum(superlink::FamilySpec::reductive(superlink::parse_reductive_type(type)));
}

inline superlink::Weight wt(const superlink::RootDatum& d, const char* text) { return superlink::parse_weight(d, text); }
inline superlink::WeylElement we(const superlink::RootDatum& d, const char* text) {
  return superlink::parse_weyl_element(d, text);
}
inline superlink::Rational q(std::int64_t a, std::int64_t b = 1) { return superlink::Rational(a, b); }

}  // namespace test
