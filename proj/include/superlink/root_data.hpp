#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "superlink/rational.hpp"
#include "superlink/weight.hpp"

namespace superlink {

enum class Family { GL, OSP2, P, OSP32, Reductive };

enum class Parity { Even, Odd };

struct Root {
  Weight weight;
  Parity parity = Parity::Even;
  bool isotropic = false;

  friend bool operator==(const Root& a, const Root& b) { return a.weight == b.weight; }
};

// Type of an irreducible factor of the even Weyl group. A acts by permuting
// its coordinates; B and C act by signed permutations (short root e_i for B,
// long root 2e_i for C).
enum class WeylType { A, B, C };

struct WeylComponent {
  WeylType type = WeylType::A;
  std::vector<std::size_t> coords;
};

// One factor of a reductive datum: A_k is gl(k+1), C_k is sp(2k).
struct ReductiveFactor {
  WeylType type = WeylType::A;
  int rank = 1;
};

struct FamilySpec {
  Family family = Family::GL;
  int m = 0;
  int n = 0;
  std::vector<ReductiveFactor> factors;

  static FamilySpec gl(int m, int n) { return {Family::GL, m, n, {}}; }
  static FamilySpec osp2(int n) { return {Family::OSP2, 0, n, {}}; }
  static FamilySpec p(int n) { return {Family::P, 0, n, {}}; }
  static FamilySpec osp32() { return {Family::OSP32, 0, 0, {}}; }
  static FamilySpec reductive(std::vector<ReductiveFactor> factors) {
    return {Family::Reductive, 0, 0, std::move(factors)};
  }
};

// Parse "A2", "C2", "A1xC2" (case-insensitive, 'x' or '*' between factors).
std::vector<ReductiveFactor> parse_reductive_type(std::string_view text);

// Exact root data of one family instance. Built only by build_root_datum and
// never mutated afterwards.
struct RootDatum {
  FamilySpec spec;
  std::string name;
  std::size_t dim = 0;
  // Diagonal bilinear form <e_i, e_j> = signature[i] * delta_ij.
  std::vector<Rational> signature;

  std::vector<Root> simple_even;    // Pi_0
  std::vector<Root> even_positive;  // Phi_0^+
  std::vector<Root> odd_roots;      // Phi_1 (both signs)
  std::vector<Root> odd_positive;   // odd roots of the fixed Borel
  std::vector<Root> isotropic_roots;

  Weight rho0;
  Weight rho1;
  Weight rho;

  std::vector<WeylComponent> weyl_components;

  // even_positive[k] = sum_i even_positive_coeffs[k][i] * simple_even[i].
  std::vector<std::vector<Rational>> even_positive_coeffs;

  // Block separators for weight literals: (number of coordinates before the
  // separator, separator character).
  std::vector<std::pair<std::size_t, char>> separators;

  Family family() const { return spec.family; }
  std::size_t rank() const { return simple_even.size(); }
};

RootDatum build_root_datum(const FamilySpec& spec);

Rational bilinear(const RootDatum& datum, const Weight& lambda, const Weight& mu);

// 2<lambda, alpha>/<alpha, alpha>; throws DomainError for isotropic alpha.
Rational pairing_coroot(const RootDatum& datum, const Weight& lambda, const Weight& alpha);
inline Rational pairing_coroot(const RootDatum& datum, const Weight& lambda, const Root& alpha) {
  return pairing_coroot(datum, lambda, alpha.weight);
}

bool is_integral(const RootDatum& datum, const Weight& lambda);
bool is_isotropic(const RootDatum& datum, const Weight& alpha);

// Coefficients of an element of the span of Pi_0 in the simple-root basis.
// Throws DomainError when the vector is not in that span.
std::vector<Rational> express_in_simple_roots(const RootDatum& datum, const Weight& v);

// Weight literal: rationals separated by ',', with optional '|' or ';' block
// separators and optional surrounding parentheses.
Weight parse_weight(const RootDatum& datum, std::string_view text);
std::string format_weight(const RootDatum& datum, const Weight& lambda);

void check_dim(const RootDatum& datum, const Weight& lambda);

}  // namespace superlink
