#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "superlink/blocks.hpp"
#include "superlink/kl.hpp"
#include "superlink/limits.hpp"
#include "superlink/root_data.hpp"
#include "superlink/weight.hpp"

namespace superlink {

// Lattice points anchor + step * k inside per-coordinate bounds [lo, hi].
struct WeightBox {
  std::vector<Rational> lo;
  std::vector<Rational> hi;
  Rational step{1};
  Weight anchor;

  // Same integer bounds on every coordinate, anchored at 0.
  static WeightBox cube(std::size_t dim, std::int64_t lo, std::int64_t hi);

  bool contains(const Weight& w) const;
  std::size_t size() const;
  std::vector<Weight> points(std::size_t cap = kDefaultBoxCap) const;
  // Widen every coordinate by its own width on both sides.
  WeightBox enlarged() const;
  std::string str() const;
};

// "lo..hi" for every coordinate, or a comma-separated list of per-coordinate
// ranges. Integers or p/q.
WeightBox parse_box(std::size_t dim, const std::string& text);

struct LinkageGenerators {
  bool dot_moves = false;         // lambda -> s_alpha . lambda, alpha in Pi_0
  bool rho_reflections = false;   // lambda -> s_alpha(lambda + rho) - rho (non-type-I)
  bool isotropic_shifts = false;  // lambda -> lambda - c alpha, <lambda+rho, alpha> = 0
  bool p_shifts = false;          // lambda -> lambda +- 2 e_k

  bool empty() const { return !(dot_moves || rho_reflections || isotropic_shifts || p_shifts); }
  // The generators of the family's linkage relation.
  static LinkageGenerators for_family(const RootDatum& datum);
};

// Box-restricted neighbours of lambda under the generators, sorted.
std::vector<Weight> linkage_neighbours(const RootDatum& datum, const Weight& lambda,
                                       const WeightBox& box, const LinkageGenerators& gens);

std::vector<Weight> bfs_linkage_closure(const RootDatum& datum, const Weight& seed, const WeightBox& box,
                                        const LinkageGenerators& gens, std::size_t cap = kDefaultBoxCap);

struct Component {
  std::vector<Weight> points;       // sorted
  std::vector<std::string> labels;  // distinct label JSON strings, sorted
};

struct LabelSplit {
  std::string label;
  std::size_t components = 0;          // within the box
  bool merged_after_enlargement = false;
};

struct PartitionReport {
  WeightBox box;
  std::vector<Component> components;  // ordered by smallest point
  std::vector<std::size_t> soundness_failures;  // indices of multi-label components
  std::vector<LabelSplit> splits;
  std::string enlarged_box;            // empty when no enlargement ran
  std::size_t enlarged_soundness_failures = 0;

  bool sound() const { return soundness_failures.empty() && enlarged_soundness_failures == 0; }
  bool complete() const;
  std::size_t label_count() const;
  std::string to_json() const;
};

// Partition every box point into generator components and compare with
// block labels. With `enlarge`, label classes split inside the box are
// re-checked in a box widened by its own width on each side.
PartitionReport partition_box(const RootDatum& datum, const WeightBox& box, const LinkageGenerators& gens,
                              bool enlarge = true, std::size_t jobs = 1, std::size_t cap = kDefaultBoxCap);

struct KLMismatch {
  std::size_t x = 0;
  std::size_t w = 0;
  std::string recursion;
  std::string inversion;
};

struct KLCrossCheckReport {
  std::string group;
  std::size_t order = 0;
  std::size_t pairs = 0;
  std::vector<KLMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// All R-polynomials R_{x,w} of the group, by the descent recursion.
std::vector<std::vector<Polynomial>> r_polynomials(const CoxeterGroup& group);
// KL polynomials of one column P_{., w} recovered from R-polynomials alone.
std::vector<Polynomial> kl_column_from_r(const CoxeterGroup& group,
                                         const std::vector<std::vector<Polynomial>>& r, std::size_t w);

KLCrossCheckReport kl_cross_check(const RootDatum& datum, std::size_t max_order = 1152);

// dim L(nu)_{nu - eta}, eta given in simple-root coordinates, from the rank
// of the contravariant form on words in the simple lowering operators.
std::size_t simple_weight_dim(const RootDatum& datum, const Weight& nu, const std::vector<std::int64_t>& eta);
// Kostant partition function of eta in simple-root coordinates.
std::size_t kostant_partition(const RootDatum& datum, const std::vector<std::int64_t>& eta);

// [M(w . lambda) : L(x . lambda)] for the whole dot-orbit of an integral
// lambda by iterated character subtraction. Reductive data of rank <= 2.
MultTable verma_series_rank_small(const RootDatum& datum, const Weight& lambda);

}  // namespace superlink
