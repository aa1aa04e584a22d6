#include "superlink/oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "superlink/errors.hpp"
#include "superlink/weyl.hpp"

namespace superlink {

// ----------------------------------------------------------------- WeightBox

WeightBox WeightBox::cube(std::size_t dim, std::int64_t lo, std::int64_t hi) {
  return {std::vector<Rational>(dim, Rational(lo)), std::vector<Rational>(dim, Rational(hi)), Rational(1),
          Weight(dim)};
}

bool WeightBox::contains(const Weight& w) const {
  if (w.dim() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (w[i] < lo[i] || w[i] > hi[i]) return false;
    if (!is_integer((w[i] - anchor[i]) / step)) return false;
  }
  return true;
}

namespace {

std::pair<std::int64_t, std::int64_t> index_range(const WeightBox& box, std::size_t i) {
  return {ceil((box.lo[i] - box.anchor[i]) / box.step), floor((box.hi[i] - box.anchor[i]) / box.step)};
}

}  // namespace

std::size_t WeightBox::size() const {
  std::size_t total = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const auto [a, b] = index_range(*this, i);
    if (b < a) return 0;
    total *= static_cast<std::size_t>(b - a + 1);
  }
  return total;
}

std::vector<Weight> WeightBox::points(std::size_t cap) const {
  const std::size_t n = size();
  if (n > cap) {
    throw CapExceeded("box " + str() + " has " + std::to_string(n) + " points, cap is " + std::to_string(cap));
  }
  std::vector<Weight> out;
  if (n == 0) return out;
  out.reserve(n);
  const std::size_t dim = lo.size();
  std::vector<std::int64_t> first(dim), last(dim), idx(dim);
  for (std::size_t i = 0; i < dim; ++i) std::tie(first[i], last[i]) = index_range(*this, i);
  idx = first;
  while (true) {
    Weight w(dim);
    for (std::size_t i = 0; i < dim; ++i) w[i] = anchor[i] + Rational(idx[i]) * step;
    out.push_back(std::move(w));
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (idx[k] < last[k]) {
        ++idx[k];
        break;
      }
      idx[k] = first[k];
      if (k == 0) return out;
    }
    if (dim == 0) return out;
  }
}

WeightBox WeightBox::enlarged() const {
  WeightBox out = *this;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    const Rational width = hi[i] - lo[i];
    out.lo[i] -= width;
    out.hi[i] += width;
  }
  return out;
}

std::string WeightBox::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (i) out += ",";
    out += to_string(lo[i]) + ".." + to_string(hi[i]);
  }
  return out + "]";
}

WeightBox parse_box(std::size_t dim, const std::string& text) {
  auto parse_range = [&](std::string_view part) {
    const auto dots = part.find("..");
    if (dots == std::string_view::npos) throw ParseError("box range '" + std::string(part) + "' lacks '..'");
    const Rational lo = parse_rational(part.substr(0, dots));
    const Rational hi = parse_rational(part.substr(dots + 2));
    if (hi < lo) throw ParseError("box range '" + std::string(part) + "' has lo > hi");
    return std::pair{lo, hi};
  };
  WeightBox box;
  box.anchor = Weight(dim);
  std::vector<std::string_view> parts;
  std::string_view s(text);
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.size() != 1 && parts.size() != dim) {
    throw ParseError("box needs one range or " + std::to_string(dim) + " ranges, got '" + text + "'");
  }
  for (std::size_t i = 0; i < dim; ++i) {
    const auto [lo, hi] = parse_range(parts.size() == 1 ? parts[0] : parts[i]);
    box.lo.push_back(lo);
    box.hi.push_back(hi);
  }
  return box;
}

// ---------------------------------------------------------------- generators

LinkageGenerators LinkageGenerators::for_family(const RootDatum& datum) {
  LinkageGenerators g;
  switch (datum.family()) {
    case Family::GL:
    case Family::OSP2:
      g.dot_moves = true;
      g.isotropic_shifts = true;
      break;
    case Family::P:
      g.dot_moves = true;
      g.p_shifts = true;
      break;
    case Family::OSP32:
      g.rho_reflections = true;
      g.isotropic_shifts = true;
      break;
    case Family::Reductive:
      g.dot_moves = true;
      break;
  }
  return g;
}

std::vector<Weight> linkage_neighbours(const RootDatum& datum, const Weight& lambda, const WeightBox& box,
                                       const LinkageGenerators& gens) {
  std::vector<Weight> out;
  auto push = [&](Weight w) {
    if (!(w == lambda) && box.contains(w)) out.push_back(std::move(w));
  };
  if (gens.dot_moves) {
    const Weight shifted = lambda + datum.rho0;
    for (const auto& a : datum.simple_even) push(reflect(datum, a, shifted) - datum.rho0);
  }
  if (gens.rho_reflections) {
    const Weight shifted = lambda + datum.rho;
    for (const auto& a : datum.simple_even) push(reflect(datum, a, shifted) - datum.rho);
  }
  if (gens.isotropic_shifts) {
    const Weight shifted = lambda + datum.rho;
    for (const auto& r : datum.odd_positive) {
      if (!r.isotropic || bilinear(datum, shifted, r.weight) != 0) continue;
      // Every integer c keeping lambda - c alpha inside the box.
      std::int64_t cmin = std::numeric_limits<std::int64_t>::min();
      std::int64_t cmax = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < datum.dim; ++i) {
        const Rational a = r.weight[i];
        if (a == 0) continue;
        Rational lo = (lambda[i] - box.hi[i]) / a;
        Rational hi = (lambda[i] - box.lo[i]) / a;
        if (a < 0) std::swap(lo, hi);
        cmin = std::max(cmin, ceil(lo));
        cmax = std::min(cmax, floor(hi));
      }
      for (std::int64_t c = cmin; c <= cmax; ++c)
        if (c != 0) push(lambda - Rational(c) * r.weight);
    }
  }
  if (gens.p_shifts) {
    for (std::size_t k = 0; k < datum.dim; ++k) {
      for (int sign : {1, -1}) {
        Weight w = lambda;
        w[k] += 2 * sign;
        push(std::move(w));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Weight> bfs_linkage_closure(const RootDatum& datum, const Weight& seed, const WeightBox& box,
                                        const LinkageGenerators& gens, std::size_t cap) {
  check_dim(datum, seed);
  if (!box.contains(seed)) throw DomainError("seed " + format_weight(datum, seed) + " is outside " + box.str());
  std::vector<Weight> found{seed};
  std::unordered_set<Weight, WeightHash> seen{seed};
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (auto& next : linkage_neighbours(datum, found[head], box, gens)) {
      if (seen.insert(next).second) {
        if (found.size() >= cap) throw CapExceeded("BFS closure exceeds cap of " + std::to_string(cap));
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

// ---------------------------------------------------------------- partitions

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

template <class Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn fn) {
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < jobs; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += jobs) fn(i);
    });
  }
  for (auto& w : workers) w.join();
}

struct RawPartition {
  std::vector<Weight> points;
  std::vector<std::string> labels;
  std::vector<std::size_t> component_of;  // dense component ids ordered by smallest point
  std::size_t component_count = 0;
};

RawPartition raw_partition(const RootDatum& datum, const WeightBox& box, const LinkageGenerators& gens,
                           std::size_t jobs, std::size_t cap) {
  RawPartition raw;
  raw.points = box.points(cap);
  std::sort(raw.points.begin(), raw.points.end());
  const std::size_t n = raw.points.size();
  std::unordered_map<Weight, std::size_t, WeightHash> index;
  index.reserve(n);
  for (std::size_t i = 0; i < n; ++i) index.emplace(raw.points[i], i);

  raw.labels.resize(n);
  std::vector<std::vector<std::size_t>> edges(n);
  parallel_for(n, jobs, [&](std::size_t i) {
    raw.labels[i] = label_to_json(block_label(datum, raw.points[i]));
    for (const auto& w : linkage_neighbours(datum, raw.points[i], box, gens)) edges[i].push_back(index.at(w));
  });
  DisjointSets sets(n);
  for (std::size_t i = 0; i < n; ++i)
    for (auto j : edges[i]) sets.unite(i, j);

  // Points are sorted, so first appearance orders components by smallest point.
  std::unordered_map<std::size_t, std::size_t> dense;
  raw.component_of.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = sets.find(i);
    auto [it, inserted] = dense.emplace(root, dense.size());
    raw.component_of[i] = it->second;
  }
  raw.component_count = dense.size();
  return raw;
}

std::size_t count_multi_label(const RawPartition& raw) {
  std::vector<std::set<std::string>> labels(raw.component_count);
  for (std::size_t i = 0; i < raw.points.size(); ++i) labels[raw.component_of[i]].insert(raw.labels[i]);
  return static_cast<std::size_t>(
      std::count_if(labels.begin(), labels.end(), [](const auto& s) { return s.size() > 1; }));
}

}  // namespace

bool PartitionReport::complete() const {
  return std::all_of(splits.begin(), splits.end(), [](const LabelSplit& s) { return s.merged_after_enlargement; });
}

std::size_t PartitionReport::label_count() const {
  std::set<std::string> all;
  for (const auto& c : components) all.insert(c.labels.begin(), c.labels.end());
  return all.size();
}

std::string PartitionReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = "superlink.partition/1";
  j["box"] = box.str();
  std::size_t points = 0;
  for (const auto& c : components) points += c.points.size();
  j["points"] = points;
  j["components"] = components.size();
  j["labels"] = label_count();
  nlohmann::ordered_json comps = nlohmann::ordered_json::array();
  for (const auto& c : components) {
    nlohmann::ordered_json entry;
    entry["size"] = c.points.size();
    entry["first"] = c.points.front().str();
    nlohmann::ordered_json labels = nlohmann::ordered_json::array();
    for (const auto& l : c.labels) labels.push_back(nlohmann::ordered_json::parse(l));
    entry["labels"] = labels;
    comps.push_back(entry);
  }
  j["component_list"] = comps;
  j["soundness_failures"] = soundness_failures.size();
  nlohmann::ordered_json split_list = nlohmann::ordered_json::array();
  for (const auto& s : splits) {
    nlohmann::ordered_json entry;
    entry["label"] = nlohmann::ordered_json::parse(s.label);
    entry["components"] = s.components;
    entry["merged_after_enlargement"] = s.merged_after_enlargement;
    split_list.push_back(entry);
  }
  j["splits"] = split_list;
  if (!enlarged_box.empty()) {
    j["enlarged_box"] = enlarged_box;
    j["enlarged_soundness_failures"] = enlarged_soundness_failures;
  }
  j["sound"] = sound();
  j["complete"] = complete();
  return j.dump();
}

PartitionReport partition_box(const RootDatum& datum, const WeightBox& box, const LinkageGenerators& gens,
                              bool enlarge, std::size_t jobs, std::size_t cap) {
  if (box.lo.size() != datum.dim) throw DimensionMismatch("box dimension does not match " + datum.name);
  const RawPartition raw = raw_partition(datum, box, gens, jobs, cap);
  PartitionReport report;
  report.box = box;
  report.components.resize(raw.component_count);
  for (std::size_t i = 0; i < raw.points.size(); ++i) {
    auto& c = report.components[raw.component_of[i]];
    c.points.push_back(raw.points[i]);
    c.labels.push_back(raw.labels[i]);
  }
  std::map<std::string, std::set<std::size_t>> label_components;
  for (std::size_t k = 0; k < report.components.size(); ++k) {
    auto& labels = report.components[k].labels;
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.size() > 1) report.soundness_failures.push_back(k);
    for (const auto& l : labels) label_components[l].insert(k);
  }
  for (const auto& [label, comps] : label_components)
    if (comps.size() > 1) report.splits.push_back({label, comps.size(), false});

  if (enlarge && !report.splits.empty()) {
    const WeightBox big = box.enlarged();
    const RawPartition wide = raw_partition(datum, big, gens, jobs, cap);
    report.enlarged_box = big.str();
    report.enlarged_soundness_failures = count_multi_label(wide);
    std::unordered_map<Weight, std::size_t, WeightHash> wide_component;
    for (std::size_t i = 0; i < wide.points.size(); ++i) wide_component.emplace(wide.points[i], wide.component_of[i]);
    for (auto& split : report.splits) {
      std::set<std::size_t> merged;
      for (auto k : label_components[split.label]) merged.insert(wide_component.at(report.components[k].points.front()));
      split.merged_after_enlargement = merged.size() == 1;
    }
  }
  return report;
}

// ------------------------------------------------------------- KL cross-check

std::vector<std::vector<Polynomial>> r_polynomials(const CoxeterGroup& group) {
  const std::size_t n = group.size();
  // r[w][x] = R_{x,w}; indices are in non-decreasing length order.
  std::vector<std::vector<Polynomial>> r(n, std::vector<Polynomial>(n));
  r[0][0] = Polynomial::constant(1);
  const Polynomial q_minus_1({-1, 1});
  for (std::size_t w = 1; w < n; ++w) {
    std::size_t s = 0;
    while (group.length(group.left_mul(s, w)) > group.length(w)) ++s;
    const std::size_t v = group.left_mul(s, w);
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t sx = group.left_mul(s, x);
      if (group.length(sx) < group.length(x)) {
        r[w][x] = r[v][sx];
      } else {
        r[w][x] = q_minus_1 * r[v][x] + r[v][sx].shifted(1);
      }
    }
  }
  return r;
}

std::vector<Polynomial> kl_column_from_r(const CoxeterGroup& group, const std::vector<std::vector<Polynomial>>& r,
                                         std::size_t w) {
  const std::size_t n = group.size();
  const auto lower = group.lower_interval(w);
  std::vector<Polynomial> p(n);
  p[w] = Polynomial::constant(1);
  // q^{l(w)-l(x)} P_{x,w}(1/q) - P_{x,w} = sum_{x < y <= w} R_{x,y} P_{y,w};
  // the right side's part of degree <= (d-1)/2 is exactly -P_{x,w}.
  for (std::size_t x = n; x-- > 0;) {
    if (!lower[x] || x == w) continue;
    Polynomial rhs;
    for (std::size_t y = 0; y < n; ++y) {
      if (!lower[y] || y == x || group.length(y) <= group.length(x)) continue;
      if (r[y][x].is_zero() || p[y].is_zero()) continue;
      rhs += r[y][x] * p[y];
    }
    const std::size_t d = group.length(w) - group.length(x);
    const std::size_t top = (d - 1) / 2;
    std::vector<std::int64_t> low;
    for (std::size_t k = 0; k <= top; ++k) low.push_back(-rhs.coeff(k));
    p[x] = Polynomial(std::move(low));
  }
  return p;
}

KLCrossCheckReport kl_cross_check(const RootDatum& datum, std::size_t max_order) {
  auto engine = kl_engine_for(datum);
  const CoxeterGroup& group = engine->group();
  if (group.size() > max_order) {
    throw CapExceeded("kl_cross_check supports groups up to order " + std::to_string(max_order));
  }
  KLCrossCheckReport report;
  report.group = datum.name;
  report.order = group.size();
  const auto r = r_polynomials(group);
  for (std::size_t w = 0; w < group.size(); ++w) {
    const auto column = kl_column_from_r(group, r, w);
    for (std::size_t x = 0; x < group.size(); ++x) {
      ++report.pairs;
      const Polynomial rec = engine->polynomial(x, w);
      if (!(rec == column[x])) report.mismatches.push_back({x, w, rec.str(), column[x].str()});
    }
  }
  return report;
}

// ------------------------------------------------------ character arithmetic

namespace {

// Contravariant form on words f_{J[0]} ... f_{J[t-1]} v of M(nu).
class ShapovalovWords {
 public:
  ShapovalovWords(const RootDatum& datum, const Weight& nu) {
    const std::size_t r = datum.simple_even.size();
    top_.resize(r);
    cartan_.assign(r, std::vector<Rational>(r));
    for (std::size_t i = 0; i < r; ++i) {
      top_[i] = pairing_coroot(datum, nu, datum.simple_even[i]);
      for (std::size_t j = 0; j < r; ++j)
        cartan_[j][i] = pairing_coroot(datum, datum.simple_even[j].weight, datum.simple_even[i]);
    }
  }

  Rational form(const std::string& left, const std::string& right) {
    if (left.empty()) return Rational(1);
    const auto key = left + "/" + right;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // <f_i X v, Y v> = <X v, e_i Y v>, and e_i commutes past f_j (j != i)
    // while [e_i, f_i] = h_i acts on the remaining tail by its weight.
    const auto i = static_cast<std::size_t>(left[0] - 'a');
    const std::string rest = left.substr(1);
    Rational total(0);
    Rational tail_weight = top_[i];
    for (std::size_t p = right.size(); p-- > 0;) {
      const auto j = static_cast<std::size_t>(right[p] - 'a');
      if (j == i) {
        const Rational coeff = tail_weight;
        if (coeff != 0) {
          std::string reduced = right;
          reduced.erase(p, 1);
          total += coeff * form(rest, reduced);
        }
      }
      tail_weight -= cartan_[j][i];
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::vector<Rational> top_;
  std::vector<std::vector<Rational>> cartan_;
  std::unordered_map<std::string, Rational> memo_;
};

std::size_t matrix_rank(std::vector<std::vector<Rational>> a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> words_with_counts(const std::vector<std::int64_t>& eta) {
  std::string base;
  for (std::size_t i = 0; i < eta.size(); ++i) base.append(static_cast<std::size_t>(eta[i]), static_cast<char>('a' + i));
  std::sort(base.begin(), base.end());
  std::vector<std::string> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

std::vector<std::int64_t> integer_coeffs(const std::vector<Rational>& c) {
  std::vector<std::int64_t> out;
  for (const auto& x : c) {
    if (!is_integer(x)) throw DomainError("non-integral simple-root coefficient");
    out.push_back(x.numerator());
  }
  return out;
}

void require_small_reductive(const RootDatum& datum) {
  if (datum.family() != Family::Reductive || datum.rank() > 2) {
    throw UnsupportedInput("character oracle supports reductive data of rank <= 2, got " + datum.name);
  }
}

}  // namespace

std::size_t simple_weight_dim(const RootDatum& datum, const Weight& nu, const std::vector<std::int64_t>& eta) {
  check_dim(datum, nu);
  if (eta.size() != datum.rank()) throw DimensionMismatch("eta needs one entry per simple root");
  for (auto e : eta)
    if (e < 0) return 0;
  const auto words = words_with_counts(eta);
  ShapovalovWords form(datum, nu);
  std::vector<std::vector<Rational>> gram(words.size(), std::vector<Rational>(words.size()));
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a; b < words.size(); ++b) gram[a][b] = gram[b][a] = form.form(words[a], words[b]);
  return matrix_rank(std::move(gram));
}

std::size_t kostant_partition(const RootDatum& datum, const std::vector<std::int64_t>& eta) {
  std::vector<std::vector<std::int64_t>> roots;
  for (const auto& c : datum.even_positive_coeffs) roots.push_back(integer_coeffs(c));
  std::map<std::pair<std::size_t, std::vector<std::int64_t>>, std::size_t> memo;
  std::function<std::size_t(std::size_t, const std::vector<std::int64_t>&)> count =
      [&](std::size_t idx, const std::vector<std::int64_t>& rem) -> std::size_t {
    if (std::all_of(rem.begin(), rem.end(), [](std::int64_t v) { return v == 0; })) return 1;
    if (idx == roots.size()) return 0;
    auto key = std::make_pair(idx, rem);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::size_t total = 0;
    std::vector<std::int64_t> cur = rem;
    while (true) {
      total += count(idx + 1, cur);
      bool ok = true;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        cur[i] -= roots[idx][i];
        if (cur[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo.emplace(key, total);
    return total;
  };
  for (auto e : eta)
    if (e < 0) return 0;
  return count(0, eta);
}

MultTable verma_series_rank_small(const RootDatum& datum, const Weight& lambda) {
  require_small_reductive(datum);
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) throw UnsupportedInput("character oracle needs an integral weight");
  const Parabolic full = Parabolic::full(datum);
  const Weight base = antidominant_rep(datum, lambda, full).first;
  const auto orbit = orbit_dot(datum, lambda, full);
  const std::set<Weight> orbit_set(orbit.begin(), orbit.end());
  const std::size_t r = datum.rank();

  auto weight_of = [&](const Weight& top, const std::vector<std::int64_t>& eta) {
    Weight w = top;
    for (std::size_t i = 0; i < r; ++i) w -= Rational(eta[i]) * datum.simple_even[i].weight;
    return w;
  };
  std::map<std::pair<Weight, std::vector<std::int64_t>>, std::size_t> simple_dims;
  auto dim_simple = [&](const Weight& nu, const std::vector<std::int64_t>& eta) {
    auto key = std::make_pair(nu, eta);
    if (auto it = simple_dims.find(key); it != simple_dims.end()) return it->second;
    const std::size_t d = simple_weight_dim(datum, nu, eta);
    simple_dims.emplace(key, d);
    return d;
  };

  MultTable table(MultTable::Provenance::CharacterOracle);
  for (const auto& mu : orbit) {
    const auto bound = integer_coeffs(express_in_simple_roots(datum, mu - base));
    std::vector<std::vector<std::int64_t>> cone{{}};
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<std::vector<std::int64_t>> next;
      for (const auto& partial : cone) {
        for (std::int64_t k = 0; k <= bound[i]; ++k) {
          auto v = partial;
          v.push_back(k);
          next.push_back(std::move(v));
        }
      }
      cone = std::move(next);
    }
    std::stable_sort(cone.begin(), cone.end(), [](const auto& a, const auto& b) {
      return std::accumulate(a.begin(), a.end(), std::int64_t{0}) < std::accumulate(b.begin(), b.end(), std::int64_t{0});
    });
    std::map<std::vector<std::int64_t>, std::int64_t> residual;
    for (const auto& eta : cone) residual[eta] = static_cast<std::int64_t>(kostant_partition(datum, eta));
    for (const auto& nu : orbit)
      if (!(nu == mu)) table.set(mu, nu, 0);
    for (const auto& eta : cone) {
      const std::int64_t m = residual[eta];
      if (m == 0) continue;
      const Weight nu = weight_of(mu, eta);
      if (m < 0 || !orbit_set.count(nu)) {
        throw Error("character oracle inconsistency at " + format_weight(datum, nu));
      }
      table.set(mu, nu, m);
      for (const auto& other : cone) {
        std::vector<std::int64_t> diff(r);
        bool below = true;
        for (std::size_t i = 0; i < r; ++i) {
          diff[i] = other[i] - eta[i];
          if (diff[i] < 0) below = false;
        }
        if (!below) continue;
        residual[other] -= m * static_cast<std::int64_t>(dim_simple(nu, diff));
      }
    }
  }
  return table;
}

}  // namespace superlink
