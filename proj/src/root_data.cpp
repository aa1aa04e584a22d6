#include "superlink/root_data.hpp"

#include <algorithm>
#include <cctype>

#include "superlink/errors.hpp"

namespace superlink {

namespace {

Weight unit(std::size_t dim, std::size_t i, Rational c = Rational(1)) {
  Weight w(dim);
  w[i] = c;
  return w;
}

Weight combo(std::size_t dim, std::size_t i, Rational ci, std::size_t j, Rational cj) {
  Weight w(dim);
  w[i] += ci;
  w[j] += cj;
  return w;
}

Root even(Weight w) { return Root{std::move(w), Parity::Even, false}; }
Root odd(Weight w) { return Root{std::move(w), Parity::Odd, false}; }

Weight half_sum(std::size_t dim, const std::vector<Root>& roots) {
  Weight sum(dim);
  for (const auto& r : roots) sum += r.weight;
  return Rational(1, 2) * sum;
}

void add_type_a(std::vector<Root>& positive, std::vector<Root>& simple,
                const std::vector<std::size_t>& coords, std::size_t dim) {
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a + 1; b < coords.size(); ++b)
      positive.push_back(even(combo(dim, coords[a], 1, coords[b], -1)));
  for (std::size_t a = 0; a + 1 < coords.size(); ++a)
    simple.push_back(even(combo(dim, coords[a], 1, coords[a + 1], -1)));
}

// Positive system of C_k (or B_k with short roots e_i): e_i - e_j, e_i + e_j
// for i < j, then the long/short roots on single coordinates.
void add_type_bc(std::vector<Root>& positive, std::vector<Root>& simple,
                 const std::vector<std::size_t>& coords, std::size_t dim, WeylType type) {
  const Rational single = type == WeylType::C ? Rational(2) : Rational(1);
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a + 1; b < coords.size(); ++b)
      positive.push_back(even(combo(dim, coords[a], 1, coords[b], -1)));
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = a + 1; b < coords.size(); ++b)
      positive.push_back(even(combo(dim, coords[a], 1, coords[b], 1)));
  for (auto c : coords) positive.push_back(even(unit(dim, c, single)));
  for (std::size_t a = 0; a + 1 < coords.size(); ++a)
    simple.push_back(even(combo(dim, coords[a], 1, coords[a + 1], -1)));
  if (!coords.empty()) simple.push_back(even(unit(dim, coords.back(), single)));
}

std::vector<std::size_t> iota_coords(std::size_t first, std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = first + i;
  return out;
}

void finish(RootDatum& d) {
  for (auto* list : {&d.simple_even, &d.even_positive, &d.odd_roots, &d.odd_positive}) {
    for (auto& r : *list) r.isotropic = is_isotropic(d, r.weight);
  }
  d.isotropic_roots.clear();
  for (const auto& r : d.odd_roots)
    if (r.isotropic) d.isotropic_roots.push_back(r);
  d.rho = d.rho0 - d.rho1;
  d.even_positive_coeffs.clear();
  for (const auto& r : d.even_positive)
    d.even_positive_coeffs.push_back(express_in_simple_roots(d, r.weight));
}

RootDatum build_gl(int m, int n) {
  if (m < 1 || n < 1) {
    throw ConstructionError("gl(m|n) requires positive m and n, got gl(" + std::to_string(m) +
                            "|" + std::to_string(n) + ")");
  }
  RootDatum d;
  d.spec = FamilySpec::gl(m, n);
  d.name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  d.dim = static_cast<std::size_t>(m + n);
  d.signature.assign(d.dim, Rational(1));
  for (std::size_t i = m; i < d.dim; ++i) d.signature[i] = -1;
  const auto first = iota_coords(0, m);
  const auto second = iota_coords(m, n);
  add_type_a(d.even_positive, d.simple_even, first, d.dim);
  add_type_a(d.even_positive, d.simple_even, second, d.dim);
  for (auto i : first) {
    for (auto j : second) {
      d.odd_positive.push_back(odd(combo(d.dim, i, 1, j, -1)));
      d.odd_roots.push_back(odd(combo(d.dim, i, 1, j, -1)));
      d.odd_roots.push_back(odd(combo(d.dim, i, -1, j, 1)));
    }
  }
  d.rho0 = half_sum(d.dim, d.even_positive);
  d.rho1 = half_sum(d.dim, d.odd_positive);
  d.weyl_components = {{WeylType::A, first}, {WeylType::A, second}};
  d.separators = {{static_cast<std::size_t>(m), '|'}};
  finish(d);
  return d;
}

// Coordinates (eps; delta_1..delta_n).
RootDatum build_osp2(int n) {
  if (n < 1) throw ConstructionError("osp(2|2n) requires positive n, got n=" + std::to_string(n));
  RootDatum d;
  d.spec = FamilySpec::osp2(n);
  d.name = "osp(2|" + std::to_string(2 * n) + ")";
  d.dim = static_cast<std::size_t>(n + 1);
  d.signature.assign(d.dim, Rational(-1));
  d.signature[0] = 1;
  const auto deltas = iota_coords(1, n);
  add_type_bc(d.even_positive, d.simple_even, deltas, d.dim, WeylType::C);
  for (auto i : deltas) {
    d.odd_positive.push_back(odd(combo(d.dim, 0, 1, i, -1)));
    d.odd_positive.push_back(odd(combo(d.dim, 0, 1, i, 1)));
  }
  for (const auto& r : d.odd_positive) {
    d.odd_roots.push_back(r);
    d.odd_roots.push_back(odd(-r.weight));
  }
  d.rho0 = half_sum(d.dim, d.even_positive);
  d.rho1 = half_sum(d.dim, d.odd_positive);
  d.weyl_components = {{WeylType::C, deltas}};
  d.separators = {{1, ';'}};
  finish(d);
  return d;
}

RootDatum build_p(int n) {
  if (n < 1) throw ConstructionError("p(n) requires positive n, got n=" + std::to_string(n));
  RootDatum d;
  d.spec = FamilySpec::p(n);
  d.name = "p(" + std::to_string(n) + ")";
  d.dim = static_cast<std::size_t>(n);
  d.signature.assign(d.dim, Rational(1));
  const auto coords = iota_coords(0, n);
  add_type_a(d.even_positive, d.simple_even, coords, d.dim);
  // g_1: symmetric B block gives e_i + e_j (i <= j); g_{-1}: antisymmetric C
  // block gives -(e_i + e_j) (i < j).
  for (std::size_t i = 0; i < d.dim; ++i) {
    d.odd_positive.push_back(odd(unit(d.dim, i, 2)));
    for (std::size_t j = i + 1; j < d.dim; ++j) d.odd_positive.push_back(odd(combo(d.dim, i, 1, j, 1)));
  }
  d.odd_roots = d.odd_positive;
  for (std::size_t i = 0; i < d.dim; ++i)
    for (std::size_t j = i + 1; j < d.dim; ++j) d.odd_roots.push_back(odd(combo(d.dim, i, -1, j, -1)));
  // Shifted even Weyl vector (n-1, n-2, ..., 1, 0).
  d.rho0 = Weight(d.dim);
  for (std::size_t i = 0; i < d.dim; ++i) d.rho0[i] = static_cast<std::int64_t>(d.dim - 1 - i);
  d.rho1 = half_sum(d.dim, d.odd_positive);
  d.weyl_components = {{WeylType::A, coords}};
  finish(d);
  return d;
}

// Coordinates (delta, eps), <delta,delta> = -1, <eps,eps> = 1.
RootDatum build_osp32() {
  RootDatum d;
  d.spec = FamilySpec::osp32();
  d.name = "osp(3|2)";
  d.dim = 2;
  d.signature = {Rational(-1), Rational(1)};
  d.even_positive = {even(unit(2, 0, 2)), even(unit(2, 1, 1))};
  d.simple_even = d.even_positive;
  d.odd_positive = {odd(combo(2, 0, 1, 1, 1)), odd(combo(2, 0, 1, 1, -1)), odd(unit(2, 0, 1))};
  for (const auto& r : d.odd_positive) {
    d.odd_roots.push_back(r);
    d.odd_roots.push_back(odd(-r.weight));
  }
  d.rho0 = half_sum(d.dim, d.even_positive);
  d.rho1 = half_sum(d.dim, d.odd_positive);
  d.weyl_components = {{WeylType::C, {0}}, {WeylType::B, {1}}};
  finish(d);
  return d;
}

RootDatum build_reductive(const std::vector<ReductiveFactor>& factors) {
  if (factors.empty()) throw ConstructionError("reductive datum needs at least one factor");
  RootDatum d;
  d.spec = FamilySpec::reductive(factors);
  std::size_t dim = 0;
  for (const auto& f : factors) {
    if (f.rank < 1 || (f.type != WeylType::A && f.type != WeylType::C)) {
      throw ConstructionError("reductive factors must be A_k or C_k with k >= 1");
    }
    dim += f.type == WeylType::A ? f.rank + 1 : f.rank;
  }
  d.dim = dim;
  d.signature.assign(dim, Rational(1));
  std::size_t next = 0;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    const auto& f = factors[k];
    if (k) {
      d.name += "x";
      d.separators.emplace_back(next, '|');
    }
    d.name += (f.type == WeylType::A ? "A" : "C") + std::to_string(f.rank);
    const std::size_t count = f.type == WeylType::A ? f.rank + 1 : f.rank;
    auto coords = iota_coords(next, count);
    next += count;
    if (f.type == WeylType::A) {
      add_type_a(d.even_positive, d.simple_even, coords, dim);
    } else {
      add_type_bc(d.even_positive, d.simple_even, coords, dim, WeylType::C);
    }
    d.weyl_components.push_back({f.type, std::move(coords)});
  }
  d.rho0 = half_sum(dim, d.even_positive);
  d.rho1 = Weight(dim);
  finish(d);
  return d;
}

}  // namespace

std::vector<ReductiveFactor> parse_reductive_type(std::string_view text) {
  std::vector<ReductiveFactor> out;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("invalid reductive type '" + std::string(text) + "'"); };
  while (i < text.size()) {
    const char t = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (t != 'A' && t != 'C') fail();
    ++i;
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == i) fail();
    out.push_back({t == 'A' ? WeylType::A : WeylType::C, std::stoi(std::string(text.substr(i, j - i)))});
    i = j;
    if (i < text.size()) {
      if (text[i] != 'x' && text[i] != 'X' && text[i] != '*') fail();
      ++i;
      if (i == text.size()) fail();
    }
  }
  if (out.empty()) fail();
  return out;
}

RootDatum build_root_datum(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::GL: return build_gl(spec.m, spec.n);
    case Family::OSP2: return build_osp2(spec.n);
    case Family::P: return build_p(spec.n);
    case Family::OSP32: return build_osp32();
    case Family::Reductive: return build_reductive(spec.factors);
  }
  throw ConstructionError("unsupported family");
}

void check_dim(const RootDatum& datum, const Weight& lambda) {
  if (lambda.dim() != datum.dim) {
    throw DimensionMismatch("weight has " + std::to_string(lambda.dim()) + " coordinates but " +
                            datum.name + " needs " + std::to_string(datum.dim));
  }
}

Rational bilinear(const RootDatum& datum, const Weight& lambda, const Weight& mu) {
  check_dim(datum, lambda);
  check_dim(datum, mu);
  Rational sum(0);
  for (std::size_t i = 0; i < datum.dim; ++i) sum += datum.signature[i] * lambda[i] * mu[i];
  return sum;
}

Rational pairing_coroot(const RootDatum& datum, const Weight& lambda, const Weight& alpha) {
  const Rational norm = bilinear(datum, alpha, alpha);
  if (norm == 0) throw DomainError("coroot of an isotropic root " + alpha.str() + " is undefined");
  return Rational(2) * bilinear(datum, lambda, alpha) / norm;
}

bool is_integral(const RootDatum& datum, const Weight& lambda) {
  return std::all_of(datum.even_positive.begin(), datum.even_positive.end(),
                     [&](const Root& a) { return is_integer(pairing_coroot(datum, lambda, a)); });
}

bool is_isotropic(const RootDatum& datum, const Weight& alpha) {
  return bilinear(datum, alpha, alpha) == 0;
}

std::vector<Rational> express_in_simple_roots(const RootDatum& datum, const Weight& v) {
  check_dim(datum, v);
  const std::size_t rows = datum.dim;
  const std::size_t cols = datum.simple_even.size();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = datum.simple_even[j].weight[i];
    a[i][cols] = v[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = Rational(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k <= cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) throw DomainError(v.str() + " is not in the span of the even simple roots");
  }
  std::vector<Rational> coeffs(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) coeffs[pivot_col[i]] = a[i][cols];
  return coeffs;
}

Weight parse_weight(const RootDatum& datum, std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in weight '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> coords;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',' || s[i] == '|' || s[i] == ';') {
      coords.push_back(parse_rational(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  Weight w(std::move(coords));
  check_dim(datum, w);
  return w;
}

std::string format_weight(const RootDatum& datum, const Weight& lambda) {
  check_dim(datum, lambda);
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.dim(); ++i) {
    if (i) {
      char sep = ',';
      for (const auto& [pos, c] : datum.separators)
        if (pos == i) sep = c;
      out += sep;
    }
    out += to_string(lambda[i]);
  }
  return out + ")";
}

}  // namespace superlink
