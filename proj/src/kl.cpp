#include "superlink/kl.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "superlink/errors.hpp"

namespace superlink {

// ---------------------------------------------------------------- Polynomial

Polynomial::Polynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::int64_t c, std::size_t degree) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t Polynomial::at_one() const {
  std::int64_t sum = 0;
  for (auto c : coeffs_) sum += c;
  return sum;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> out(k, 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || mag != 1) out += std::to_string(mag);
    if (k >= 1) out += "q";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

// -------------------------------------------------------------- CoxeterGroup

CoxeterGroup::CoxeterGroup(std::size_t dim, std::vector<WeylElement> generators, std::size_t cap)
    : generators_(std::move(generators)) {
  descriptor_ = "dim" + std::to_string(dim);
  for (const auto& g : generators_) descriptor_ += ":" + g.to_cycle_string();
  elements_.push_back(WeylElement::identity(dim));
  index_.emplace(elements_[0], 0);
  length_.push_back(0);
  for (std::size_t head = 0; head < elements_.size(); ++head) {
    for (const auto& g : generators_) {
      WeylElement next = elements_[head] * g;
      if (index_.count(next)) continue;
      if (elements_.size() >= cap) {
        throw CapExceeded("Weyl group order exceeds the KL cap of " + std::to_string(cap));
      }
      index_.emplace(next, elements_.size());
      elements_.push_back(std::move(next));
      length_.push_back(length_[head] + 1);
    }
  }
  left_.assign(generators_.size(), std::vector<std::size_t>(elements_.size()));
  right_.assign(generators_.size(), std::vector<std::size_t>(elements_.size()));
  for (std::size_t s = 0; s < generators_.size(); ++s) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      left_[s][i] = index_.at(generators_[s] * elements_[i]);
      right_[s][i] = index_.at(elements_[i] * generators_[s]);
    }
  }
  longest_ = elements_.size() - 1;
}

namespace {

std::vector<WeylElement> simple_generators(const RootDatum& datum) {
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < datum.simple_even.size(); ++i) gens.push_back(simple_reflection(datum, i));
  return gens;
}

}  // namespace

CoxeterGroup::CoxeterGroup(const RootDatum& datum, std::size_t cap)
    : CoxeterGroup(datum.dim, simple_generators(datum), cap) {}

std::size_t CoxeterGroup::index_of(const WeylElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw DomainError("element " + w.to_cycle_string() + " is not in the group");
  return it->second;
}

std::size_t CoxeterGroup::inverse(std::size_t i) const { return index_of(elements_[i].inverse()); }

std::size_t CoxeterGroup::from_word(const std::vector<std::size_t>& word) const {
  std::size_t cur = 0;
  for (auto s : word) {
    if (s >= generators_.size()) throw DomainError("generator index out of range");
    cur = right_mul(cur, s);
  }
  return cur;
}

std::vector<std::size_t> CoxeterGroup::reduced_word(std::size_t i) const {
  std::vector<std::size_t> word;
  while (i != 0) {
    std::size_t s = 0;
    while (length_[right_mul(i, s)] > length_[i]) ++s;
    word.push_back(s);
    i = right_mul(i, s);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<bool> CoxeterGroup::lower_interval(std::size_t w) const {
  // [e, v s] = [e, v] u [e, v] s whenever v < v s.
  std::vector<bool> in(size(), false);
  in[0] = true;
  std::vector<std::size_t> members{0};
  for (auto s : reduced_word(w)) {
    const std::size_t count = members.size();
    for (std::size_t k = 0; k < count; ++k) {
      const std::size_t y = right_mul(members[k], s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  return in;
}

bool CoxeterGroup::bruhat_leq(std::size_t x, std::size_t w) const {
  if (length_[x] > length_[w]) return false;
  return lower_interval(w)[x];
}

bool bruhat_leq(const CoxeterGroup& group, std::size_t x, std::size_t w) { return group.bruhat_leq(x, w); }

// ------------------------------------------------------------------ KLEngine

KLEngine::KLEngine(std::shared_ptr<const CoxeterGroup> group) : group_(std::move(group)) {}

KLPolynomial KLEngine::polynomial(std::size_t x, std::size_t w) { return (*row(w))[x]; }

std::int64_t KLEngine::mu(std::size_t x, std::size_t w) {
  const auto& g = *group_;
  if (g.length(x) >= g.length(w)) return 0;
  const std::size_t diff = g.length(w) - g.length(x);
  if (diff % 2 == 0) return 0;
  return (*row(w))[x].coeff((diff - 1) / 2);
}

std::shared_ptr<const KLEngine::Row> KLEngine::row(std::size_t w) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = rows_.find(w);
    if (it != rows_.end()) return it->second;
  }
  auto computed = compute_row(w);
  std::lock_guard<std::mutex> lock(mutex_);
  return rows_.emplace(w, std::move(computed)).first->second;
}

std::shared_ptr<const KLEngine::Row> KLEngine::compute_row(std::size_t w) {
  const auto& g = *group_;
  auto out = std::make_shared<Row>(g.size());
  if (w == 0) {
    (*out)[0] = Polynomial::constant(1);
    return out;
  }
  std::size_t s = 0;
  while (g.length(g.left_mul(s, w)) > g.length(w)) ++s;
  const std::size_t v = g.left_mul(s, w);
  const auto row_v = row(v);
  const auto lower_w = g.lower_interval(w);

  // z < v with s z < z and mu(z, v) != 0.
  std::vector<std::pair<std::size_t, std::int64_t>> correction;
  for (std::size_t z = 0; z < g.size(); ++z) {
    if (z == v || (*row_v)[z].is_zero()) continue;
    if (g.length(g.left_mul(s, z)) > g.length(z)) continue;
    const std::size_t diff = g.length(v) - g.length(z);
    if (diff % 2 == 0) continue;
    const std::int64_t m = (*row_v)[z].coeff((diff - 1) / 2);
    if (m != 0) correction.emplace_back(z, m);
  }
  std::vector<std::shared_ptr<const Row>> correction_rows;
  for (const auto& [z, m] : correction) correction_rows.push_back(row(z));

  for (std::size_t x = 0; x < g.size(); ++x) {
    if (!lower_w[x]) continue;
    const std::size_t sx = g.left_mul(s, x);
    const std::size_t c = g.length(sx) < g.length(x) ? 1 : 0;
    Polynomial p = (*row_v)[sx].shifted(1 - c) + (*row_v)[x].shifted(c);
    for (std::size_t k = 0; k < correction.size(); ++k) {
      const auto [z, m] = correction[k];
      const Polynomial& pxz = (*correction_rows[k])[x];
      if (pxz.is_zero()) continue;
      p -= Polynomial::monomial(m, (g.length(w) - g.length(z)) / 2) * pxz;
    }
    (*out)[x] = std::move(p);
  }
  return out;
}

std::shared_ptr<KLEngine> kl_engine_for(const RootDatum& datum, std::size_t cap) {
  static std::mutex registry_mutex;
  static std::unordered_map<std::string, std::shared_ptr<KLEngine>> registry;
  std::string key = "dim" + std::to_string(datum.dim);
  for (std::size_t i = 0; i < datum.simple_even.size(); ++i)
    key += ":" + simple_reflection(datum, i).to_cycle_string();
  {
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second;
  }
  auto engine = std::make_shared<KLEngine>(std::make_shared<CoxeterGroup>(datum, cap));
  std::lock_guard<std::mutex> lock(registry_mutex);
  return registry.emplace(key, std::move(engine)).first->second;
}

KLPolynomial kl_polynomial(const RootDatum& datum, const WeylElement& x, const WeylElement& w,
                           std::size_t cap) {
  auto engine = kl_engine_for(datum, cap);
  const auto& g = engine->group();
  return engine->polynomial(g.index_of(x), g.index_of(w));
}

std::int64_t verma_mult(const RootDatum& datum, const Weight& lambda, const WeylElement& w,
                        const WeylElement& x, std::size_t cap) {
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) throw UnsupportedInput("verma_mult needs an integral weight");
  if (!is_antidominant(datum, lambda)) {
    throw UnsupportedInput("verma_mult needs an antidominant weight, got " + format_weight(datum, lambda));
  }
  if (!stabilizer_roots(datum, lambda).empty()) {
    throw UnsupportedInput("verma_mult needs a regular weight; singular orbits require a user table");
  }
  auto engine = kl_engine_for(datum, cap);
  const auto& g = engine->group();
  const WeylElement& w0 = g.element(g.longest());
  return engine->polynomial(g.index_of(w0 * w), g.index_of(w0 * x)).at_one();
}

// ----------------------------------------------------------------- MultTable

MultTable MultTable::builtin(std::size_t kl_cap) {
  MultTable t(Provenance::BuiltinKL);
  t.kl_cap_ = kl_cap;
  return t;
}

std::string to_string(MultTable::Provenance p) {
  switch (p) {
    case MultTable::Provenance::BuiltinKL: return "builtin-KL";
    case MultTable::Provenance::UserSupplied: return "user-supplied";
    case MultTable::Provenance::CharacterOracle: return "character-oracle";
  }
  return "?";
}

void MultTable::set(const Weight& lambda, const Weight& gamma, std::int64_t value) {
  if (value < 0) throw DomainError("multiplicities are nonnegative");
  if (lambda == gamma && value != 1) throw DomainError("diagonal multiplicities must be 1");
  entries_[{lambda, gamma}] = value;
}

std::optional<std::int64_t> MultTable::lookup(const RootDatum& datum, const Weight& lambda,
                                              const Weight& gamma) const {
  if (provenance_ != Provenance::BuiltinKL) {
    auto it = entries_.find({lambda, gamma});
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  if (datum.family() != Family::Reductive) {
    throw UnsupportedInput("builtin multiplicities exist only for reductive data; supply --mult-table for " +
                           datum.name);
  }
  const Parabolic full = Parabolic::full(datum);
  const auto [base, u] = antidominant_rep(datum, lambda, full);
  if (!stabilizer_roots(datum, base).empty()) {
    throw UnsupportedInput("builtin multiplicities need a regular orbit; " + format_weight(datum, lambda) +
                           " is singular");
  }
  if (!is_integral(datum, gamma)) return 0;
  const auto [gamma_base, v] = antidominant_rep(datum, gamma, full);
  if (!(gamma_base == base)) return 0;
  return verma_mult(datum, base, u.inverse(), v.inverse(), kl_cap_);
}

std::vector<Weight> MultTable::gammas_for(const Weight& lambda) const {
  std::vector<Weight> out;
  for (const auto& [key, value] : entries_)
    if (key.first == lambda) out.push_back(key.second);
  return out;
}

MultTable parse_mult_table(const RootDatum& datum, std::string_view text) {
  MultTable table(MultTable::Provenance::UserSupplied);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string a, b, c, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> c) || (fields >> extra)) {
      throw ParseError("mult table line " + std::to_string(lineno) + ": expected '<weight> <weight> <integer>'");
    }
    try {
      const Weight lambda = parse_weight(datum, a);
      const Weight gamma = parse_weight(datum, b);
      const Rational value = parse_rational(c);
      if (!is_integer(value) || value < 0) throw ParseError("multiplicity must be a nonnegative integer");
      auto existing = table.entries().find({lambda, gamma});
      if (existing != table.entries().end() && existing->second != value.numerator()) {
        throw ParseError("conflicting duplicate entry");
      }
      table.set(lambda, gamma, value.numerator());
    } catch (const Error& e) {
      throw ParseError("mult table line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return table;
}

MultTable load_mult_table(const RootDatum& datum, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open mult table '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_mult_table(datum, buf.str());
}

// ------------------------------------------------------- Whittaker multiplicities

std::vector<Weight> whittaker_gamma_set(const RootDatum& datum, const Weight& mu,
                                        const WhittakerCharacter& zeta) {
  const Parabolic sub = weyl_subgroup_of(datum, zeta);
  std::vector<Weight> out;
  for (auto& gamma : orbit_dot(datum, mu, sub))
    if (is_antidominant(datum, gamma, sub)) out.push_back(std::move(gamma));
  return out;
}

std::int64_t whittaker_mult(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                            const WhittakerCharacter& zeta, const MultTable& table) {
  check_dim(datum, lambda);
  check_dim(datum, mu);
  if (!is_integral(datum, lambda) || !is_integral(datum, mu)) {
    throw UnsupportedInput("Whittaker multiplicities need integral weights");
  }
  const auto gammas = whittaker_gamma_set(datum, mu, zeta);
  if (gammas.size() != 1) {
    throw Error("internal: W_zeta-antidominant set for integral " + format_weight(datum, mu) +
                " has " + std::to_string(gammas.size()) + " elements");
  }
  std::int64_t total = 0;
  std::string missing;
  for (const auto& gamma : gammas) {
    auto value = table.lookup(datum, lambda, gamma);
    if (!value) {
      missing += " [" + format_weight(datum, lambda) + " " + format_weight(datum, gamma) + "]";
      continue;
    }
    total += *value;
  }
  if (!missing.empty()) throw MissingTableEntry("multiplicity table lacks required pairs:" + missing);
  return total;
}

std::int64_t whittaker_length(const RootDatum& datum, const Weight& lambda, const WhittakerCharacter& zeta,
                              const MultTable& table) {
  check_dim(datum, lambda);
  if (!is_integral(datum, lambda)) throw UnsupportedInput("Whittaker lengths need an integral weight");
  const Parabolic sub = weyl_subgroup_of(datum, zeta);
  std::vector<Weight> params;
  if (table.provenance() == MultTable::Provenance::BuiltinKL) {
    for (auto& gamma : orbit_dot(datum, lambda, Parabolic::full(datum)))
      if (is_antidominant(datum, gamma, sub)) params.push_back(std::move(gamma));
  } else {
    for (const auto& gamma : table.gammas_for(lambda))
      params.push_back(antidominant_rep(datum, gamma, sub).first);
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
  }
  std::int64_t total = 0;
  for (const auto& mu : params) total += whittaker_mult(datum, lambda, mu, zeta, table);
  return total;
}

}  // namespace superlink
