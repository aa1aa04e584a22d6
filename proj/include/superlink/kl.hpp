#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "superlink/limits.hpp"
#include "superlink/root_data.hpp"
#include "superlink/weyl.hpp"
#include "superlink/whittaker.hpp"

namespace superlink {

// Integer polynomial in q, constant term first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::int64_t> coeffs);
  static Polynomial constant(std::int64_t c) { return Polynomial({c}); }
  static Polynomial monomial(std::int64_t c, std::size_t degree);

  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
  std::int64_t at_one() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial shifted(std::size_t k) const;  // q^k * this
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // "1 + q + 2q^2", "0" for zero.
  std::string str() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

using KLPolynomial = Polynomial;

// A finite Coxeter group given by generating reflections acting as signed
// permutations. Elements are indexed in breadth-first order, so lengths are
// non-decreasing with the index and index 0 is the identity.
class CoxeterGroup {
 public:
  CoxeterGroup(std::size_t dim, std::vector<WeylElement> generators,
               std::size_t cap = kDefaultKlGroupCap);
  // Full even Weyl group of a datum, generated by Pi_0.
  explicit CoxeterGroup(const RootDatum& datum, std::size_t cap = kDefaultKlGroupCap);

  std::size_t size() const { return elements_.size(); }
  std::size_t rank() const { return generators_.size(); }
  const std::string& descriptor() const { return descriptor_; }

  const WeylElement& element(std::size_t i) const { return elements_[i]; }
  std::size_t index_of(const WeylElement& w) const;
  std::size_t length(std::size_t i) const { return length_[i]; }
  std::size_t left_mul(std::size_t s, std::size_t i) const { return left_[s][i]; }
  std::size_t right_mul(std::size_t i, std::size_t s) const { return right_[s][i]; }
  std::size_t longest() const { return longest_; }
  std::size_t inverse(std::size_t i) const;

  // Word of generator indices, w = s_{word[0]} s_{word[1]} ...
  std::size_t from_word(const std::vector<std::size_t>& word) const;
  std::vector<std::size_t> reduced_word(std::size_t i) const;

  std::vector<bool> lower_interval(std::size_t w) const;
  bool bruhat_leq(std::size_t x, std::size_t w) const;

 private:
  std::vector<WeylElement> generators_;
  std::vector<WeylElement> elements_;
  std::unordered_map<WeylElement, std::size_t, WeylElementHash> index_;
  std::vector<std::size_t> length_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
  std::size_t longest_ = 0;
  std::string descriptor_;
};

// Memoized KL polynomials for one group via the standard descent recursion.
// Thread-safe: rows are computed outside the lock and published once;
// concurrent callers may duplicate work but always read identical values.
class KLEngine {
 public:
  explicit KLEngine(std::shared_ptr<const CoxeterGroup> group);

  const CoxeterGroup& group() const { return *group_; }
  KLPolynomial polynomial(std::size_t x, std::size_t w);
  // mu(x, w): coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}.
  std::int64_t mu(std::size_t x, std::size_t w);

 private:
  using Row = std::vector<KLPolynomial>;
  std::shared_ptr<const Row> row(std::size_t w);
  std::shared_ptr<const Row> compute_row(std::size_t w);

  std::shared_ptr<const CoxeterGroup> group_;
  std::mutex mutex_;
  std::unordered_map<std::size_t, std::shared_ptr<const Row>> rows_;
};

// Shared engine for the full Weyl group of a datum, keyed by the group's
// generator descriptor.
std::shared_ptr<KLEngine> kl_engine_for(const RootDatum& datum, std::size_t cap = kDefaultKlGroupCap);

bool bruhat_leq(const CoxeterGroup& group, std::size_t x, std::size_t w);
KLPolynomial kl_polynomial(const RootDatum& datum, const WeylElement& x, const WeylElement& w,
                           std::size_t cap = kDefaultKlGroupCap);

// [M(w . lambda) : L(x . lambda)] = P_{w0 w, w0 x}(1) for antidominant
// regular integral lambda.
std::int64_t verma_mult(const RootDatum& datum, const Weight& lambda, const WeylElement& w,
                        const WeylElement& x, std::size_t cap = kDefaultKlGroupCap);

// Multiplicities [M(lambda) : L(gamma)] for the standard modules of
// category O. Builtin tables are computed from KL polynomials on demand and
// exist only for reductive data and regular integral orbits.
class MultTable {
 public:
  enum class Provenance { BuiltinKL, UserSupplied, CharacterOracle };

  static MultTable builtin(std::size_t kl_cap = kDefaultKlGroupCap);
  explicit MultTable(Provenance provenance = Provenance::UserSupplied) : provenance_(provenance) {}

  Provenance provenance() const { return provenance_; }
  void set(const Weight& lambda, const Weight& gamma, std::int64_t value);
  const std::map<std::pair<Weight, Weight>, std::int64_t>& entries() const { return entries_; }

  std::optional<std::int64_t> lookup(const RootDatum& datum, const Weight& lambda,
                                     const Weight& gamma) const;
  // Weights gamma with a known entry for this lambda (table-backed only).
  std::vector<Weight> gammas_for(const Weight& lambda) const;

 private:
  Provenance provenance_;
  std::size_t kl_cap_ = kDefaultKlGroupCap;
  std::map<std::pair<Weight, Weight>, std::int64_t> entries_;
};

std::string to_string(MultTable::Provenance p);

// Line format "<weight> <weight> <integer>", '#' starts a comment.
MultTable parse_mult_table(const RootDatum& datum, std::string_view text);
MultTable load_mult_table(const RootDatum& datum, const std::string& path);

// W_zeta-antidominant gamma with mu in W_zeta . gamma. Singleton for
// integral mu; summation is over this set as written.
std::vector<Weight> whittaker_gamma_set(const RootDatum& datum, const Weight& mu,
                                        const WhittakerCharacter& zeta);

std::int64_t whittaker_mult(const RootDatum& datum, const Weight& lambda, const Weight& mu,
                            const WhittakerCharacter& zeta, const MultTable& table);

// Composition length of the standard Whittaker module M(lambda, zeta).
std::int64_t whittaker_length(const RootDatum& datum, const Weight& lambda,
                              const WhittakerCharacter& zeta, const MultTable& table);

}  // namespace superlink
