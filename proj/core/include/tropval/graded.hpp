#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tropval/rational.hpp"
#include "tropval/tropical.hpp"
#include "tropval/valuation.hpp"

namespace tropval {

/// Element of the grading monoid (non-negative integer tuple).
using Grade = std::vector<int>;
using BasisId = std::size_t;

/// (s, i): the i-th basis vector of the component A_s.
struct BasisKey {
  Grade grade;
  int index = 0;
  friend auto operator<=>(const BasisKey&, const BasisKey&) = default;
};

/// Finite linear combination of basis vectors; never stores a zero coefficient.
using Element = std::map<BasisId, Rational>;

void add_scaled(Element& target, const Element& source, const Rational& factor);
Element basis_element(BasisId id);

struct GradedAlgebraSpec {
  std::size_t monoid_dim = 0;
  std::vector<Rational> truncation_weights;
  Rational truncation_bound;
  struct Component {
    Grade grade;
    int size = 1;
  };
  std::vector<Component> components;
  struct Product {
    BasisKey left, right;
    std::vector<std::pair<BasisKey, Rational>> terms;
  };
  std::vector<Product> products;
  std::map<BasisKey, std::string> labels;
};

/// A = ⊕ A_s truncated at degree N, where the degree of a grade is a fixed
/// rational functional. e_i·e_j is defined when deg(e_i) + deg(e_j) <= N; a
/// defined product with no table entry is zero. Immutable after build().
class GradedAlgebra {
 public:
  struct Component {
    Grade grade;
    int size = 0;
    BasisId first = 0;
  };

  /// Validates the table and checks associativity on every triple whose
  /// iterated products are defined. Throws AssociativityViolation, InvalidArgument.
  static GradedAlgebra build(const GradedAlgebraSpec& spec);

  std::size_t monoid_dim() const { return dim_; }
  const std::vector<Rational>& truncation_weights() const { return weights_; }
  const Rational& truncation_bound() const { return bound_; }
  const std::vector<Component>& components() const { return components_; }
  std::size_t basis_size() const { return basis_.size(); }
  const BasisKey& key(BasisId id) const;
  const Grade& grade(BasisId id) const { return key(id).grade; }
  std::optional<BasisId> find(const BasisKey& key) const;
  std::optional<std::size_t> find_component(const Grade& s) const;

  Rational degree(const Grade& s) const;
  Rational degree(BasisId id) const { return degree_[id]; }
  /// Largest degree among the supported basis vectors (-1 for zero).
  Rational degree(const Element& e) const;

  bool product_defined(BasisId a, BasisId b) const;
  bool product_defined(const Element& a, const Element& b) const;
  /// Throws IndexOutOfRange when the product leaves the truncation.
  const Element& product(BasisId a, BasisId b) const;
  Element multiply(const Element& a, const Element& b) const;

  /// Nonzero products, keyed by basis pair.
  const std::map<std::pair<BasisId, BasisId>, Element>& table() const { return table_; }

  /// Same algebra with a new multiplication table (re-validated).
  GradedAlgebra with_table(const std::map<std::pair<BasisId, BasisId>, Element>& table) const;

  std::string label(BasisId id) const;
  std::string to_string(const Element& e) const;
  GradedAlgebraSpec to_spec() const;

 private:
  GradedAlgebra() = default;
  void validate_associativity() const;

  std::size_t dim_ = 0;
  std::vector<Rational> weights_;
  Rational bound_;
  std::vector<Component> components_;
  std::vector<BasisKey> basis_;
  std::vector<Rational> degree_;
  std::map<BasisKey, BasisId> index_;
  std::map<std::pair<BasisId, BasisId>, Element> table_;
  std::map<BasisId, std::string> labels_;
};

/// Lexicographically compared tuple of rational functionals on the monoid.
struct LexFunctional {
  std::vector<std::vector<Rational>> rows;

  static LexFunctional single(std::vector<Rational> row);
  std::size_t dim() const { return rows.empty() ? 0 : rows.front().size(); }
  std::vector<Rational> value(const Grade& s) const;
  /// First row only; the real-valued part.
  Rational primary(const Grade& s) const;
  std::string to_string() const;
};

/// Lex maximum over supported grades; nullopt for zero.
std::optional<std::vector<Rational>> lex_value(const GradedAlgebra& A, const LexFunctional& h,
                                               const Element& e);

/// Values from a functional, plus finitely many smaller values on
/// inhomogeneous elements. Override keys are normalized up to scalars.
class GradedValuation {
 public:
  explicit GradedValuation(LexFunctional functional) : functional_(std::move(functional)) {}

  /// Throws InvalidArgument for a homogeneous or zero key, or a value above
  /// the max of the components' values.
  GradedValuation with_override(const GradedAlgebra& A, const Element& e,
                                const TropicalValue& value) const;

  const LexFunctional& functional() const { return functional_; }
  const std::map<Element, TropicalValue>& overrides() const { return overrides_; }

  TropicalValue value(const GradedAlgebra& A, const Element& e) const;

 private:
  LexFunctional functional_;
  std::map<Element, TropicalValue> overrides_;
};

TropicalValue graded_value(const GradedAlgebra& A, const GradedValuation& gv, const Element& e);

struct GradedFailure {
  Element a, b;
  TropicalValue product_value;
  TropicalValue expected;
  bool homogeneous = false;
};

struct GradedAxiomReport {
  bool full_check = false;
  bool zero_axiom_holds = true;
  std::size_t homogeneous_pairs_checked = 0;
  std::size_t sampled_pairs_checked = 0;
  std::vector<GradedFailure> multiplicativity_failures;
  std::vector<std::pair<Element, Element>> subadditivity_failures;

  bool passes() const {
    return zero_axiom_holds && multiplicativity_failures.empty() && subadditivity_failures.empty();
  }
};

/// Sampled element pairs with defined products: pairs from a pool of
/// low-degree basis vectors and their ± sums, then seeded random sparse elements.
std::vector<std::pair<Element, Element>> sample_element_pairs(const GradedAlgebra& A,
                                                              std::uint64_t seed,
                                                              std::size_t n_pairs);

/// Graded valuation axioms: v(0) = -inf, multiplicativity on every basis pair
/// (and sampled pairs inside components), subadditivity on sampled pairs.
GradedAxiomReport check_graded_axioms(const GradedAlgebra& A, const GradedValuation& gv,
                                      std::uint64_t seed, std::size_t n_samples);
/// The above plus multiplicativity on sampled inhomogeneous pairs.
GradedAxiomReport check_full_axioms(const GradedAlgebra& A, const GradedValuation& gv,
                                    std::uint64_t seed, std::size_t n_samples);

struct TriangularityResult {
  bool holds = true;
  std::optional<std::pair<BasisId, BasisId>> witness;
  std::string reason;
};

/// Every basis product is nonzero, every grade in it has h <= h(s1) + h(s2),
/// and that bound is attained.
TriangularityResult check_lower_triangular(const GradedAlgebra& A, const LexFunctional& h);

struct MonoidTheoremReport {
  bool hypothesis_products = true;  // every product meets grade s1 + s2
  std::optional<std::pair<BasisId, BasisId>> product_witness;
  bool hypothesis_total_order = true;  // w separates the component grades
  std::optional<std::pair<Grade, Grade>> order_witness;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Element, Element>> conclusion_failures;

  bool hypotheses_hold() const { return hypothesis_products && hypothesis_total_order; }
  bool conclusion_holds() const { return conclusion_failures.empty(); }
};

MonoidTheoremReport check_monoid_theorem(const GradedAlgebra& A, const LexFunctional& w,
                                         std::uint64_t seed, std::size_t n_samples);

/// Keeps the h-top grades of each product. Throws NotLowerTriangular.
GradedAlgebra associated_graded(const GradedAlgebra& A, const LexFunctional& h);

/// Looks for a·b = 0 with a, b nonzero and deg a + deg b <= bound; a runs over
/// basis vectors and e_i ± e_j of equal degree, b over all combinations.
std::optional<std::pair<Element, Element>> zero_divisor_search(const GradedAlgebra& A,
                                                               const Rational& bound);

/// Regrades A along the linear map s ↦ M s (rows of M, non-negative integer
/// entries); components with equal image merge. ids[old] gives the new id.
struct Coarsening {
  GradedAlgebra algebra;
  std::vector<BasisId> ids;
};
Coarsening coarsen(const GradedAlgebra& A, const std::vector<std::vector<int>>& M,
                   std::vector<Rational> truncation_weights);

/// Polynomial ring in k variables graded by exponent vector, truncated at total degree N.
GradedAlgebra monoid_algebra(const std::vector<std::string>& vars, int N);

}  // namespace tropval
