#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tropval/groebner.hpp"
#include "tropval/presentation.hpp"
#include "tropval/tropical.hpp"

namespace tropval {

enum class ValuationKind { WeightInduced, Tabulated };

using Evaluator = std::function<TropicalValue(const Polynomial&)>;

/// A function A -> Q ∪ {-inf} on A = K[X]/I, either induced by a weight vector
/// through normal forms or given pointwise (pullbacks, sums). Immutable; all
/// bases are computed at construction.
class CandidateValuation {
 public:
  /// v_w(f) = max weight over the terms of NF(f) for a w-refined basis.
  /// Negative weights are accepted when the refined basis can be certified
  /// against the homogenized initial ideal; otherwise throws NonTermination.
  static CandidateValuation weight_induced(const Presentation& P, const WeightVector& w);
  static CandidateValuation tabulated(const Presentation& P, Evaluator base, std::string label);

  /// Same valuation with v(f) forced to `value` (keyed by f modulo I, up to scalars).
  CandidateValuation with_override(const Polynomial& f, const TropicalValue& value) const;
  CandidateValuation with_injectivity_asserted() const;

  ValuationKind kind() const;
  const Presentation& presentation() const;
  const Ring& ring() const { return presentation().ring; }
  /// Weight as supplied (weight-induced only; throws InvalidArgument otherwise).
  const WeightVector& weight() const;
  /// Weight with the coefficient valuation applied.
  const WeightVector& effective_weight() const;
  /// The w-refined reduced basis (weight-induced only).
  const GroebnerBasis& basis() const;
  /// Reduced grevlex basis of I, used for zero tests and override keys.
  const GroebnerBasis& reference_basis() const;
  bool injectivity_asserted() const;
  const std::string& label() const;
  std::size_t override_count() const;

  TropicalValue evaluate(const Polynomial& f) const;
  /// Canonical key of f in A: monic grevlex normal form (zero for f in I).
  Polynomial class_key(const Polynomial& f) const;

 private:
  struct State;
  explicit CandidateValuation(std::shared_ptr<const State> s) : s_(std::move(s)) {}
  std::shared_ptr<const State> s_;
};

CandidateValuation make_weight_valuation(const Presentation& P, const WeightVector& w);
/// Throws RingMismatch.
TropicalValue evaluate(const CandidateValuation& v, const Polynomial& f);

struct MultiplicativityFailure {
  Polynomial a, b;
  TropicalValue product_value;   // v(ab)
  TropicalValue expected;        // v(a) ⊗ v(b)
};

struct PairWitness {
  Polynomial a, b;
};

enum class AxiomVerdict { Valuation, QuasiValuationOnly };
std::string_view to_string(AxiomVerdict v);

struct AxiomReport {
  std::size_t pairs_checked = 0;
  std::vector<MultiplicativityFailure> multiplicativity_failures;
  /// v(a+b) < v(a) ⊕ v(b) although v(a) != v(b).
  std::vector<PairWitness> p1_failures;
  std::size_t strict_drops = 0;
  std::size_t subadditivity_violations = 0;
  std::size_t submultiplicativity_violations = 0;
  bool zero_axiom_holds = true;
  /// True when the verdict holds for all of A, not just the samples
  /// (weight-induced valuations on a free algebra).
  bool exact_by_structure = false;
  AxiomVerdict verdict = AxiomVerdict::Valuation;
};

/// Sample pairs: first the low-degree pool taken as unordered pairs (up to
/// n_pairs/2 of them), then random sparse pairs from the seed. Pairs with an
/// element in I are skipped.
std::vector<std::pair<Polynomial, Polynomial>> sample_pairs(const CandidateValuation& v,
                                                            std::uint64_t seed,
                                                            std::size_t n_pairs,
                                                            int degree_bound);

AxiomReport check_axioms(const CandidateValuation& v, std::uint64_t seed, std::size_t n_pairs,
                         int degree_bound);

/// (v(x_1), ..., v(x_n)). Throws NonfiniteGeneratorValue.
WeightVector tropicalize(const CandidateValuation& v);
WeightVector tropicalize(const Evaluator& v, const Presentation& P);

enum class MembershipMode { Prevariety, Certified };

struct MembershipResult {
  bool member = false;
  /// Prevariety mode: a generator with a unique top term.
  std::optional<Polynomial> witness_generator;
  /// Certified mode: a monomial of in_w(I).
  std::optional<ExponentVector> witness_monomial;
};

MembershipResult check_trop_membership(const Presentation& P, const WeightVector& w,
                                       MembershipMode mode);

/// f*(v) for the map B' -> A sending the i-th variable of B' to images[i].
/// The ideal of B' must map into I (NotAHomomorphism); injectivity is taken
/// from the caller and recorded on the result.
CandidateValuation pullback(const std::vector<Polynomial>& images, const CandidateValuation& v,
                            const Presentation& target);

struct PresentationChart {
  Presentation presentation;
  std::vector<Polynomial> images;  // images of its variables in the algebra of v
};

struct ConsistencyReport {
  bool consistent = true;
  std::vector<WeightVector> components;  // φ̂ per chart
  std::vector<std::string> disagreements;
};

/// φ̂ of v read through each chart; generators with the same name in two
/// charts must have the same image (DictionaryMismatch) and the same value.
ConsistencyReport cross_presentation_consistency(const std::vector<PresentationChart>& charts,
                                                 const CandidateValuation& v);

}  // namespace tropval
