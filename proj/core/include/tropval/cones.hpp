#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tropval/valuation.hpp"

namespace tropval {

enum class Relation { Implies, Arrow };
enum class RelationStatus { HoldsCertified, HoldsNoCounterexample, Refuted };

std::string_view to_string(Relation r);
std::string_view to_string(RelationStatus s);

struct RelationVerdict {
  Relation relation = Relation::Implies;
  RelationStatus status = RelationStatus::HoldsNoCounterexample;
  std::size_t samples = 0;
  /// Refuted ⇒: v(a) <= v(b) but w(a) > w(b). Refuted →: `a` lies in one
  /// side's initial ideal and not in the other's (`b` unset).
  std::optional<Polynomial> witness_a;
  std::optional<Polynomial> witness_b;
  std::string certificate;

  bool refuted() const { return status == RelationStatus::Refuted; }
};

/// Default bound on the degree of standard monomials searched for a refuting pair.
inline constexpr int kImpliesDegreeBound = 6;

/// v ⇒ w. In exact mode two weight-induced valuations sharing one reduced
/// basis (in particular on a free algebra) are decided: v ⇒ w exactly when
/// w = c·v with c >= 0 on the variables that occur in normal forms; a refuting
/// pair of standard monomials is searched by degree. Everything else is sampled.
RelationVerdict implies_check(const CandidateValuation& v, const CandidateValuation& w,
                              std::uint64_t seed, std::size_t n_samples, bool exact_mode,
                              int degree_bound = kImpliesDegreeBound);

/// Pointwise sum w1 + w2 (weight vectors add; tabulated values ⊗).
CandidateValuation add_valuations(const CandidateValuation& w1, const CandidateValuation& w2);

struct ConeSumResult {
  CandidateValuation sum;
  AxiomReport axioms;
  RelationVerdict implies;
};

/// Throws HypothesisFails when v ⇒ w1 or v ⇒ w2 is refuted.
ConeSumResult cone_sum(const CandidateValuation& v, const CandidateValuation& w1,
                       const CandidateValuation& w2, std::uint64_t seed, std::size_t n_samples,
                       int degree_bound = 3);

/// R·v for R > 0 (InvalidArgument otherwise).
CandidateValuation scale(const CandidateValuation& v, const Rational& R);

/// v → w on this presentation: in_v(in_w(I)) == in_v(I).
RelationVerdict arrow_check(const Presentation& P, const WeightVector& v, const WeightVector& w);
/// Same, with v and w replaced by their tropicalizations.
RelationVerdict arrow_check(const Presentation& P, const CandidateValuation& v,
                            const CandidateValuation& w);

struct FacetClass {
  WeightVector representative;  // first member in input order
  std::vector<std::size_t> members;  // indices into the input list
};

std::vector<FacetClass> facet_classes(const Presentation& P, const std::vector<WeightVector>& ws);

}  // namespace tropval
