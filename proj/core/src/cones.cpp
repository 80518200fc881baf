#include "tropval/cones.hpp"

#include <map>

#include "tropval/error.hpp"
#include "tropval/initial.hpp"

namespace tropval {

std::string_view to_string(Relation r) { return r == Relation::Implies ? "implies" : "arrow"; }

std::string_view to_string(RelationStatus s) {
  switch (s) {
    case RelationStatus::HoldsCertified: return "holds_certified";
    case RelationStatus::HoldsNoCounterexample: return "holds_no_counterexample";
    case RelationStatus::Refuted: return "refuted";
  }
  return "?";
}

namespace {

bool plain_weight(const CandidateValuation& v) {
  return v.kind() == ValuationKind::WeightInduced && v.override_count() == 0;
}

bool standard(const ExponentVector& e, const GroebnerBasis& G) {
  for (const auto& lm : G.leading)
    if (lm.divides(e)) return false;
  return true;
}

// Both valuations reduce with the same basis and the same leading monomials,
// so they read the same normal form and differ only in the weights applied.
bool shared_normal_forms(const CandidateValuation& v, const CandidateValuation& w) {
  const GroebnerBasis& a = v.basis();
  const GroebnerBasis& b = w.basis();
  if (a.gens.size() != b.gens.size()) return false;
  for (std::size_t i = 0; i < a.gens.size(); ++i)
    if (!(a.gens[i] == b.gens[i]) || a.leading[i] != b.leading[i]) return false;
  return true;
}

std::optional<Rational> proportionality(const WeightVector& v, const WeightVector& w,
                                        const std::vector<std::size_t>& vars) {
  std::optional<Rational> c;
  for (std::size_t i : vars)
    if (v[i] != 0) {
      c = w[i] / v[i];
      break;
    }
  if (!c) {
    for (std::size_t i : vars)
      if (w[i] != 0) return std::nullopt;
    return Rational(0);
  }
  if (*c < 0) return std::nullopt;
  for (std::size_t i : vars)
    if (w[i] != *c * v[i]) return std::nullopt;
  return c;
}

}  // namespace

RelationVerdict implies_check(const CandidateValuation& v, const CandidateValuation& w,
                              std::uint64_t seed, std::size_t n_samples, bool exact_mode,
                              int degree_bound) {
  if (!same_ring(v.ring(), w.ring()))
    throw Error(ErrorKind::RingMismatch, "implies_check: valuations live on different algebras");
  RelationVerdict out;
  out.relation = Relation::Implies;

  if (plain_weight(v) && plain_weight(w) && v.effective_weight() == w.effective_weight() &&
      shared_normal_forms(v, w)) {
    out.status = RelationStatus::HoldsCertified;
    out.certificate = "identical valuations";
    return out;
  }

  if (exact_mode && plain_weight(v) && plain_weight(w) && shared_normal_forms(v, w)) {
    const GroebnerBasis& G = v.basis();
    const std::size_t n = v.presentation().dimension();
    if (G.is_unit()) {
      out.status = RelationStatus::HoldsCertified;
      out.certificate = "zero algebra";
      return out;
    }
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < n; ++i) {
      ExponentVector e(n);
      e[i] = 1;
      if (standard(e, G)) vars.push_back(i);
    }
    const WeightVector& ev = v.effective_weight();
    const WeightVector& ew = w.effective_weight();
    if (auto c = proportionality(ev, ew, vars)) {
      out.status = RelationStatus::HoldsCertified;
      out.certificate = "w = " + to_string(*c) + "·v on the standard variables; " +
                        "values scale with the normal form, so every comparison carries over";
      return out;
    }
    std::vector<ExponentVector> mons;
    std::vector<int> degree;
    for (int d = 0; d <= degree_bound; ++d) {
      for (const auto& e : monomials_of_degree(n, d))
        if (standard(e, G)) {
          mons.push_back(e);
          degree.push_back(d);
        }
      for (std::size_t i = 0; i < mons.size(); ++i)
        for (std::size_t j = 0; j < mons.size(); ++j) {
          if (std::max(degree[i], degree[j]) != d) continue;
          if (ev.dot(mons[i]) <= ev.dot(mons[j]) && ew.dot(mons[i]) > ew.dot(mons[j])) {
            out.status = RelationStatus::Refuted;
            out.witness_a = Polynomial::monomial(v.ring(), mons[i]);
            out.witness_b = Polynomial::monomial(v.ring(), mons[j]);
            out.certificate = "standard monomials reverse their order";
            return out;
          }
        }
    }
  }

  for (const auto& [a, b] : sample_pairs(v, seed, n_samples, 3)) {
    for (int flip = 0; flip < 2; ++flip) {
      const Polynomial& p = flip ? b : a;
      const Polynomial& q = flip ? a : b;
      if (v.evaluate(p) <= v.evaluate(q) && w.evaluate(p) > w.evaluate(q)) {
        out.status = RelationStatus::Refuted;
        out.witness_a = p;
        out.witness_b = q;
        out.certificate = "sampled pair";
        return out;
      }
    }
    ++out.samples;
  }
  out.status = RelationStatus::HoldsNoCounterexample;
  out.certificate = "no counterexample in " + std::to_string(out.samples) + " sampled pairs";
  return out;
}

namespace {

Presentation with_scaled_coefficients(const Presentation& P, const Rational& factor,
                                      const std::optional<Rational>& add = std::nullopt) {
  if (P.coeff_valuation.is_trivial()) return P;
  auto t = *P.coeff_valuation.tadic;
  Rational weight = add ? Rational(t.t_weight + *add) : Rational(t.t_weight * factor);
  return Presentation(P.ring, P.ideal_gens, CoeffValuation::t_adic(t.t_index, weight));
}

}  // namespace

CandidateValuation add_valuations(const CandidateValuation& w1, const CandidateValuation& w2) {
  if (!same_ring(w1.ring(), w2.ring()))
    throw Error(ErrorKind::RingMismatch, "cannot add valuations on different algebras");
  if (plain_weight(w1) && plain_weight(w2)) {
    const Presentation& P = w1.presentation();
    std::optional<Rational> t2;
    if (!w2.presentation().coeff_valuation.is_trivial())
      t2 = w2.presentation().coeff_valuation.tadic->t_weight;
    return CandidateValuation::weight_induced(with_scaled_coefficients(P, 1, t2),
                                              w1.weight() + w2.weight());
  }
  Evaluator sum = [w1, w2](const Polynomial& f) { return trop_mul(w1.evaluate(f), w2.evaluate(f)); };
  return CandidateValuation::tabulated(w1.presentation(), std::move(sum),
                                       w1.label() + " + " + w2.label());
}

ConeSumResult cone_sum(const CandidateValuation& v, const CandidateValuation& w1,
                       const CandidateValuation& w2, std::uint64_t seed, std::size_t n_samples,
                       int degree_bound) {
  for (const CandidateValuation* w : {&w1, &w2}) {
    RelationVerdict h = implies_check(v, *w, seed, n_samples, true);
    if (h.refuted())
      throw Error(ErrorKind::HypothesisFails,
                  "hypothesis v => " + w->label() + " is refuted by (" + h.witness_a->to_string() +
                      ", " + h.witness_b->to_string() + ")");
  }
  CandidateValuation sum = add_valuations(w1, w2);
  AxiomReport axioms = check_axioms(sum, seed, n_samples, degree_bound);
  RelationVerdict implies = implies_check(v, sum, seed, n_samples, true);
  return ConeSumResult{std::move(sum), std::move(axioms), std::move(implies)};
}

CandidateValuation scale(const CandidateValuation& v, const Rational& R) {
  if (R <= 0) throw Error(ErrorKind::InvalidArgument, "scale factor must be positive, got " + to_string(R));
  if (plain_weight(v))
    return CandidateValuation::weight_induced(with_scaled_coefficients(v.presentation(), R),
                                              v.weight() * R);
  Evaluator scaled = [v, R](const Polynomial& f) {
    TropicalValue x = v.evaluate(f);
    return x.is_bottom() ? x : TropicalValue(Rational(x.value() * R));
  };
  return CandidateValuation::tabulated(v.presentation(), std::move(scaled),
                                       to_string(R) + "·" + v.label());
}

RelationVerdict arrow_check(const Presentation& P, const WeightVector& v, const WeightVector& w) {
  RelationVerdict out;
  out.relation = Relation::Arrow;
  Presentation inner(P.ring, initial_ideal(P, w), P.coeff_valuation);
  std::vector<Polynomial> lhs = initial_ideal(inner, v);
  std::vector<Polynomial> rhs = initial_ideal(P, v);
  if (lhs == rhs) {
    out.status = RelationStatus::HoldsCertified;
    out.certificate = "reduced bases of in_v(in_w(I)) and in_v(I) coincide";
    return out;
  }
  out.status = RelationStatus::Refuted;
  const MonomialOrder grevlex = MonomialOrder::grevlex(P.dimension());
  GroebnerBasis L = buchberger(P.ring, lhs, grevlex);
  GroebnerBasis R = buchberger(P.ring, rhs, grevlex);
  for (const auto& g : lhs)
    if (!normal_form(g, R).is_zero()) {
      out.witness_a = g;
      out.certificate = "element of in_v(in_w(I)) outside in_v(I)";
      return out;
    }
  for (const auto& g : rhs)
    if (!normal_form(g, L).is_zero()) {
      out.witness_a = g;
      out.certificate = "element of in_v(I) outside in_v(in_w(I))";
      return out;
    }
  return out;
}

RelationVerdict arrow_check(const Presentation& P, const CandidateValuation& v,
                            const CandidateValuation& w) {
  return arrow_check(P, tropicalize(v), tropicalize(w));
}

std::vector<FacetClass> facet_classes(const Presentation& P, const std::vector<WeightVector>& ws) {
  std::vector<FacetClass> out;
  std::map<std::vector<Polynomial>, std::size_t> index;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    auto [it, fresh] = index.emplace(initial_ideal(P, ws[i]), out.size());
    if (fresh) out.push_back(FacetClass{ws[i], {}});
    out[it->second].members.push_back(i);
  }
  return out;
}

}  // namespace tropval
