#include "tropval/valuation.hpp"

#include <algorithm>
#include <set>

#include "tropval/error.hpp"
#include "tropval/initial.hpp"
#include "tropval/sampling.hpp"

namespace tropval {

struct CandidateValuation::State {
  Presentation presentation;
  ValuationKind kind = ValuationKind::WeightInduced;
  WeightVector weight;
  WeightVector effective;
  std::optional<GroebnerBasis> basis;
  std::optional<GroebnerBasis> reference;
  Evaluator base;
  std::map<Polynomial, TropicalValue> overrides;
  bool injective = false;
  std::string label;
};

namespace {

std::vector<ExponentVector> sorted_leading(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::vector<ExponentVector> out;
  for (const auto& g : gens) out.push_back(leading_monomial(g, order));
  std::sort(out.begin(), out.end());
  return out;
}

// For weights with negative entries the refined order is not a well-order, so
// Buchberger's criterion alone does not certify the basis. Its leading
// monomials must generate in_>(in_w(I)), computed independently.
void certify_local_basis(const Presentation& P, const WeightVector& eff, const GroebnerBasis& G,
                         const GroebnerBasis& reference) {
  for (const auto& g : G.gens)
    if (!reference.is_unit() && leading_monomial(g, G.order).is_one())
      throw Error(ErrorKind::NonTermination,
                  "weight " + eff.to_string() + " makes a generator a unit, so reduction never terminates");
  std::vector<Polynomial> in = initial_ideal_homogenized(P, eff);
  MonomialOrder grevlex = MonomialOrder::grevlex(P.dimension());
  if (sorted_leading(in, grevlex) != sorted_leading(G.gens, G.order))
    throw Error(ErrorKind::NonTermination,
                "weight " + eff.to_string() +
                    " has negative entries and the refined basis does not generate the initial ideal");
}

Polynomial monic_key(const Polynomial& f) {
  if (f.is_zero()) return f;
  const MonomialOrder grevlex = MonomialOrder::grevlex(f.ring()->size());
  return f * Rational(1 / leading_coefficient(f, grevlex));
}

}  // namespace

CandidateValuation CandidateValuation::weight_induced(const Presentation& P, const WeightVector& w) {
  auto s = std::make_shared<State>();
  s->presentation = P;
  s->kind = ValuationKind::WeightInduced;
  s->weight = w;
  s->effective = P.effective_weight(w);
  s->basis = buchberger(P.ring, P.ideal_gens, MonomialOrder(s->effective));
  s->reference = buchberger(P.ring, P.ideal_gens, MonomialOrder::grevlex(P.dimension()));
  if (!s->effective.is_nonnegative() && !P.is_free())
    certify_local_basis(P, s->effective, *s->basis, *s->reference);
  s->label = "weight (" + w.to_string() + ")";
  return CandidateValuation(std::move(s));
}

CandidateValuation CandidateValuation::tabulated(const Presentation& P, Evaluator base, std::string label) {
  auto s = std::make_shared<State>();
  s->presentation = P;
  s->kind = ValuationKind::Tabulated;
  s->base = std::move(base);
  s->reference = buchberger(P.ring, P.ideal_gens, MonomialOrder::grevlex(P.dimension()));
  s->label = std::move(label);
  return CandidateValuation(std::move(s));
}

CandidateValuation CandidateValuation::with_override(const Polynomial& f, const TropicalValue& value) const {
  Polynomial key = class_key(f);
  if (key.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot override the value of 0");
  auto s = std::make_shared<State>(*s_);
  s->overrides[key] = value;
  return CandidateValuation(std::move(s));
}

CandidateValuation CandidateValuation::with_injectivity_asserted() const {
  auto s = std::make_shared<State>(*s_);
  s->injective = true;
  return CandidateValuation(std::move(s));
}

ValuationKind CandidateValuation::kind() const { return s_->kind; }
const Presentation& CandidateValuation::presentation() const { return s_->presentation; }
bool CandidateValuation::injectivity_asserted() const { return s_->injective; }
const std::string& CandidateValuation::label() const { return s_->label; }
std::size_t CandidateValuation::override_count() const { return s_->overrides.size(); }
const GroebnerBasis& CandidateValuation::reference_basis() const { return *s_->reference; }

const WeightVector& CandidateValuation::weight() const {
  if (s_->kind != ValuationKind::WeightInduced)
    throw Error(ErrorKind::InvalidArgument, "tabulated valuation has no weight vector");
  return s_->weight;
}

const WeightVector& CandidateValuation::effective_weight() const {
  if (s_->kind != ValuationKind::WeightInduced)
    throw Error(ErrorKind::InvalidArgument, "tabulated valuation has no weight vector");
  return s_->effective;
}

const GroebnerBasis& CandidateValuation::basis() const {
  if (s_->kind != ValuationKind::WeightInduced)
    throw Error(ErrorKind::InvalidArgument, "tabulated valuation has no refined basis");
  return *s_->basis;
}

Polynomial CandidateValuation::class_key(const Polynomial& f) const {
  return monic_key(normal_form(f, *s_->reference));
}

TropicalValue CandidateValuation::evaluate(const Polynomial& f) const {
  if (!same_ring(f.ring(), s_->presentation.ring))
    throw Error(ErrorKind::RingMismatch, "evaluate: polynomial from a different ring");
  if (!s_->overrides.empty()) {
    auto it = s_->overrides.find(class_key(f));
    if (it != s_->overrides.end()) return it->second;
  }
  if (s_->kind == ValuationKind::Tabulated) {
    if (normal_form(f, *s_->reference).is_zero()) return TropicalValue::bottom();
    return s_->base(f);
  }
  Polynomial r = normal_form(f, *s_->basis);
  if (r.is_zero()) return TropicalValue::bottom();
  return TropicalValue(max_weight(r, s_->effective));
}

CandidateValuation make_weight_valuation(const Presentation& P, const WeightVector& w) {
  return CandidateValuation::weight_induced(P, w);
}

TropicalValue evaluate(const CandidateValuation& v, const Polynomial& f) { return v.evaluate(f); }

std::string_view to_string(AxiomVerdict v) {
  return v == AxiomVerdict::Valuation ? "valuation" : "quasi_valuation_only";
}

std::vector<std::pair<Polynomial, Polynomial>> sample_pairs(const CandidateValuation& v,
                                                            std::uint64_t seed,
                                                            std::size_t n_pairs,
                                                            int degree_bound) {
  std::vector<std::pair<Polynomial, Polynomial>> pairs;
  auto nonzero = [&](const Polynomial& f) { return !normal_form(f, v.reference_basis()).is_zero(); };

  std::vector<Polynomial> pool;
  for (auto& f : low_degree_pool(v.ring()))
    if (nonzero(f)) pool.push_back(std::move(f));
  const std::size_t pool_quota = n_pairs / 2;
  for (std::size_t i = 0; i < pool.size() && pairs.size() < pool_quota; ++i)
    for (std::size_t j = i; j < pool.size() && pairs.size() < pool_quota; ++j)
      pairs.emplace_back(pool[i], pool[j]);

  SampleRng rng(seed);
  std::size_t attempts = 0;
  const std::size_t max_attempts = 50 * n_pairs + 100;
  while (pairs.size() < n_pairs && attempts++ < max_attempts) {
    Polynomial a = random_polynomial(rng, v.ring(), 3, degree_bound);
    Polynomial b = random_polynomial(rng, v.ring(), 3, degree_bound);
    if (a.is_zero() || b.is_zero() || !nonzero(a) || !nonzero(b)) continue;
    pairs.emplace_back(std::move(a), std::move(b));
  }
  return pairs;
}

AxiomReport check_axioms(const CandidateValuation& v, std::uint64_t seed, std::size_t n_pairs,
                         int degree_bound) {
  AxiomReport report;
  report.zero_axiom_holds = v.evaluate(Polynomial(v.ring())).is_bottom();
  for (const auto& [a, b] : sample_pairs(v, seed, n_pairs, degree_bound)) {
    ++report.pairs_checked;
    const TropicalValue va = v.evaluate(a), vb = v.evaluate(b);
    const TropicalValue vab = v.evaluate(a * b);
    const TropicalValue expected = trop_mul(va, vb);
    if (vab != expected) report.multiplicativity_failures.push_back({a, b, vab, expected});
    if (vab > expected) ++report.submultiplicativity_violations;

    const TropicalValue vsum = v.evaluate(a + b);
    const TropicalValue top = trop_add(va, vb);
    if (vsum > top) ++report.subadditivity_violations;
    if (vsum < top) {
      ++report.strict_drops;
      if (va != vb) report.p1_failures.push_back({a, b});
    }
  }
  report.exact_by_structure = v.kind() == ValuationKind::WeightInduced && v.override_count() == 0 &&
                              v.presentation().is_free();
  const bool ok = report.zero_axiom_holds && report.multiplicativity_failures.empty() &&
                  report.p1_failures.empty() && report.subadditivity_violations == 0;
  report.verdict = ok ? AxiomVerdict::Valuation : AxiomVerdict::QuasiValuationOnly;
  return report;
}

WeightVector tropicalize(const Evaluator& v, const Presentation& P) {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < P.dimension(); ++i) {
    TropicalValue x = v(Polynomial::variable(P.ring, i));
    if (x.is_bottom())
      throw Error(ErrorKind::NonfiniteGeneratorValue,
                  "generator " + P.ring->name(i) + " has value -inf");
    out.push_back(x.value());
  }
  return WeightVector(std::move(out));
}

WeightVector tropicalize(const CandidateValuation& v) {
  return tropicalize([&](const Polynomial& f) { return v.evaluate(f); }, v.presentation());
}

MembershipResult check_trop_membership(const Presentation& P, const WeightVector& w,
                                       MembershipMode mode) {
  MembershipResult out;
  if (mode == MembershipMode::Prevariety) {
    for (const auto& g : P.ideal_gens)
      if (initial_form(g, w, P.coeff_valuation).term_count() < 2) {
        out.witness_generator = g;
        return out;
      }
    out.member = true;
    return out;
  }
  MonomialContainment m = contains_monomial(initial_ideal(P, w), P.ring);
  out.member = !m.contains;
  out.witness_monomial = m.witness;
  return out;
}

CandidateValuation pullback(const std::vector<Polynomial>& images, const CandidateValuation& v,
                            const Presentation& target) {
  if (images.size() != target.dimension())
    throw Error(ErrorKind::DimensionMismatch, "pullback needs one image per generator");
  for (const auto& im : images)
    if (!same_ring(im.ring(), v.ring()))
      throw Error(ErrorKind::RingMismatch, "pullback image outside the valued algebra");
  for (const auto& g : target.ideal_gens) {
    Polynomial pushed = g.substitute(images, v.ring());
    if (!normal_form(pushed, v.reference_basis()).is_zero())
      throw Error(ErrorKind::NotAHomomorphism,
                  "relation " + g.to_string() + " does not map into the ideal");
  }
  const Ring& ambient = v.ring();
  Evaluator base = [images, v, ambient](const Polynomial& f) {
    return v.evaluate(f.substitute(images, ambient));
  };
  return CandidateValuation::tabulated(target, std::move(base), "pullback of " + v.label())
      .with_injectivity_asserted();
}

ConsistencyReport cross_presentation_consistency(const std::vector<PresentationChart>& charts,
                                                 const CandidateValuation& v) {
  ConsistencyReport report;
  std::map<std::string, std::pair<Polynomial, Rational>> seen;
  for (std::size_t c = 0; c < charts.size(); ++c) {
    const auto& chart = charts[c];
    if (chart.images.size() != chart.presentation.dimension())
      throw Error(ErrorKind::DictionaryMismatch,
                  "chart " + std::to_string(c) + " lists the wrong number of images");
    CandidateValuation pulled = pullback(chart.images, v, chart.presentation);
    WeightVector phi = tropicalize(pulled);
    for (std::size_t i = 0; i < chart.presentation.dimension(); ++i) {
      const std::string& name = chart.presentation.ring->name(i);
      Polynomial key = normal_form(chart.images[i], v.reference_basis());
      auto it = seen.find(name);
      if (it == seen.end()) {
        seen.emplace(name, std::make_pair(key, phi[i]));
        continue;
      }
      if (!(it->second.first == key))
        throw Error(ErrorKind::DictionaryMismatch,
                    "generator " + name + " has different images in different charts");
      if (it->second.second != phi[i]) {
        report.consistent = false;
        report.disagreements.push_back(name + ": " + to_string(it->second.second) + " vs " +
                                       to_string(phi[i]));
      }
    }
    report.components.push_back(std::move(phi));
  }
  return report;
}

}  // namespace tropval
