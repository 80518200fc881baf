#include "tropval/sl2.hpp"

#include <map>

#include "tropval/error.hpp"

namespace tropval {

GradedAlgebra sl2_rep_ring(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "rep ring needs N >= 1");
  Ring ring = make_ring({"x", "y"});
  GradedAlgebraSpec spec;
  spec.monoid_dim = 1;
  spec.truncation_weights = {Rational(1)};
  spec.truncation_bound = N;
  for (int n = 0; n <= N; ++n) {
    spec.components.push_back({{n}, n + 1});
    for (int k = 0; k <= n; ++k)
      spec.labels[BasisKey{{n}, k}] = monomial_to_string(*ring, ExponentVector{n - k, k});
  }
  for (int n = 0; n <= N; ++n)
    for (int m = 0; n + m <= N; ++m)
      for (int k = 0; k <= n; ++k)
        for (int l = 0; l <= m; ++l)
          spec.products.push_back({BasisKey{{n}, k}, BasisKey{{m}, l}, {{BasisKey{{n + m}, k + l}, Rational(1)}}});
  return GradedAlgebra::build(spec);
}

Sl2TripleRing::Sl2TripleRing()
    : ring(make_ring({"x1", "x2", "x3", "z12", "z13", "z23"})),
      basis(buchberger(ring,
                       {Polynomial::variable(ring, 0) * Polynomial::variable(ring, 5) -
                        Polynomial::variable(ring, 1) * Polynomial::variable(ring, 4) +
                        Polynomial::variable(ring, 2) * Polynomial::variable(ring, 3)},
                       MonomialOrder(WeightVector{0, 1, 0, 0, 1, 0}))) {}

Grade Sl2TripleRing::grade(const ExponentVector& e) const {
  const int i1 = e[0], i2 = e[1], i3 = e[2], j12 = e[3], j13 = e[4], j23 = e[5];
  const int a = i1 + j12 + j13, b = i2 + j12 + j23, c = i3 + j13 + j23;
  return {a, b, a + b - 2 * j12, c, i1 + i2 + i3};
}

bool Sl2TripleRing::is_normal(const ExponentVector& e) const {
  for (const auto& lm : basis.leading)
    if (lm.divides(e)) return false;
  return true;
}

Polynomial Sl2TripleRing::normal_form(const Polynomial& f) const { return tropval::normal_form(f, basis); }

GradedAlgebra sl2_branching_algebra(int N) {
  if (N < 2) throw Error(ErrorKind::InvalidArgument, "branching algebra needs N >= 2");
  Sl2TripleRing R;
  std::vector<ExponentVector> mons;
  for (int d = 0; d <= N; ++d)
    for (auto& e : monomials_of_degree(6, d))
      if (R.is_normal(e)) mons.push_back(std::move(e));

  std::map<Grade, int> sizes;
  std::map<ExponentVector, BasisKey> keys;
  GradedAlgebraSpec spec;
  spec.monoid_dim = 5;
  const Rational half(1, 2);
  spec.truncation_weights = {half, half, Rational(0), half, half};
  spec.truncation_bound = N;
  for (const auto& e : mons) {
    Grade g = R.grade(e);
    BasisKey k{g, sizes[g]++};
    keys.emplace(e, k);
    spec.labels[k] = monomial_to_string(*R.ring, e);
  }
  for (const auto& [g, n] : sizes) spec.components.push_back({g, n});

  std::map<ExponentVector, std::vector<std::pair<BasisKey, Rational>>> expansions;
  auto expand = [&](const ExponentVector& e) -> const auto& {
    auto it = expansions.find(e);
    if (it != expansions.end()) return it->second;
    std::vector<std::pair<BasisKey, Rational>> terms;
    const Polynomial nf = R.normal_form(Polynomial::monomial(R.ring, e));
    for (const auto& [m, c] : nf.terms()) terms.emplace_back(keys.at(m), c);
    return expansions.emplace(e, std::move(terms)).first->second;
  };
  for (const auto& a : mons)
    for (const auto& b : mons)
      if (a.degree() + b.degree() <= N) spec.products.push_back({keys.at(a), keys.at(b), expand(a + b)});
  return GradedAlgebra::build(spec);
}

Grade sl2_positive_root() { return {0, 0, 2, 0, 0}; }

namespace {

RootFunctional report(LexFunctional h) {
  RootFunctional out{std::move(h), true, false};
  for (const auto& v : out.functional.value(sl2_positive_root())) {
    if (v == 0) continue;
    out.nonnegative = v > 0;
    out.strict = v > 0;
    break;
  }
  return out;
}

}  // namespace

RootFunctional root_functional(const std::vector<std::vector<Rational>>& stages) {
  for (const auto& row : stages)
    if (row.size() != 5)
      throw Error(ErrorKind::DimensionMismatch, "SL2 functional rows need 5 entries (a b eta c lambda)");
  return report(LexFunctional{stages});
}

RootFunctional collapse_functional(const LexFunctional& h, std::size_t stage_index) {
  if (stage_index >= h.rows.size())
    throw Error(ErrorKind::IndexOutOfRange, "stage " + std::to_string(stage_index) + " out of range (" +
                                                std::to_string(h.rows.size()) + " stages)");
  LexFunctional out = h;
  for (auto& x : out.rows[stage_index]) x = 0;
  return report(std::move(out));
}

}  // namespace tropval
