#include "tropval/initial.hpp"

#include <algorithm>
#include <map>

#include "tropval/error.hpp"

namespace tropval {

std::vector<Polynomial> canonical_basis(const Ring& ring, const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  return buchberger(ring, gens, MonomialOrder::grevlex(ring->size())).gens;
}

std::vector<Polynomial> initial_ideal_direct(const Presentation& P, const WeightVector& w) {
  WeightVector eff = P.effective_weight(w);
  if (!eff.is_nonnegative())
    throw Error(ErrorKind::UnsupportedOrder,
                "direct initial ideal needs nonnegative weights, got " + eff.to_string());
  if (P.is_free()) return {};
  GroebnerBasis G = buchberger(P.ring, P.ideal_gens, MonomialOrder(eff));
  std::vector<Polynomial> out;
  for (const auto& g : G.gens) out.push_back(initial_form(g, eff));
  return out;
}

std::vector<Polynomial> initial_ideal_homogenized(const Presentation& P, const WeightVector& w) {
  WeightVector eff = P.effective_weight(w);
  if (P.is_free()) return {};
  const std::size_t n = P.dimension();
  GroebnerBasis G0 = buchberger(P.ring, P.ideal_gens, MonomialOrder::grevlex(n));
  if (G0.is_unit()) return G0.gens;

  Ring hring = P.ring->with_fresh_variable("h");
  std::vector<Polynomial> hgens;
  for (const auto& g : G0.gens) hgens.push_back(homogenize(g, hring));

  Rational lowest = 0;
  for (const auto& x : eff.values()) lowest = std::min(lowest, x);
  Rational c = -lowest + 1;
  std::vector<Rational> lifted;
  for (const auto& x : eff.values()) lifted.push_back(x + c);
  lifted.push_back(c);
  WeightVector W(std::move(lifted));

  GroebnerBasis GH = buchberger(hring, hgens, MonomialOrder(W));
  std::vector<Polynomial> forms;
  for (const auto& g : GH.gens) forms.push_back(dehomogenize(initial_form(g, W), P.ring));
  return canonical_basis(P.ring, forms);
}

std::vector<Polynomial> initial_ideal(const Presentation& P, const WeightVector& w) {
  WeightVector eff = P.effective_weight(w);
  if (P.is_free()) return {};
  if (eff.is_nonnegative()) return canonical_basis(P.ring, initial_ideal_direct(P, w));
  return initial_ideal_homogenized(P, w);
}

MonomialContainment contains_monomial(const std::vector<Polynomial>& gens, const Ring& ring) {
  MonomialContainment out;
  if (gens.empty()) return out;
  for (const auto& g : gens)
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "contains_monomial: zero generator");

  const std::size_t n = ring->size();
  Ring ext = ring->with_fresh_variable("u");
  std::vector<Polynomial> sat;
  for (const auto& g : gens) sat.push_back(g.embed(ext));
  ExponentVector all(n + 1);
  for (std::size_t i = 0; i <= n; ++i) all[i] = 1;
  Polynomial aux = Polynomial::monomial(ext, all) - Polynomial::constant(ext, Rational(1));
  sat.push_back(aux);
  if (!buchberger(ext, sat, MonomialOrder::grevlex(n + 1)).is_unit()) return out;

  out.contains = true;
  GroebnerBasis G = buchberger(ring, gens, MonomialOrder::grevlex(n));
  ExponentVector prod(n);
  for (std::size_t i = 0; i < n; ++i) prod[i] = 1;
  ExponentVector power(n);
  int k = 0;
  while (!normal_form(Polynomial::monomial(ring, power), G).is_zero()) {
    power = power + prod;
    ++k;
  }
  constexpr int kSearchDegree = 8;
  const int limit = std::min(static_cast<int>(n) * k, kSearchDegree);
  for (int d = 0; d <= limit; ++d)
    for (const auto& e : monomials_of_degree(n, d))
      if (normal_form(Polynomial::monomial(ring, e), G).is_zero()) {
        out.witness = e;
        return out;
      }
  out.witness = power;
  return out;
}

bool same_initial_ideal(const Presentation& P, const WeightVector& w1, const WeightVector& w2) {
  return initial_ideal(P, w1) == initial_ideal(P, w2);
}

std::vector<FanClass> enumerate_fan(const Presentation& P, int box, int denominator) {
  if (box < 0 || denominator < 1)
    throw Error(ErrorKind::InvalidArgument, "fan grid needs box >= 0 and denominator >= 1");
  const std::size_t n = P.dimension();
  const long side = 2L * box * denominator + 1;
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= static_cast<double>(side);
  if (points > 200000)
    throw Error(ErrorKind::InvalidArgument, "fan grid too large: " + std::to_string(static_cast<long>(points)) + " points");

  std::vector<FanClass> classes;
  std::map<std::vector<Polynomial>, std::size_t> index;
  std::vector<long> k(n, -static_cast<long>(box) * denominator);
  const long hi = static_cast<long>(box) * denominator;
  while (true) {
    std::vector<Rational> entries;
    for (long ki : k) entries.push_back(make_rational(ki, denominator));
    for (auto& r : entries) r.canonicalize();
    WeightVector w(std::move(entries));
    std::vector<Polynomial> in = initial_ideal(P, w);
    auto [it, fresh] = index.emplace(in, classes.size());
    if (fresh) {
      FanClass fc;
      fc.representative = w;
      fc.monomial_free = !contains_monomial(in, P.ring).contains;
      fc.initial_ideal = std::move(in);
      classes.push_back(std::move(fc));
    }
    classes[it->second].members++;

    std::size_t pos = n;
    while (pos > 0 && k[pos - 1] == hi) k[--pos] = -hi;
    if (pos == 0) break;
    ++k[pos - 1];
  }
  std::sort(classes.begin(), classes.end(), [](const FanClass& a, const FanClass& b) {
    return a.representative < b.representative;
  });
  return classes;
}

}  // namespace tropval
