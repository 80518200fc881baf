#include "tropval/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "tropval/error.hpp"

namespace tropval {

MonomialOrder::MonomialOrder(std::size_t n, TieBreak tie)
    : primary_(n), scaled_(n, 0), tie_(tie) {}

MonomialOrder::MonomialOrder(WeightVector primary, TieBreak tie)
    : primary_(std::move(primary)), tie_(tie) {
  mpz_class den = 1;
  for (const auto& r : primary_.values()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.get_den_mpz_t());
  scaled_.reserve(primary_.size());
  for (const auto& r : primary_.values()) {
    mpz_class s = r.get_num() * (den / r.get_den());
    if (!s.fits_sint_p())
      throw Error(ErrorKind::InvalidArgument, "weight vector too large for an order: " + primary_.to_string());
    scaled_.push_back(s.get_si());
    if (s < 0) well_order_ = false;
  }
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  const std::size_t n = scaled_.size();
  if (a.size() != n || b.size() != n)
    throw Error(ErrorKind::DimensionMismatch, "exponent vector length does not match order");
  std::int64_t wa = 0, wb = 0;
  for (std::size_t i = 0; i < n; ++i) {
    wa += scaled_[i] * a[i];
    wb += scaled_[i] * b[i];
  }
  if (wa != wb) return wa <=> wb;
  if (tie_ == TieBreak::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  int da = a.degree(), db = b.degree();
  if (da != db) return da <=> db;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

namespace {

struct OrderLess {
  const MonomialOrder* order;
  bool operator()(const ExponentVector& a, const ExponentVector& b) const { return order->less(a, b); }
};

using OrderedTerms = std::map<ExponentVector, Rational, OrderLess>;

const std::pair<const ExponentVector, Rational>& leading_term(const Polynomial& f,
                                                               const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "leading term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

Polynomial monic(const Polynomial& f, const MonomialOrder& order) {
  Rational lc = leading_term(f, order).second;
  if (lc == 1) return f;
  return f * Rational(1 / lc);
}

std::size_t effective_cap(const MonomialOrder& order, ReductionLimits limits) {
  if (limits.max_steps > 0) return limits.max_steps;
  return order.is_well_order() ? 0 : kDefaultStepCap;
}

}  // namespace

ExponentVector leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  return leading_term(f, order).first;
}

Rational leading_coefficient(const Polynomial& f, const MonomialOrder& order) {
  return leading_term(f, order).second;
}

std::vector<std::pair<ExponentVector, Rational>> sorted_terms(const Polynomial& f,
                                                              const MonomialOrder& order) {
  std::vector<std::pair<ExponentVector, Rational>> out(f.terms().begin(), f.terms().end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  return out;
}

bool GroebnerBasis::is_unit() const {
  return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G, ReductionLimits limits) {
  if (!same_ring(f.ring(), G.ring))
    throw Error(ErrorKind::RingMismatch, "normal_form: polynomial and basis live in different rings");
  OrderedTerms rem(f.terms().begin(), f.terms().end(), OrderLess{&G.order});
  Polynomial result(G.ring);
  const std::size_t cap = effective_cap(G.order, limits);
  std::size_t steps = 0;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const ExponentVector lt = top->first;
    std::size_t i = 0;
    while (i < G.gens.size() && !G.leading[i].divides(lt)) ++i;
    if (i == G.gens.size()) {
      result.add_term(lt, top->second);
      rem.erase(top);
      continue;
    }
    if (cap && ++steps > cap)
      throw Error(ErrorKind::NonTermination,
                  "division did not terminate within " + std::to_string(cap) +
                      " steps; the weight order is not a well-order on this input");
    const Rational q = top->second / G.gens[i].coefficient(G.leading[i]);
    const ExponentVector shift = lt - G.leading[i];
    for (const auto& [e, c] : G.gens[i].terms()) {
      ExponentVector m = e + shift;
      Rational delta = -q * c;
      auto it = rem.find(m);
      if (it == rem.end()) {
        rem.emplace(std::move(m), std::move(delta));
      } else {
        it->second += delta;
        if (it->second == 0) rem.erase(it);
      }
    }
  }
  return result;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto& [ef, cf] = leading_term(f, order);
  const auto& [eg, cg] = leading_term(g, order);
  ExponentVector l = ef.lcm(eg);
  return f.times_monomial(l - ef, Rational(1 / cf)) - g.times_monomial(l - eg, Rational(1 / cg));
}

namespace {

struct Pair {
  std::size_t i, j;
  ExponentVector lcm;
};

void add_generator(GroebnerBasis& G, Polynomial h, std::vector<Pair>& pending) {
  h = monic(h, G.order);
  const std::size_t idx = G.gens.size();
  ExponentVector lm = leading_monomial(h, G.order);
  for (std::size_t i = 0; i < idx; ++i) pending.push_back({i, idx, G.leading[i].lcm(lm)});
  G.gens.push_back(std::move(h));
  G.leading.push_back(std::move(lm));
}

void make_unit(GroebnerBasis& G) {
  G.gens = {Polynomial::constant(G.ring, Rational(1))};
  G.leading = {ExponentVector(G.ring->size())};
  G.reduced = true;
}

void interreduce(GroebnerBasis& G, ReductionLimits limits) {
  const std::size_t n = G.gens.size();
  std::vector<bool> keep(n, true);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (G.leading[j].divides(G.leading[i]) && (G.leading[j] != G.leading[i] || j < i))
        keep[i] = false;
    }
  GroebnerBasis minimal{G.ring, {}, G.order, false, {}};
  for (std::size_t i = 0; i < n; ++i)
    if (keep[i]) {
      minimal.gens.push_back(G.gens[i]);
      minimal.leading.push_back(G.leading[i]);
    }
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.gens.size(); ++i) {
    GroebnerBasis others{G.ring, {}, G.order, false, {}};
    for (std::size_t j = 0; j < minimal.gens.size(); ++j)
      if (j != i) {
        others.gens.push_back(minimal.gens[j]);
        others.leading.push_back(minimal.leading[j]);
      }
    const Polynomial& g = minimal.gens[i];
    Polynomial lead = Polynomial::monomial(G.ring, minimal.leading[i], g.coefficient(minimal.leading[i]));
    Polynomial tail = normal_form(g - lead, others, limits);
    reduced.push_back(monic(lead + tail, G.order));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return G.order.less(leading_monomial(b, G.order), leading_monomial(a, G.order));
  });
  G.gens = std::move(reduced);
  G.leading.clear();
  for (const auto& g : G.gens) G.leading.push_back(leading_monomial(g, G.order));
  G.reduced = true;
}

}  // namespace

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens,
                         const MonomialOrder& order, ReductionLimits limits) {
  if (order.size() != ring->size())
    throw Error(ErrorKind::DimensionMismatch, "order and ring have different dimensions");
  GroebnerBasis G{ring, {}, order, false, {}};
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;

  for (const auto& f : gens) {
    if (!same_ring(f.ring(), ring))
      throw Error(ErrorKind::RingMismatch, "buchberger: generator from a different ring");
    Polynomial h = normal_form(f, G, limits);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      make_unit(G);
      return G;
    }
    add_generator(G, std::move(h), pending);
  }

  auto pair_less = [&](const Pair& a, const Pair& b) {
    auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return !done.count({a, b});
  };

  while (!pending.empty()) {
    auto it = std::min_element(pending.begin(), pending.end(), pair_less);
    Pair p = *it;
    pending.erase(it);
    done.insert({p.i, p.j});

    if (G.leading[p.i].coprime(G.leading[p.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.gens.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (G.leading[k].divides(p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;

    Polynomial h = normal_form(s_polynomial(G.gens[p.i], G.gens[p.j], order), G, limits);
    if (h.is_zero()) continue;
    if (h.is_constant()) {
      make_unit(G);
      return G;
    }
    add_generator(G, std::move(h), pending);
  }
  interreduce(G, limits);
  return G;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error(ErrorKind::InvalidArgument, "buchberger needs a ring or a generator");
  return buchberger(gens.front().ring(), gens, order);
}

Rational max_weight(const Polynomial& f, const WeightVector& w) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "weight of the zero polynomial");
  auto it = f.terms().begin();
  Rational best = w.dot(it->first);
  for (++it; it != f.terms().end(); ++it) {
    Rational x = w.dot(it->first);
    if (x > best) best = x;
  }
  return best;
}

Polynomial initial_form(const Polynomial& f, const WeightVector& w, const CoeffValuation& cv) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "initial form of the zero polynomial");
  if (w.size() != f.ring()->size())
    throw Error(ErrorKind::DimensionMismatch, "weight has " + std::to_string(w.size()) +
                                                  " entries, ring has " +
                                                  std::to_string(f.ring()->size()));
  WeightVector eff = cv.apply(w);
  Rational top = max_weight(f, eff);
  Polynomial out(f.ring());
  for (const auto& [e, c] : f.terms())
    if (eff.dot(e) == top) out.add_term(e, c);
  return out;
}

Polynomial homogenize(const Polynomial& f, const Ring& target) {
  const std::size_t n = f.ring()->size();
  if (target->size() != n + 1)
    throw Error(ErrorKind::DimensionMismatch, "homogenizing ring must have one extra variable");
  const int d = f.total_degree();
  Polynomial out(target);
  for (const auto& [e, c] : f.terms()) {
    ExponentVector h = e.extended(1);
    h[n] = d - e.degree();
    out.add_term(h, c);
  }
  return out;
}

Polynomial dehomogenize(const Polynomial& f, const Ring& target) {
  const std::size_t n = target->size();
  if (f.ring()->size() != n + 1)
    throw Error(ErrorKind::DimensionMismatch, "dehomogenizing ring must have one variable fewer");
  Polynomial out(target);
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> v(e.values().begin(), e.values().begin() + static_cast<std::ptrdiff_t>(n));
    out.add_term(ExponentVector(std::move(v)), c);
  }
  return out;
}

}  // namespace tropval

namespace tropval {

namespace {
void fill_monomials(std::vector<int>& cur, std::size_t pos, int left,
                    std::vector<ExponentVector>& out) {
  if (pos + 1 == cur.size()) {
    cur[pos] = left;
    out.emplace_back(cur);
    return;
  }
  for (int a = left; a >= 0; --a) {
    cur[pos] = a;
    fill_monomials(cur, pos + 1, left - a, out);
  }
  cur[pos] = 0;
}
}  // namespace

std::vector<ExponentVector> monomials_of_degree(std::size_t n, int d) {
  std::vector<ExponentVector> out;
  if (n == 0) {
    if (d == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(n, 0);
  fill_monomials(cur, 0, d, out);
  return out;
}

}  // namespace tropval
