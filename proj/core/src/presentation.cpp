#include "tropval/presentation.hpp"

#include "tropval/error.hpp"

namespace tropval {

WeightVector CoeffValuation::apply(const WeightVector& w) const {
  if (!tadic) return w;
  WeightVector out(w);
  out[tadic->t_index] = tadic->t_weight;
  return out;
}

std::string CoeffValuation::to_string(const RingContext& ring) const {
  if (!tadic) return "coeffval trivial;";
  return "coeffval tadic " + ring.name(tadic->t_index) + " " +
         tropval::to_string(tadic->t_weight) + ";";
}

Presentation::Presentation(Ring r, std::vector<Polynomial> gens, CoeffValuation cv)
    : ring(std::move(r)), ideal_gens(std::move(gens)), coeff_valuation(std::move(cv)) {
  for (const auto& g : ideal_gens) {
    if (g.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "ideal generator is zero");
    if (!same_ring(g.ring(), ring))
      throw Error(ErrorKind::RingMismatch, "ideal generator lives in a different ring");
  }
  if (coeff_valuation.tadic && coeff_valuation.tadic->t_index >= ring->size())
    throw Error(ErrorKind::IndexOutOfRange, "uniformizer index outside the ring");
}

WeightVector Presentation::effective_weight(const WeightVector& w) const {
  if (w.size() != ring->size())
    throw Error(ErrorKind::DimensionMismatch,
                "weight has " + std::to_string(w.size()) + " entries, ring has " +
                    std::to_string(ring->size()) + " variables");
  return coeff_valuation.apply(w);
}

std::string Presentation::to_string() const {
  std::string out = ring->to_string() + "\n";
  if (!ideal_gens.empty()) {
    out += "ideal ";
    for (std::size_t i = 0; i < ideal_gens.size(); ++i) {
      if (i) out += ", ";
      out += ideal_gens[i].to_string();
    }
    out += ";\n";
  }
  if (!coeff_valuation.is_trivial()) out += coeff_valuation.to_string(*ring) + "\n";
  return out;
}

}  // namespace tropval
