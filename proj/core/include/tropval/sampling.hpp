#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tropval/polynomial.hpp"

namespace tropval {

/// Seeded source of small integers. mt19937_64 output is fixed by the standard;
/// the bounded draw is done here so results match on every platform.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  /// Uniform in [-bound, bound] without 0.
  long nonzero(long bound);

 private:
  std::mt19937_64 engine_;
};

ExponentVector random_exponent(SampleRng& rng, std::size_t n, int degree_bound);

/// 1..max_terms terms of degree <= degree_bound, coefficients in [-c, c] \ {0}.
/// May return zero if terms cancel; callers resample.
Polynomial random_polynomial(SampleRng& rng, const Ring& ring, int max_terms, int degree_bound,
                             long coeff_bound = 3);

/// 1, the variables, then m_i + m_j and m_i - m_j for i < j.
std::vector<Polynomial> low_degree_pool(const Ring& ring);

}  // namespace tropval
