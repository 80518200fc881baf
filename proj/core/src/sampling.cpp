#include "tropval/sampling.hpp"

#include <limits>

#include "tropval/error.hpp"

namespace tropval {

std::uint64_t SampleRng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

long SampleRng::between(long lo, long hi) {
  return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

long SampleRng::nonzero(long bound) {
  long x = between(-bound, bound - 1);
  return x >= 0 ? x + 1 : x;
}

ExponentVector random_exponent(SampleRng& rng, std::size_t n, int degree_bound) {
  ExponentVector e(n);
  long left = rng.between(0, degree_bound);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    long a = rng.between(0, left);
    e[i] = static_cast<int>(a);
    left -= a;
  }
  if (n > 0) e[n - 1] = static_cast<int>(left);
  return e;
}

Polynomial random_polynomial(SampleRng& rng, const Ring& ring, int max_terms, int degree_bound,
                             long coeff_bound) {
  Polynomial f(ring);
  long terms = rng.between(1, max_terms);
  for (long t = 0; t < terms; ++t) {
    ExponentVector e = random_exponent(rng, ring->size(), degree_bound);
    f.add_term(e, Rational(rng.nonzero(coeff_bound)));
  }
  return f;
}

std::vector<Polynomial> low_degree_pool(const Ring& ring) {
  std::vector<Polynomial> base{Polynomial::constant(ring, Rational(1))};
  for (std::size_t i = 0; i < ring->size(); ++i) base.push_back(Polynomial::variable(ring, i));
  std::vector<Polynomial> pool = base;
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) {
      pool.push_back(base[i] + base[j]);
      pool.push_back(base[i] - base[j]);
    }
  return pool;
}

}  // namespace tropval
