#ifndef DINV_RANDOM_HPP
#define DINV_RANDOM_HPP

// Random instance generators for property checks. Runs are reproducible:
// the seed comes from DINV_SEED when set.

#include "dinv/subspace.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

namespace dinv {

using Rng = std::mt19937_64;

inline std::uint64_t seed_from_env(std::uint64_t fallback = 20240601) {
  if (const char* s = std::getenv("DINV_SEED"); s != nullptr && *s != '\0') return std::stoull(s);
  return fallback;
}

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

/// p/q with |p| <= bound and 1 <= q <= bound.
inline Rational random_rational(Rng& rng, int bound = 10) {
  const int p = std::uniform_int_distribution<int>(-bound, bound)(rng);
  const int q = std::uniform_int_distribution<int>(1, bound)(rng);
  Rational r{Integer(p), Integer(q)};
  r.canonicalize();
  return r;
}

inline ParamTable random_params(Rng& rng, std::size_t d, unsigned n, int bound = 10) {
  ParamTable params(d, n);
  for (unsigned i = 2; i <= n; ++i) {
    for (std::size_t j = 2; j <= d; ++j) params.set(i, j, random_rational(rng, bound));
  }
  return params;
}

/// Valid spec with 2 <= n <= n_max, b_n <= b_max, 1 <= d <= d_max.
inline GeneralSpec random_general_spec(Rng& rng, unsigned n_max, unsigned b_max, std::size_t d_max, int bound = 10) {
  GeneralSpec spec;
  spec.n = uniform(rng, 2, std::min(n_max, b_max));
  spec.d = uniform(rng, 1, static_cast<unsigned>(d_max));
  std::vector<unsigned> pool(b_max - 1);
  std::iota(pool.begin(), pool.end(), 2u);
  std::shuffle(pool.begin(), pool.end(), rng);
  spec.b.assign(pool.begin(), pool.begin() + (spec.n - 1));
  std::sort(spec.b.begin(), spec.b.end());
  spec.b.insert(spec.b.begin(), 1u);
  spec.c.assign(spec.d, std::vector<Rational>(spec.n));
  for (auto& row : spec.c) {
    for (auto& v : row) v = random_rational(rng, bound);
  }
  while (std::all_of(spec.c.begin(), spec.c.end(), [](const auto& row) { return row[0] == 0; })) {
    spec.c[uniform(rng, 0, static_cast<unsigned>(spec.d - 1))][0] = random_rational(rng, bound);
  }
  return spec;
}

/// Up to `max_terms` random terms of total degree <= max_degree, with at
/// least one term of degree exactly max_degree.
inline Polynomial random_polynomial(Rng& rng, std::size_t dim, unsigned max_degree, unsigned max_terms,
                                    int bound = 10) {
  const auto random_exponent = [&](unsigned degree) {
    Exponent e(dim, 0);
    for (unsigned t = 0; t < degree; ++t) ++e[uniform(rng, 0, static_cast<unsigned>(dim - 1))];
    return e;
  };
  Polynomial p(dim);
  const unsigned extra = uniform(rng, 0, max_terms > 0 ? max_terms - 1 : 0);
  for (unsigned t = 0; t < extra; ++t) p.add_term(random_exponent(uniform(rng, 0, max_degree)), random_rational(rng, bound));
  while (p.degree() != static_cast<int>(max_degree)) {
    Rational c = random_rational(rng, bound);
    if (c == 0) c = 1;
    p.add_term(random_exponent(max_degree), c);
  }
  return p;
}

}  // namespace dinv

#endif  // DINV_RANDOM_HPP
