#ifndef DINV_IDENTITIES_HPP
#define DINV_IDENTITIES_HPP

// The combinatorial identities behind the stencil: signed power sums,
// an elimination-based Vandermonde witness for the stencil coefficients,
// and the falling-factorial truncation identity used by the second scheme.

#include "dinv/discretization.hpp"
#include "dinv/enumerate.hpp"
#include "dinv/linalg.hpp"
#include "dinv/rational.hpp"

#include <string>
#include <vector>

namespace dinv {

struct PowerSumQuery {
  unsigned j = 0;
  unsigned m = 0;
  bool include_zero = true;  // sum from i = 0 rather than i = 1
};

/// sum_i (-1)^(m-i) i^j / (i! (m-i)!), with 0^0 = 1.
inline Rational signed_power_sum(const PowerSumQuery& q) {
  Rational sum = 0;
  for (unsigned i = q.include_zero ? 0 : 1; i <= q.m; ++i) {
    Rational term = pow(Rational(i), q.j) / Rational(Integer(factorial(i) * factorial(q.m - i)));
    if ((q.m - i) % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// Solves sum_i i^j y_i = [j == m] (j, i = 0..m) by Gaussian elimination.
/// Agrees with stencil(m).coeffs without using their closed form.
inline std::vector<Rational> vandermonde_oracle(unsigned m) {
  RationalMatrix v(m + 1, m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    for (unsigned i = 0; i <= m; ++i) v(j, i) = pow(Rational(i), j);
  }
  std::vector<Rational> rhs(m + 1, Rational(0));
  rhs[m] = 1;
  auto y = solve(v, rhs);
  if (!y) throw std::logic_error("Vandermonde system on distinct nodes reported singular");
  return *y;
}

/// sum over alpha_1 + 2 alpha_{2,2} + ... + cap alpha_{2,cap} = r of
///   i^alpha_1 [i(i-1)]^alpha_{2,2} ... [i(i-1)...(i-cap+1)]^alpha_{2,cap}.
/// Only cap = i and cap = r are meaningful; the two agree.
inline Rational falling_factorial_sum(unsigned r, unsigned i, unsigned cap) {
  if (r < 1 || i < 2) throw std::invalid_argument("falling_factorial_sum: need r >= 1 and i >= 2");
  if (cap != i && cap != r) throw std::invalid_argument("falling_factorial_sum: cap must equal i or r");
  std::vector<unsigned> weights;
  std::vector<Integer> factors;
  for (unsigned k = 1; k <= cap; ++k) {
    weights.push_back(k);
    factors.push_back(falling_factorial(i, k));
  }
  Integer sum = 0;
  for_each_weighted_composition(weights, r, [&](std::span<const unsigned> alpha) {
    Integer term = 1;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] == 0) continue;
      Integer p;
      mpz_pow_ui(p.get_mpz_t(), factors[k].get_mpz_t(), alpha[k]);
      term *= p;
    }
    sum += term;
  });
  return Rational(sum);
}

/// Outcome of scanning one identity over a parameter grid.
struct LemmaReport {
  std::string name;
  std::string ranges;
  std::size_t checked = 0;
  std::vector<std::string> failures;

  bool pass() const { return failures.empty(); }
};

inline LemmaReport scan_power_sums(unsigned m_max, bool include_zero) {
  LemmaReport rep;
  rep.name = include_zero ? "signed power sum from i=0" : "signed power sum from i=1";
  const unsigned j_min = include_zero ? 0 : 1;
  rep.ranges = std::to_string(j_min) + " <= j <= m <= " + std::to_string(m_max);
  for (unsigned m = j_min; m <= m_max; ++m) {
    for (unsigned j = j_min; j <= m; ++j) {
      ++rep.checked;
      const Rational value = signed_power_sum({j, m, include_zero});
      const Rational expected = j == m ? 1 : 0;
      if (value != expected) {
        rep.failures.push_back("j=" + std::to_string(j) + " m=" + std::to_string(m) + " got " + to_string(value));
      }
    }
  }
  return rep;
}

inline LemmaReport scan_vandermonde(unsigned m_max) {
  LemmaReport rep;
  rep.name = "Vandermonde solve equals stencil";
  rep.ranges = "0 <= m <= " + std::to_string(m_max);
  for (unsigned m = 0; m <= m_max; ++m) {
    ++rep.checked;
    if (vandermonde_oracle(m) != stencil(m).coeffs) rep.failures.push_back("m=" + std::to_string(m));
  }
  return rep;
}

inline LemmaReport scan_falling_factorial(unsigned r_max, unsigned i_max) {
  LemmaReport rep;
  rep.name = "falling-factorial truncation";
  rep.ranges = "1 <= r <= " + std::to_string(r_max) + ", 2 <= i <= " + std::to_string(i_max);
  for (unsigned r = 1; r <= r_max; ++r) {
    for (unsigned i = 2; i <= i_max; ++i) {
      ++rep.checked;
      const Rational lhs = falling_factorial_sum(r, i, i);
      const Rational rhs = falling_factorial_sum(r, i, r);
      if (lhs != rhs) {
        rep.failures.push_back("r=" + std::to_string(r) + " i=" + std::to_string(i) + ": " + to_string(lhs) +
                               " vs " + to_string(rhs));
      }
    }
  }
  return rep;
}

}  // namespace dinv

#endif  // DINV_IDENTITIES_HPP
