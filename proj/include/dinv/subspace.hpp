#ifndef DINV_SUBSPACE_HPP
#define DINV_SUBSPACE_HPP

// Breadth-one D-invariant subspaces span{L_0, ..., L_n}.
//
// Three constructions are provided and are kept on separate code paths so
// that their agreement is a real cross-check:
//   build_recursive  - degree-by-degree recursion through the Psi operators,
//   build_explicit   - closed-form weighted sum over parameter multi-indices,
//   build_general    - the (b, c) family q_{n,0..b_n}; with specialize() it
//                      reproduces the L_k.

#include "dinv/enumerate.hpp"
#include "dinv/linalg.hpp"
#include "dinv/polynomial.hpp"

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dinv {

/// Free parameters a_{i,j} (2 <= i <= n, 2 <= j <= d). Unset entries read as 0.
/// Both indices are the 1-based labels used in the math: i is a degree, j
/// names the variable x_j.
class ParamTable {
 public:
  ParamTable(std::size_t d, unsigned n) : d_(d), n_(n) {
    if (d < 2) throw std::invalid_argument("ParamTable: dimension d must be at least 2");
    if (n < 1) throw std::invalid_argument("ParamTable: degree n must be at least 1");
  }

  std::size_t d() const { return d_; }
  unsigned n() const { return n_; }

  Rational at(unsigned i, std::size_t j) const {
    check_index(i, j);
    auto it = a_.find({i, j});
    return it == a_.end() ? Rational(0) : it->second;
  }

  void set(unsigned i, std::size_t j, const Rational& value) {
    check_index(i, j);
    if (value == 0) {
      a_.erase({i, j});
    } else {
      a_[{i, j}] = value;
    }
  }

  /// Nonzero entries keyed by (i, j).
  const std::map<std::pair<unsigned, std::size_t>, Rational>& entries() const { return a_; }

  friend bool operator==(const ParamTable&, const ParamTable&) = default;

 private:
  void check_index(unsigned i, std::size_t j) const {
    if (i < 2 || i > n_ || j < 2 || j > d_) {
      throw std::out_of_range("parameter a_{" + std::to_string(i) + "," + std::to_string(j) +
                              "} outside 2<=i<=" + std::to_string(n_) + ", 2<=j<=" + std::to_string(d_));
    }
  }

  std::size_t d_;
  unsigned n_;
  std::map<std::pair<unsigned, std::size_t>, Rational> a_;
};

/// Input (b, c_1..c_d) of the general construction. c[i][j] is c_{i+1,j+1}.
struct GeneralSpec {
  unsigned n = 0;
  std::size_t d = 0;
  std::vector<unsigned> b;
  std::vector<std::vector<Rational>> c;

  /// Throws std::invalid_argument describing the first violated constraint.
  void validate() const {
    if (n < 2) throw std::invalid_argument("GeneralSpec: n must be at least 2");
    if (d < 1) throw std::invalid_argument("GeneralSpec: d must be at least 1");
    if (b.size() != n) throw std::invalid_argument("GeneralSpec: b must have n entries");
    if (b[0] != 1) throw std::invalid_argument("GeneralSpec: b_1 must be 1");
    if (b[1] < 2) throw std::invalid_argument("GeneralSpec: b_2 must be at least 2");
    for (std::size_t k = 2; k < n; ++k) {
      if (b[k] <= b[k - 1]) throw std::invalid_argument("GeneralSpec: b must be strictly increasing");
    }
    if (c.size() != d) throw std::invalid_argument("GeneralSpec: c must have d rows");
    for (const auto& row : c) {
      if (row.size() != n) throw std::invalid_argument("GeneralSpec: every c_i must have n entries");
    }
    bool any_first = false;
    for (const auto& row : c) any_first = any_first || row[0] != 0;
    if (!any_first) throw std::invalid_argument("GeneralSpec: c_{1,1}, ..., c_{d,1} are all zero");
  }

  unsigned top_weight() const { return b.back(); }

  friend bool operator==(const GeneralSpec&, const GeneralSpec&) = default;
};

/// Basis elements indexed by degree: elements[k] has total degree k.
struct BasisSequence {
  std::vector<Polynomial> elements;

  std::size_t size() const { return elements.size(); }
  const Polynomial& operator[](std::size_t k) const { return elements[k]; }

  friend bool operator==(const BasisSequence&, const BasisSequence&) = default;
};

/// gamma[i][j] = gamma_{i+1,j+1}: variable i, slot j.
struct GammaSolution {
  std::vector<std::vector<unsigned>> gamma;

  friend bool operator==(const GammaSolution&, const GammaSolution&) = default;
  friend auto operator<=>(const GammaSolution&, const GammaSolution&) = default;
};

// ---------------------------------------------------------------------------
// Recursive construction

inline BasisSequence build_recursive(const ParamTable& params) {
  const std::size_t d = params.d();
  const unsigned n = params.n();
  BasisSequence basis;
  basis.elements.reserve(n + 1);
  basis.elements.push_back(Polynomial::constant(d, Rational(1)));
  basis.elements.push_back(Polynomial::variable(d, 0));

  for (unsigned k = 2; k <= n; ++k) {
    const auto& L = basis.elements;
    Polynomial next = psi(L[k - 1], 0);
    for (std::size_t j = 2; j <= d; ++j) {
      // M_j = a_{2,j} L_{k-2} + ... + a_{k-1,j} L_1
      Polynomial m(d);
      for (unsigned i = 2; i + 1 <= k; ++i) {
        const Rational a = params.at(i, j);
        if (a != 0) m += a * L[k - i];
      }
      next += psi(restrict_free_of(m, j - 1), j - 1);
      next += params.at(k, j) * Polynomial::variable(d, j - 1);
    }
    basis.elements.push_back(std::move(next));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// General (b, c) construction

namespace detail {

/// Cell weights of the flattened gamma grid. Cells run slot-major:
/// cell (j * d + i) holds gamma_{i+1,j+1} and weighs b_{j+1}.
inline std::vector<unsigned> tau_weights(const GeneralSpec& spec) {
  std::vector<unsigned> w;
  w.reserve(spec.n * spec.d);
  for (unsigned j = 0; j < spec.n; ++j) {
    for (std::size_t i = 0; i < spec.d; ++i) w.push_back(spec.b[j]);
  }
  return w;
}

inline void require_weight(const GeneralSpec& spec, unsigned m) {
  if (m > spec.top_weight()) {
    throw std::out_of_range("weight " + std::to_string(m) + " exceeds b_n = " + std::to_string(spec.top_weight()));
  }
}

}  // namespace detail

/// All gamma tuples with tau(gamma) == m, structurally-zero ones included.
/// Order: descending lexicographic over the slot-major flattened grid
/// (gamma_{1,1}, gamma_{2,1}, ..., gamma_{d,1}, gamma_{1,2}, ...).
inline std::vector<GammaSolution> enumerate_tau_solutions(const GeneralSpec& spec, unsigned m) {
  spec.validate();
  detail::require_weight(spec, m);
  const auto weights = detail::tau_weights(spec);
  std::vector<GammaSolution> out;
  for_each_weighted_composition(weights, m, [&](std::span<const unsigned> counts) {
    GammaSolution s{std::vector<std::vector<unsigned>>(spec.d, std::vector<unsigned>(spec.n, 0))};
    for (unsigned j = 0; j < spec.n; ++j) {
      for (std::size_t i = 0; i < spec.d; ++i) s.gamma[i][j] = counts[j * spec.d + i];
    }
    out.push_back(std::move(s));
  });
  return out;
}

/// q_{n,0}, ..., q_{n,b_n}.
inline BasisSequence build_general(const GeneralSpec& spec) {
  spec.validate();
  const auto weights = detail::tau_weights(spec);
  BasisSequence basis;
  for (unsigned m = 0; m <= spec.top_weight(); ++m) {
    Polynomial q(spec.d);
    for_each_weighted_composition(weights, m, [&](std::span<const unsigned> counts) {
      Rational coef = 1;
      Exponent exp(spec.d, 0);
      for (unsigned j = 0; j < spec.n && coef != 0; ++j) {
        for (std::size_t i = 0; i < spec.d; ++i) {
          const unsigned g = counts[j * spec.d + i];
          if (g == 0) continue;
          coef *= pow(spec.c[i][j], g);
          coef /= factorial(g);
          exp[i] += g;
        }
      }
      if (coef != 0) q.add_term(std::move(exp), coef);
    });
    basis.elements.push_back(std::move(q));
  }
  return basis;
}

/// The (b, c) data that turns build_general into the L_k family:
/// b = (1, 2, ..., n), c_1 = (1, 0, ..., 0), c_s = (0, a_{2,s}, ..., a_{n,s}).
inline GeneralSpec specialize(const ParamTable& params) {
  if (params.n() < 2) throw std::invalid_argument("specialize: needs n >= 2");
  GeneralSpec spec;
  spec.n = params.n();
  spec.d = params.d();
  for (unsigned j = 1; j <= spec.n; ++j) spec.b.push_back(j);
  spec.c.assign(spec.d, std::vector<Rational>(spec.n, Rational(0)));
  spec.c[0][0] = 1;
  for (std::size_t s = 2; s <= spec.d; ++s) {
    for (unsigned j = 2; j <= spec.n; ++j) spec.c[s - 1][j - 1] = params.at(j, s);
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Closed-form construction

/// L_k = sum over gamma_{1,1} + sum_{s>=2, j>=2} j * gamma_{s,j} = k of
///       prod a_{j,s}^gamma_{s,j} / (gamma_{1,1}! prod gamma_{s,j}!)
///       * x_1^gamma_{1,1} prod_s x_s^(sum_j gamma_{s,j}).
inline BasisSequence build_explicit(const ParamTable& params) {
  const std::size_t d = params.d();
  const unsigned n = params.n();

  struct Cell {
    unsigned weight;
    std::size_t var;  // 0-based
    Rational a;
  };
  std::vector<Cell> cells{{1, 0, Rational(1)}};
  for (std::size_t s = 2; s <= d; ++s) {
    for (unsigned j = 2; j <= n; ++j) cells.push_back({j, s - 1, params.at(j, s)});
  }
  std::vector<unsigned> weights;
  for (const auto& c : cells) weights.push_back(c.weight);

  BasisSequence basis;
  for (unsigned k = 0; k <= n; ++k) {
    Polynomial L(d);
    for_each_weighted_composition(weights, k, [&](std::span<const unsigned> gamma) {
      Rational coef = 1;
      Exponent exp(d, 0);
      for (std::size_t t = 0; t < cells.size(); ++t) {
        if (gamma[t] == 0) continue;
        coef *= pow(cells[t].a, gamma[t]);
        if (coef == 0) return;
        coef /= factorial(gamma[t]);
        exp[cells[t].var] += gamma[t];
      }
      L.add_term(std::move(exp), coef);
    });
    basis.elements.push_back(std::move(L));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Span membership, closure, breadth

namespace detail {

inline std::vector<Exponent> monomial_support(std::span<const Polynomial> polys) {
  std::set<Exponent, GradedLexDescending> support;
  for (const auto& p : polys) {
    for (const auto& [exp, c] : p.terms()) support.insert(exp);
  }
  return {support.begin(), support.end()};
}

/// Rows are monomials of `support`, columns are the polynomials.
inline RationalMatrix coefficient_matrix(std::span<const Polynomial> polys, const std::vector<Exponent>& support) {
  RationalMatrix m(support.size(), polys.size());
  for (std::size_t r = 0; r < support.size(); ++r) {
    for (std::size_t c = 0; c < polys.size(); ++c) m(r, c) = polys[c].coefficient(support[r]);
  }
  return m;
}

}  // namespace detail

/// Coordinates of p in span(basis), or nullopt when p is outside the span.
inline std::optional<std::vector<Rational>> span_contains(std::span<const Polynomial> basis, const Polynomial& p) {
  for (const auto& q : basis) q.require_same_dim(p);
  std::vector<Polynomial> all(basis.begin(), basis.end());
  all.push_back(p);
  const auto support = detail::monomial_support(all);
  const auto matrix = detail::coefficient_matrix(basis, support);
  std::vector<Rational> rhs;
  rhs.reserve(support.size());
  for (const auto& e : support) rhs.push_back(p.coefficient(e));
  return solve(matrix, rhs);
}

/// A failed derivative identity: d L_k / d x_var does not match.
struct ClosureViolation {
  unsigned k;
  std::size_t var;  // 1-based

  friend bool operator==(const ClosureViolation&, const ClosureViolation&) = default;
};

struct ClosureReport {
  std::vector<ClosureViolation> violations;
  std::size_t checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Checks dL_k/dx_1 = L_{k-1} and dL_k/dx_j = a_{2,j} L_{k-2} + ... + a_{k,j} L_0
/// for every element and every variable.
inline ClosureReport check_closure(const BasisSequence& basis, const ParamTable& params) {
  ClosureReport report;
  const std::size_t d = params.d();
  for (unsigned k = 0; k < basis.size(); ++k) {
    const Polynomial& L = basis[k];
    if (L.dim() != d) {
      for (std::size_t j = 1; j <= d; ++j) report.violations.push_back({k, j});
      continue;
    }
    ++report.checked;
    const Polynomial expected_x1 = k == 0 ? Polynomial(d) : basis[k - 1];
    if (partial(L, 0) != expected_x1) report.violations.push_back({k, 1});
    for (std::size_t j = 2; j <= d; ++j) {
      ++report.checked;
      Polynomial expected(d);
      for (unsigned i = 2; i <= k; ++i) {
        if (i > params.n()) break;
        const Rational a = params.at(i, j);
        if (a != 0) expected += a * basis[k - i];
      }
      if (partial(L, j - 1) != expected) report.violations.push_back({k, j});
    }
  }
  return report;
}

/// Checks that every partial derivative of elements[k] lies in
/// span{elements[0], ..., elements[k-1]}.
inline ClosureReport check_lower_closure(const BasisSequence& basis) {
  ClosureReport report;
  for (unsigned k = 0; k < basis.size(); ++k) {
    const std::span<const Polynomial> lower(basis.elements.data(), k);
    const Polynomial& q = basis[k];
    for (std::size_t var = 0; var < q.dim(); ++var) {
      ++report.checked;
      const Polynomial dq = partial(q, var);
      const bool inside = k == 0 ? dq.is_zero() : span_contains(lower, dq).has_value();
      if (!inside) report.violations.push_back({k, var + 1});
    }
  }
  return report;
}

/// dim(span(basis) intersected with polynomials of degree <= 1) - 1.
/// Throws std::invalid_argument when 1 is not in the span.
inline std::size_t breadth(std::span<const Polynomial> basis) {
  if (basis.empty()) throw std::invalid_argument("breadth: empty basis");
  const std::size_t dim = basis.front().dim();
  if (!span_contains(basis, Polynomial::constant(dim, Rational(1)))) {
    throw std::invalid_argument("breadth: span does not contain the constant 1");
  }
  const auto support = detail::monomial_support(basis);
  const auto full = detail::coefficient_matrix(basis, support);
  std::vector<Exponent> high;
  for (const auto& e : support) {
    if (total_degree(e) >= 2) high.push_back(e);
  }
  const auto high_part = detail::coefficient_matrix(basis, high);
  // The projection onto degree >= 2 monomials has the low-degree part of the
  // span as its kernel.
  return rank(full) - rank(high_part) - 1;
}

inline std::size_t breadth(const BasisSequence& basis) { return breadth(std::span<const Polynomial>(basis.elements)); }

inline std::vector<int> degrees(const BasisSequence& basis) {
  std::vector<int> out;
  out.reserve(basis.size());
  for (const auto& p : basis.elements) out.push_back(p.degree());
  return out;
}

}  // namespace dinv

#endif  // DINV_SUBSPACE_HPP
