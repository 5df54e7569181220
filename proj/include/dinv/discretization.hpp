#ifndef DINV_DISCRETIZATION_HPP
#define DINV_DISCRETIZATION_HPP

// Coalescing point families whose scaled evaluation combinations
//   h^{-m} * sum_{r=0..m} A_r^(m) f(z_r(h))
// tend to (L_m(D) f)(z0) as h -> 0, together with exact (h-expansion) and
// floating-point (h-sweep) checks of that limit.

#include "dinv/polynomial.hpp"
#include "dinv/subspace.hpp"

#include <cmath>
#include <optional>
#include <vector>

namespace dinv {

/// coeffs[k] = A_k^(m) = (-1)^(m-k) / (k! (m-k)!). For m = 0 this is the
/// single coefficient 1, the plain evaluation at z0.
struct Stencil {
  unsigned m = 0;
  std::vector<Rational> coeffs;
};

inline Stencil stencil(unsigned m) {
  Stencil s{m, {}};
  s.coeffs.reserve(m + 1);
  for (unsigned k = 0; k <= m; ++k) {
    Rational a(Integer(1), Integer(factorial(k) * factorial(m - k)));
    a.canonicalize();
    if ((m - k) % 2 == 1) a = -a;
    s.coeffs.push_back(a);
  }
  return s;
}

enum class Scheme { A, B };

inline const char* to_string(Scheme s) { return s == Scheme::A ? "a" : "b"; }

/// Points z_0(h), ..., z_n(h); each coordinate is a polynomial in the single
/// variable h. The generating parameters travel with the points so the
/// target functional can be rebuilt from them.
struct SymbolicPointSet {
  Scheme scheme;
  std::vector<Rational> base;
  ParamTable params;
  std::vector<std::vector<Polynomial>> points;
};

namespace detail {

inline void require_base(const ParamTable& params, const std::vector<Rational>& z0) {
  if (z0.size() != params.d()) {
    throw std::invalid_argument("base point has " + std::to_string(z0.size()) + " coordinates, expected " +
                                std::to_string(params.d()));
  }
}

inline Polynomial h_monomial(unsigned power, const Rational& c) { return Polynomial::monomial(1, {power}, c); }

}  // namespace detail

/// z_i(h) = z0 + (ih, sum_{j=2..n} a_{j,2} (ih)^j, ..., sum_{j=2..n} a_{j,d} (ih)^j).
inline SymbolicPointSet points_scheme_a(const ParamTable& params, const std::vector<Rational>& z0) {
  detail::require_base(params, z0);
  SymbolicPointSet out{Scheme::A, z0, params, {}};
  for (unsigned i = 0; i <= params.n(); ++i) {
    std::vector<Polynomial> z;
    z.push_back(Polynomial::constant(1, z0[0]) + detail::h_monomial(1, Rational(i)));
    for (std::size_t s = 2; s <= params.d(); ++s) {
      Polynomial coord = Polynomial::constant(1, z0[s - 1]);
      for (unsigned j = 2; j <= params.n(); ++j) {
        coord += detail::h_monomial(j, params.at(j, s) * pow(Rational(i), j));
      }
      z.push_back(std::move(coord));
    }
    out.points.push_back(std::move(z));
  }
  return out;
}

/// z_0(h) = z0, z_1(h) = z0 + (h, 0, ..., 0) and for i >= 2
/// z_i(h) = z0 + (ih, sum_{j=2..i} i!/(i-j)! a_{j,2} h^j, ..., sum_{j=2..i} i!/(i-j)! a_{j,d} h^j).
inline SymbolicPointSet points_scheme_b(const ParamTable& params, const std::vector<Rational>& z0) {
  detail::require_base(params, z0);
  SymbolicPointSet out{Scheme::B, z0, params, {}};
  for (unsigned i = 0; i <= params.n(); ++i) {
    std::vector<Polynomial> z;
    z.push_back(Polynomial::constant(1, z0[0]) + detail::h_monomial(1, Rational(i)));
    for (std::size_t s = 2; s <= params.d(); ++s) {
      Polynomial coord = Polynomial::constant(1, z0[s - 1]);
      for (unsigned j = 2; j <= i; ++j) {
        coord += detail::h_monomial(j, Rational(falling_factorial(i, j)) * params.at(j, s));
      }
      z.push_back(std::move(coord));
    }
    out.points.push_back(std::move(z));
  }
  return out;
}

inline SymbolicPointSet make_points(Scheme scheme, const ParamTable& params, const std::vector<Rational>& z0) {
  return scheme == Scheme::A ? points_scheme_a(params, z0) : points_scheme_b(params, z0);
}

/// Numeric points at a fixed h.
inline std::vector<std::vector<Rational>> evaluate_points(const SymbolicPointSet& pts, const Rational& h) {
  const std::vector<Rational> at{h};
  std::vector<std::vector<Rational>> out;
  for (const auto& z : pts.points) {
    std::vector<Rational> coords;
    for (const auto& c : z) coords.push_back(eval(c, at));
    out.push_back(std::move(coords));
  }
  return out;
}

struct ExpansionReport {
  unsigned m = 0;
  std::vector<Rational> low_coeffs;  // h^0 .. h^{m-1}
  Rational lead;                     // h^m
  Rational target;                   // (L_m(D) f)(z0)

  bool pass() const {
    for (const auto& c : low_coeffs) {
      if (c != 0) return false;
    }
    return lead == target;
  }
};

/// sum_{r=0..m} A_r^(m) f(z_r(h)) as an exact polynomial in h.
inline Polynomial stencil_combination(const Polynomial& f, unsigned m, const SymbolicPointSet& pts) {
  if (m + 1 > pts.points.size()) {
    throw std::out_of_range("order m = " + std::to_string(m) + " needs " + std::to_string(m + 1) + " points, have " +
                            std::to_string(pts.points.size()));
  }
  if (f.dim() != pts.base.size()) throw std::invalid_argument("test function dimension does not match the points");
  const Stencil st = stencil(m);
  Polynomial sum(1);
  for (unsigned r = 0; r <= m; ++r) sum += st.coeffs[r] * compose(f, pts.points[r]);
  return sum;
}

/// Exact h-expansion check against a caller-supplied L_m.
inline ExpansionReport expansion_check(const Polynomial& f, unsigned m, const SymbolicPointSet& pts,
                                       const Polynomial& L_m) {
  const Polynomial combo = stencil_combination(f, m, pts);
  ExpansionReport report;
  report.m = m;
  for (unsigned k = 0; k < m; ++k) report.low_coeffs.push_back(combo.coefficient({k}));
  report.lead = combo.coefficient({m});
  report.target = apply_diff(DiffOperator{L_m}, f, pts.base);
  return report;
}

/// Exact h-expansion check; the target uses L_m from the recursive builder.
inline ExpansionReport expansion_check(const Polynomial& f, unsigned m, const SymbolicPointSet& pts) {
  if (m > pts.params.n()) throw std::out_of_range("order m exceeds n");
  const BasisSequence basis = build_recursive(pts.params);
  return expansion_check(f, m, pts, basis[m]);
}

struct SweepRow {
  double h = 0.0;
  double approx = 0.0;
  double exact = 0.0;
  double abs_err = 0.0;
  std::optional<double> est_order;
};

struct ExactSweepRow {
  Rational h;
  Rational approx;
  Rational exact;
  Rational abs_err;
};

namespace detail {

inline void require_sweep_args(const SymbolicPointSet& pts, const Polynomial& f, unsigned m, unsigned steps) {
  if (steps < 2) throw std::invalid_argument("sweep needs at least 2 steps");
  if (m > pts.params.n()) throw std::out_of_range("order m exceeds n");
  if (f.dim() != pts.base.size()) throw std::invalid_argument("test function dimension does not match the points");
}

}  // namespace detail

/// Floating-point view of the limit on h = h0 * 2^-k, k = 0..steps-1.
inline std::vector<SweepRow> sweep(const Polynomial& f, unsigned m, const SymbolicPointSet& pts, double h0,
                                   unsigned steps) {
  detail::require_sweep_args(pts, f, m, steps);
  if (!(h0 > 0.0)) throw std::invalid_argument("sweep needs h0 > 0");
  const Stencil st = stencil(m);
  const BasisSequence basis = build_recursive(pts.params);
  const double exact = to_double(apply_diff(DiffOperator{basis[m]}, f, pts.base));

  std::vector<SweepRow> rows;
  double h = h0;
  for (unsigned k = 0; k < steps; ++k, h *= 0.5) {
    const std::vector<double> at{h};
    double sum = 0.0;
    for (unsigned r = 0; r <= m; ++r) {
      std::vector<double> z;
      for (const auto& c : pts.points[r]) z.push_back(eval(c, std::span<const double>(at)));
      sum += to_double(st.coeffs[r]) * eval(f, std::span<const double>(z));
    }
    SweepRow row;
    row.h = h;
    row.approx = sum / std::pow(h, static_cast<int>(m));
    row.exact = exact;
    row.abs_err = std::abs(row.approx - exact);
    if (!rows.empty() && rows.back().abs_err > 0.0 && row.abs_err > 0.0) {
      row.est_order = std::log2(rows.back().abs_err / row.abs_err);
    }
    rows.push_back(row);
  }
  return rows;
}

/// Same sweep in exact arithmetic.
inline std::vector<ExactSweepRow> sweep_exact(const Polynomial& f, unsigned m, const SymbolicPointSet& pts,
                                              const Rational& h0, unsigned steps) {
  detail::require_sweep_args(pts, f, m, steps);
  if (h0 <= 0) throw std::invalid_argument("sweep needs h0 > 0");
  const Polynomial combo = stencil_combination(f, m, pts);
  const BasisSequence basis = build_recursive(pts.params);
  const Rational exact = apply_diff(DiffOperator{basis[m]}, f, pts.base);

  std::vector<ExactSweepRow> rows;
  Rational h = h0;
  for (unsigned k = 0; k < steps; ++k, h /= 2) {
    const std::vector<Rational> at{h};
    ExactSweepRow row;
    row.h = h;
    row.approx = eval(combo, at) / pow(h, m);
    row.exact = exact;
    row.abs_err = abs(row.approx - exact);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace dinv

#endif  // DINV_DISCRETIZATION_HPP
