#ifndef DINV_POLYNOMIAL_HPP
#define DINV_POLYNOMIAL_HPP

#include "dinv/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dinv {

/// Multi-index (alpha_1, ..., alpha_d); one entry per variable.
using Exponent = std::vector<unsigned>;

inline unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// Graded-lex descending order with x1 > x2 > ... > xd: higher total degree
/// first, ties broken by the larger exponent of the earliest variable.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Sparse multivariate polynomial over the rationals in a fixed number of
/// variables. Zero coefficients are never stored, so termwise map equality is
/// polynomial equality. Variables are addressed 0-based in this API
/// (variable 0 is x1).
class Polynomial {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexDescending>;

  explicit Polynomial(std::size_t dim) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("polynomial dimension must be positive");
  }

  static Polynomial constant(std::size_t dim, const Rational& c) {
    Polynomial p(dim);
    p.add_term(Exponent(dim, 0), c);
    return p;
  }

  static Polynomial variable(std::size_t dim, std::size_t var) {
    return monomial(dim, unit_exponent(dim, var), Rational(1));
  }

  static Polynomial monomial(std::size_t dim, Exponent exp, const Rational& c) {
    Polynomial p(dim);
    p.add_term(std::move(exp), c);
    return p;
  }

  std::size_t dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : static_cast<int>(total_degree(terms_.begin()->first));
  }

  Rational coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Accumulates c * x^exp, dropping the term if the sum cancels.
  void add_term(Exponent exp, const Rational& c) {
    if (exp.size() != dim_) throw std::invalid_argument("exponent length does not match polynomial dimension");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(exp), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Polynomial& operator+=(const Polynomial& other) {
    require_same_dim(other);
    for (const auto& [exp, c] : other.terms_) add_term(exp, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& other) {
    require_same_dim(other);
    for (const auto& [exp, c] : other.terms_) add_term(exp, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [exp, c] : terms_) c *= s;
    return *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

  void require_same_dim(const Polynomial& other) const {
    if (other.dim_ != dim_) {
      throw std::invalid_argument("polynomial dimension mismatch: " + std::to_string(dim_) + " vs " +
                                  std::to_string(other.dim_));
    }
  }

  static Exponent unit_exponent(std::size_t dim, std::size_t var) {
    if (var >= dim) throw std::out_of_range("variable index out of range");
    Exponent e(dim, 0);
    e[var] = 1;
    return e;
  }

 private:
  std::size_t dim_;
  Terms terms_;
};

inline Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
inline Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
inline Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
inline Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
inline Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

inline Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  p.require_same_dim(q);
  Polynomial out(p.dim());
  Exponent e(p.dim());
  for (const auto& [ea, ca] : p.terms()) {
    for (const auto& [eb, cb] : q.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

inline Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
inline Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

inline Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.dim(), Rational(1));
  for (unsigned t = 0; t < k; ++t) result = result * p;
  return result;
}

inline void require_variable(const Polynomial& p, std::size_t var) {
  if (var >= p.dim()) {
    throw std::out_of_range("variable index " + std::to_string(var + 1) + " out of range for dimension " +
                            std::to_string(p.dim()));
  }
}

/// Partial derivative with respect to variable `var`.
inline Polynomial partial(const Polynomial& p, std::size_t var) {
  require_variable(p, var);
  Polynomial out(p.dim());
  for (const auto& [exp, c] : p.terms()) {
    if (exp[var] == 0) continue;
    Exponent e = exp;
    --e[var];
    out.add_term(std::move(e), c * exp[var]);
  }
  return out;
}

/// Mixed partial derivative d^|alpha| / dx^alpha.
inline Polynomial derivative(const Polynomial& p, const Exponent& alpha) {
  if (alpha.size() != p.dim()) throw std::invalid_argument("multi-index length does not match polynomial dimension");
  Polynomial out(p.dim());
  for (const auto& [exp, c] : p.terms()) {
    Rational coef = c;
    Exponent e = exp;
    bool vanishes = false;
    for (std::size_t i = 0; i < e.size() && !vanishes; ++i) {
      if (alpha[i] > e[i]) {
        vanishes = true;
        break;
      }
      coef *= falling_factorial(e[i], alpha[i]);
      e[i] -= alpha[i];
    }
    if (!vanishes) out.add_term(std::move(e), coef);
  }
  return out;
}

/// Monomial-wise antiderivative in variable `var`:
/// x^alpha -> x^alpha * x_var / (alpha_var + 1).
inline Polynomial psi(const Polynomial& p, std::size_t var) {
  require_variable(p, var);
  Polynomial out(p.dim());
  for (const auto& [exp, c] : p.terms()) {
    Exponent e = exp;
    ++e[var];
    out.add_term(std::move(e), c / Rational(e[var]));
  }
  return out;
}

/// Keeps the terms free of the variables preceding `var`.
inline Polynomial restrict_free_of(const Polynomial& p, std::size_t var) {
  require_variable(p, var);
  Polynomial out(p.dim());
  for (const auto& [exp, c] : p.terms()) {
    if (std::all_of(exp.begin(), exp.begin() + static_cast<std::ptrdiff_t>(var), [](unsigned a) { return a == 0; })) {
      out.add_term(exp, c);
    }
  }
  return out;
}

inline Rational eval(const Polynomial& f, std::span<const Rational> z) {
  if (z.size() != f.dim()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [exp, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] != 0) term *= pow(z[i], exp[i]);
    }
    sum += term;
  }
  return sum;
}

inline double eval(const Polynomial& f, std::span<const double> z) {
  if (z.size() != f.dim()) throw std::invalid_argument("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [exp, c] : f.terms()) {
    double term = to_double(c);
    for (std::size_t i = 0; i < exp.size(); ++i) {
      for (unsigned k = 0; k < exp[i]; ++k) term *= z[i];
    }
    sum += term;
  }
  return sum;
}

/// Substitutes x_i -> subs[i]; the result lives in the dimension of subs.
inline Polynomial compose(const Polynomial& f, std::span<const Polynomial> subs) {
  if (subs.size() != f.dim()) throw std::invalid_argument("compose: need one substitution per variable");
  const std::size_t target_dim = subs.front().dim();
  for (const auto& s : subs) {
    if (s.dim() != target_dim) throw std::invalid_argument("compose: substitutions must share a dimension");
  }
  // powers[i][k] = subs[i]^k, filled lazily
  std::vector<std::vector<Polynomial>> powers(subs.size());
  const auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_dim, Rational(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * subs[i]);
    return cache[k];
  };
  Polynomial out(target_dim);
  for (const auto& [exp, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target_dim, c);
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] != 0) term = term * power_of(i, exp[i]);
    }
    out += term;
  }
  return out;
}

/// Degree-k homogeneous component.
inline Polynomial homogeneous_part(const Polynomial& p, unsigned k) {
  Polynomial out(p.dim());
  for (const auto& [exp, c] : p.terms()) {
    if (total_degree(exp) == k) out.add_term(exp, c);
  }
  return out;
}

/// The operator p(D): each monomial c x^alpha acts as c d^|alpha|/dx^alpha.
struct DiffOperator {
  Polynomial source;
};

/// (p(D) f)(z0), exact.
inline Rational apply_diff(const DiffOperator& op, const Polynomial& f, std::span<const Rational> z0) {
  op.source.require_same_dim(f);
  if (z0.size() != f.dim()) throw std::invalid_argument("apply_diff: base point has wrong dimension");
  Rational sum = 0;
  for (const auto& [alpha, c] : op.source.terms()) sum += c * eval(derivative(f, alpha), z0);
  return sum;
}

}  // namespace dinv

#endif  // DINV_POLYNOMIAL_HPP
