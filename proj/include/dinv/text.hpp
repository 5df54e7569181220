#ifndef DINV_TEXT_HPP
#define DINV_TEXT_HPP

// Human-readable polynomial text: a signed sum of terms `c*x1^e1*...*xd^ed`,
// rendered in graded-lex descending order. Unit coefficients, unit exponents
// and zero exponents are omitted on output and accepted on input.

#include "dinv/polynomial.hpp"

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dinv {

/// x1, ..., xd
inline std::vector<std::string> default_variable_names(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline std::string render(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.dim()) throw std::invalid_argument("render: one variable name per dimension required");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational magnitude = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string monomial;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += names[i];
      if (exp[i] != 1) monomial += "^" + std::to_string(exp[i]);
    }
    if (monomial.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += monomial;
    } else {
      out += to_string(magnitude) + "*" + monomial;
    }
  }
  return out;
}

inline std::string render(const Polynomial& p) { return render(p, default_variable_names(p.dim())); }

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::optional<std::size_t> dim, const std::vector<std::string>& names)
      : text_(text), dim_(dim), names_(names) {}

  Polynomial parse() {
    struct RawTerm {
      Rational coef;
      std::vector<std::pair<std::size_t, unsigned>> factors;
    };
    std::vector<RawTerm> raw;
    std::size_t max_var = 0;

    skip_space();
    bool first = true;
    while (pos_ < text_.size() || first) {
      Rational sign = 1;
      skip_space();
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      RawTerm term{sign, {}};
      bool need_factor = true;
      while (need_factor) {
        skip_space();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
          term.coef *= read_number();
        } else {
          const std::size_t var = read_variable();
          unsigned e = 1;
          skip_space();
          if (peek() == '^') {
            ++pos_;
            skip_space();
            e = read_unsigned();
          }
          max_var = std::max(max_var, var + 1);
          term.factors.emplace_back(var, e);
        }
        skip_space();
        need_factor = peek() == '*';
        if (need_factor) ++pos_;
      }
      raw.push_back(std::move(term));
      skip_space();
    }

    const std::size_t dim = dim_.value_or(std::max<std::size_t>(max_var, 1));
    if (max_var > dim) fail("variable index exceeds dimension " + std::to_string(dim));
    Polynomial p(dim);
    for (auto& term : raw) {
      Exponent e(dim, 0);
      for (auto [var, k] : term.factors) e[var] += k;
      p.add_term(std::move(e), term.coef);
    }
    return p;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(text_) + "'");
  }

  unsigned read_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
  }

  Rational read_number() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (peek() == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den == pos_) fail("expected denominator");
    }
    return parse_rational(text_.substr(start, pos_ - start));
  }

  std::size_t read_variable() {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const auto& name = names_[i];
      if (text_.substr(pos_, name.size()) == name) {
        const char next = pos_ + name.size() < text_.size() ? text_[pos_ + name.size()] : '\0';
        if (!std::isalnum(static_cast<unsigned char>(next))) {
          pos_ += name.size();
          return i;
        }
      }
    }
    if (names_.empty() && peek() == 'x') {
      ++pos_;
      const unsigned index = read_unsigned();
      if (index == 0) fail("variables are numbered from x1");
      return index - 1;
    }
    fail("expected a number or a variable");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::optional<std::size_t> dim_;
  const std::vector<std::string>& names_;
};

}  // namespace detail

/// Parses the text format with variables x1, x2, ...; when `dim` is absent
/// the highest variable index present decides it.
inline Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> dim = std::nullopt) {
  static const std::vector<std::string> no_names;
  return detail::PolynomialParser(text, dim, no_names).parse();
}

/// Parses with explicit variable names (e.g. {"h"} for point coordinates).
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return detail::PolynomialParser(text, names.size(), names).parse();
}

}  // namespace dinv

#endif  // DINV_TEXT_HPP
