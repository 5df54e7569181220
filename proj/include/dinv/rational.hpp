#ifndef DINV_RATIONAL_HPP
#define DINV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dinv {

/// Exact rational number. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator; values built from strings are canonicalized
/// in parse_rational().
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "+p/q" or "-p/q" (decimal integers only).
inline Rational parse_rational(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  const auto valid_integer = [](std::string_view digits, bool allow_sign) {
    if (allow_sign && !digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (digits.empty()) return false;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  const std::string_view num = std::string_view(s).substr(0, slash);
  const std::string_view den =
      slash == std::string::npos ? std::string_view("1") : std::string_view(s).substr(slash + 1);
  if (!valid_integer(num, true) || !valid_integer(den, false)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Integer power with 0^0 = 1.
inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return result;
}

inline Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

/// i (i-1) ... (i-k+1); zero whenever k > i, one when k == 0.
inline Integer falling_factorial(std::int64_t i, unsigned k) {
  Integer result = 1;
  for (unsigned t = 0; t < k; ++t) result *= Integer(static_cast<long>(i - static_cast<std::int64_t>(t)));
  return result;
}

}  // namespace dinv

#endif  // DINV_RATIONAL_HPP
