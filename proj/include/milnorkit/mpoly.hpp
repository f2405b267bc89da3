#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "milnorkit/exp_vec.hpp"

namespace milnorkit {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

/// Sparse multivariate polynomial with rational coefficients. Terms are kept
/// sorted in descending graded-lex order with no zero coefficients, so equal
/// polynomials have identical representations.
///
/// This is the coefficient engine behind ParamRatio (polynomials in the
/// declared parameter symbols) and behind the bivariate gcd used to strip
/// common components of partial derivatives.
class MPoly {
 public:
  using Term = std::pair<ExpVec, Rational>;

  MPoly() = default;
  explicit MPoly(const Rational& c);
  static MPoly variable(std::size_t index);
  static MPoly monomial(const ExpVec& exps, const Rational& c);
  /// Sorts, merges equal exponents and drops zeros.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_zero()); }
  bool is_one() const;
  Rational constant_term() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const ExpVec& leading_exp() const { return terms_.front().first; }
  const Rational& leading_coeff() const { return terms_.front().second; }

  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;
  /// Lowest power of `var` occurring in some term; 0 for the zero polynomial.
  unsigned low_degree_in(std::size_t var) const;
  /// Highest variable index with positive degree, or -1 for constants.
  int highest_var() const;

  /// Coefficients as a polynomial in `var`: entry k holds the coefficient of
  /// var^k (a polynomial not involving `var`).
  std::vector<MPoly> coefficients_in(std::size_t var) const;
  static MPoly from_coefficients(std::size_t var, const std::vector<MPoly>& coeffs);

  MPoly eval(std::size_t var, const Rational& value) const;
  MPoly monic() const;
  MPoly scaled(const Rational& c) const;
  MPoly shifted(const ExpVec& mono) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  std::size_t hash() const;
  /// Renders with variable names `names[i]`; coefficients exact.
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> terms_;
};

/// a / b when b divides a exactly; nullopt otherwise. b must be nonzero.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

/// Monic (graded-lex leading coefficient 1) greatest common divisor over Q.
/// gcd(0, 0) = 0.
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace milnorkit
