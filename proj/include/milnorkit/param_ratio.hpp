#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "milnorkit/mpoly.hpp"

namespace milnorkit {

/// Exact element of Q(a_1, ..., a_k): a reduced fraction of polynomials in the
/// parameter symbols, which are treated as algebraically independent
/// transcendentals.
///
/// Canonical form: numerator and denominator are coprime and the denominator
/// has graded-lex leading coefficient 1. Purely rational values are stored
/// without any polynomial payload; parametric values share an immutable
/// payload, so copies are cheap and values are safe to share across threads.
class ParamRatio {
 public:
  ParamRatio() = default;
  ParamRatio(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  ParamRatio(const Rational& q) : q_(q) { q_.canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// Reduces num/den to canonical form. Throws DivisionByZero for den = 0.
  static ParamRatio fraction(const MPoly& num, const MPoly& den);
  static ParamRatio polynomial(const MPoly& num) { return fraction(num, MPoly(Rational(1))); }
  static ParamRatio parameter(std::size_t index) { return polynomial(MPoly::variable(index)); }

  bool is_zero() const { return !frac_ && q_ == 0; }
  bool is_one() const { return !frac_ && q_ == 1; }
  bool is_rational() const { return !frac_; }
  /// Value as a rational number; requires is_rational().
  const Rational& rational() const { return q_; }

  MPoly numerator() const;
  MPoly denominator() const;

  ParamRatio operator-() const;
  ParamRatio& operator+=(const ParamRatio& o) { return *this = *this + o; }
  ParamRatio& operator-=(const ParamRatio& o) { return *this = *this - o; }
  ParamRatio& operator*=(const ParamRatio& o) { return *this = *this * o; }
  ParamRatio& operator/=(const ParamRatio& o) { return *this = *this / o; }
  friend ParamRatio operator+(const ParamRatio& a, const ParamRatio& b);
  friend ParamRatio operator-(const ParamRatio& a, const ParamRatio& b);
  friend ParamRatio operator*(const ParamRatio& a, const ParamRatio& b);
  /// Throws DivisionByZero when b = 0.
  friend ParamRatio operator/(const ParamRatio& a, const ParamRatio& b);
  ParamRatio inverse() const;
  ParamRatio pow(unsigned k) const;

  friend bool operator==(const ParamRatio& a, const ParamRatio& b);
  friend bool operator!=(const ParamRatio& a, const ParamRatio& b) { return !(a == b); }

  /// Substitutes rational values for some parameter indices. Throws
  /// PoleAtAssignment if the denominator vanishes.
  ParamRatio specialize(const std::map<std::size_t, Rational>& assignment) const;
  /// Renames parameter indices: index i becomes old_to_new[i]. Indices that
  /// occur must map to a valid slot.
  ParamRatio remap(const std::vector<int>& old_to_new) const;
  /// Indices of parameters that actually occur.
  std::vector<std::size_t> parameters_used() const;

  std::size_t hash() const;
  /// Exact text form, re-parseable by parse_scalar. `atomic` is set when the
  /// result needs no parentheses as a factor.
  std::string to_string(const std::vector<std::string>& names, bool* atomic = nullptr) const;

 private:
  struct Frac {
    MPoly num;
    MPoly den;
  };
  Rational q_;
  std::shared_ptr<const Frac> frac_;
};

}  // namespace milnorkit

template <>
struct std::hash<milnorkit::ParamRatio> {
  std::size_t operator()(const milnorkit::ParamRatio& x) const { return x.hash(); }
};
