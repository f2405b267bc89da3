#pragma once

#include <string>
#include <utility>
#include <vector>

#include "milnorkit/errors.hpp"
#include "milnorkit/param_ratio.hpp"

namespace milnorkit {

inline bool field_is_zero(const Rational& x) { return x == 0; }
inline bool field_is_zero(const ParamRatio& x) { return x.is_zero(); }

/// Dense univariate polynomial over an exact field F (Rational or
/// ParamRatio). coeffs()[k] is the coefficient of t^k; no trailing zeros.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const F& c) { return UPoly(std::vector<F>{c}); }
  static UPoly monomial(std::size_t k, const F& c) {
    std::vector<F> v(k + 1, F(0L));
    v[k] = c;
    return UPoly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(std::size_t k) const { return k < c_.size() ? c_[k] : F(0L); }
  const F& lc() const { return c_.back(); }
  /// Multiplicity of the root t = 0 (0 for the zero polynomial).
  std::size_t low_degree() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!field_is_zero(c_[k])) return k;
    return 0;
  }
  UPoly shifted_down(std::size_t k) const {
    if (k >= c_.size()) return UPoly{};
    return UPoly(std::vector<F>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
  }

  UPoly derivative() const {
    std::vector<F> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * F(static_cast<long>(k)));
    return UPoly(std::move(d));
  }
  UPoly monic() const {
    if (is_zero()) return *this;
    F inv = F(1L) / lc();
    return scaled(inv);
  }
  UPoly scaled(const F& s) const {
    std::vector<F> v = c_;
    for (auto& x : v) x = x * s;
    return UPoly(std::move(v));
  }
  F eval(const F& t) const {
    F acc(0L);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0L));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] + b.c_[k];
    return UPoly(std::move(v));
  }
  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    std::vector<F> v(std::max(a.c_.size(), b.c_.size()), F(0L));
    for (std::size_t k = 0; k < a.c_.size(); ++k) v[k] = a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) v[k] = v[k] - b.c_[k];
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly{};
    std::vector<F> v(a.c_.size() + b.c_.size() - 1, F(0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (field_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(v));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; b must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "univariate division by zero");
    if (a.degree() < b.degree()) return {UPoly{}, a};
    std::vector<F> r = a.c_;
    std::vector<F> q(a.c_.size() - b.c_.size() + 1, F(0L));
    F inv = F(1L) / b.lc();
    for (std::size_t k = q.size(); k-- > 0;) {
      const F& top = r[k + b.c_.size() - 1];
      if (field_is_zero(top)) continue;
      F factor = top * inv;
      q[k] = factor;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] = r[k + j] - factor * b.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  /// Exact quotient; throws if b does not divide a.
  friend UPoly exact_quotient(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Error(ErrorKind::DivisionByZero, "inexact univariate division");
    return q;
  }

  /// Monic gcd; gcd(0, 0) = 0.
  friend UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && field_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// Renders sum c_k*t^k with ParamRatio coefficients, highest power first.
std::string upoly_to_string(const UPoly<ParamRatio>& p, const std::string& var,
                            const std::vector<std::string>& params);

}  // namespace milnorkit
