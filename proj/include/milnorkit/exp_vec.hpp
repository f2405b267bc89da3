#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace milnorkit {

inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector of a monomial. Unused trailing slots stay zero, so the
/// arity lives in the owning ring, not here.
struct ExpVec {
  std::array<std::uint16_t, kMaxVars> e{};

  std::uint16_t& operator[](std::size_t i) { return e[i]; }
  std::uint16_t operator[](std::size_t i) const { return e[i]; }

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  unsigned max_exponent() const { return *std::max_element(e.begin(), e.end()); }
  bool is_zero() const { return degree() == 0; }

  bool divides(const ExpVec& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] + b.e[i];
    return r;
  }
  /// Requires `b.divides(a)`.
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = a.e[i] - b.e[i];
    return r;
  }
  friend ExpVec lcm(const ExpVec& a, const ExpVec& b) {
    ExpVec r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  static ExpVec unit(std::size_t i, std::uint16_t power = 1) {
    ExpVec r;
    r.e[i] = power;
    return r;
  }

  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
};

/// Graded lexicographic "greater": higher total degree first, then lex with
/// variable 0 most significant.
inline bool grlex_greater(const ExpVec& a, const ExpVec& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

struct GrlexDesc {
  bool operator()(const ExpVec& a, const ExpVec& b) const { return grlex_greater(a, b); }
};

/// Local degree ordering (negative degree, reverse lexicographic tie-break):
/// lower total degree is larger; among equal degrees the monomial with the
/// smaller exponent in the last differing variable is larger.
inline bool local_greater(const ExpVec& a, const ExpVec& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  }
  return false;
}

struct ExpVecHash {
  std::size_t operator()(const ExpVec& v) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : v.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

}  // namespace milnorkit
