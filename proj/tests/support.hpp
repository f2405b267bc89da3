#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "milnorkit/local_algebra.hpp"
#include "milnorkit/newton.hpp"
#include "milnorkit/poly.hpp"

namespace milnorkit::testing {

inline Poly P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

inline ExpVec mono(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring).terms().begin()->first; }

inline Rational small_rational(std::mt19937_64& rng, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational nonzero_rational(std::mt19937_64& rng, int span = 3) {
  Rational r;
  do r = small_rational(rng, span);
  while (r == 0);
  return r;
}

/// Random element of Q(a, b) with small numerator and denominator.
inline ParamRatio random_param_ratio(std::mt19937_64& rng) {
  auto poly = [&](bool nonzero) {
    MPoly p;
    do {
      std::vector<MPoly::Term> terms;
      std::uniform_int_distribution<int> deg(0, 2), count(1, 3);
      for (int k = count(rng); k > 0; --k) {
        ExpVec e;
        e[0] = static_cast<std::uint16_t>(deg(rng));
        e[1] = static_cast<std::uint16_t>(deg(rng));
        terms.emplace_back(e, small_rational(rng));
      }
      p = MPoly::from_terms(std::move(terms));
    } while (nonzero && p.is_zero());
    return p;
  };
  return ParamRatio::fraction(poly(false), poly(true));
}

/// Random polynomial in the ring with support in [0, box)^n.
inline Poly random_poly(std::mt19937_64& rng, const RingPtr& ring, int box, int terms, int span = 3) {
  Poly p(ring);
  std::uniform_int_distribution<int> exp(0, box - 1);
  for (int k = 0; k < terms; ++k) {
    ExpVec e;
    for (std::size_t i = 0; i < ring->arity(); ++i) e[i] = static_cast<std::uint16_t>(exp(rng));
    p.add_term(e, small_rational(rng, span));
  }
  return p;
}

struct CorpusGerm {
  Poly f;
  bool planted_degenerate;  // built around a face with a multiple root
};

/// Seeded corpus of convenient plane germs with support in the 6x6 box
/// (exponents 0..5), no terms of degree < 2 and finite Milnor number.
/// Every fifth germ has a deliberately degenerate face (c1 x^2 + c2 y^2)^2.
inline std::vector<CorpusGerm> plane_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RingPtr ring = make_ring({"x", "y"});
  std::uniform_int_distribution<int> pure(2, 5), pick(0, 99);
  std::vector<CorpusGerm> out;
  for (std::size_t k = 0; out.size() < count; ++k) {
    Poly f(ring);
    bool degenerate = k % 5 == 4;
    if (degenerate) {
      Rational c1 = nonzero_rational(rng), c2 = Rational(pick(rng) % 3 + 1);
      Poly q = Poly::monomial(ring, ExpVec::unit(0, 2), c1) + Poly::monomial(ring, ExpVec::unit(1, 2), c2);
      f = q * q;
      // higher-order terms strictly above the face
      f.add_term(ExpVec::unit(pick(rng) % 2, 5), nonzero_rational(rng));
      for (int t = 0; t < 3; ++t) {
        ExpVec e;
        e[0] = static_cast<std::uint16_t>(pick(rng) % 6);
        e[1] = static_cast<std::uint16_t>(pick(rng) % 6);
        if (e.degree() >= 5) f.add_term(e, small_rational(rng));
      }
    } else {
      f.add_term(ExpVec::unit(0, static_cast<std::uint16_t>(pure(rng))), nonzero_rational(rng));
      f.add_term(ExpVec::unit(1, static_cast<std::uint16_t>(pure(rng))), nonzero_rational(rng));
      for (int t = pick(rng) % 5; t > 0; --t) {
        ExpVec e;
        e[0] = static_cast<std::uint16_t>(pick(rng) % 5 + 1);
        e[1] = static_cast<std::uint16_t>(pick(rng) % 5 + 1);
        f.add_term(e, small_rational(rng));
      }
    }
    if (f.order().value_or(0) < 2) continue;
    if (!newton_polygon(f).convenient()) continue;
    if (!milnor(f).is_finite()) continue;
    out.push_back({f, degenerate});
  }
  return out;
}

/// Determinant over Q by fraction-exact Gaussian elimination.
inline Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t r = c;
    while (r < n && m[r][c] == 0) ++r;
    if (r == n) return 0;
    if (r != c) {
      std::swap(m[r], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

/// Resultant of two univariate polynomials (coefficient k of x^k) through
/// the Sylvester matrix. Both must have nonzero leading coefficients.
inline Rational sylvester_resultant(const std::vector<Rational>& p, const std::vector<Rational>& q) {
  const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
  if (size == 0) return 1;
  std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return determinant(s);
}

/// Brute-force torus test for a weighted homogeneous plane polynomial g over
/// Q: do dg/dx and dg/dy share a zero with x, y != 0? Every torus orbit of
/// the weighted action meets y = 1, so this reduces to a common nonzero root
/// of the restrictions to y = 1, decided by a Sylvester resultant.
inline bool torus_common_zero_oracle(const Poly& g) {
  auto restrict_y1 = [](const Poly& h) {
    std::vector<Rational> c;
    for (const auto& [e, v] : h.terms()) {
      if (c.size() <= e[0]) c.resize(e[0] + 1, Rational(0));
      c[e[0]] += v.rational();
    }
    // strip powers of x and trailing zeros
    std::size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;
    c.erase(c.begin(), c.begin() + static_cast<long>(std::min(low, c.size())));
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
  };
  auto p = restrict_y1(partial(g, 0)), q = restrict_y1(partial(g, 1));
  if (p.empty() && q.empty()) return true;
  if (p.empty()) return q.size() > 1;
  if (q.empty()) return p.size() > 1;
  return sylvester_resultant(p, q) == 0;
}

}  // namespace milnorkit::testing
