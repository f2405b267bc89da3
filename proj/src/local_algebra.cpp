#include "milnorkit/local_algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "milnorkit/errors.hpp"
#include "milnorkit/univariate.hpp"

namespace milnorkit {

std::string monomial_to_string(const ExpVec& e, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.arity(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// Ideals

IdealGens::IdealGens(std::vector<Poly> gens, std::string tag_) : tag(std::move(tag_)) {
  if (gens.empty()) throw Error(ErrorKind::ArityMismatch, "an ideal needs at least one generator to fix its ring");
  ring_ = gens.front().ring_ptr();
  for (auto& g : gens) {
    if (!(g.ring() == *ring_)) throw Error(ErrorKind::ArityMismatch, "ideal generators live in different rings");
    if (!g.is_zero()) generators.push_back(std::move(g));
  }
}

IdealGens IdealGens::jacobian(const Poly& f) { return IdealGens(gradient(f), "jacobian"); }

IdealGens IdealGens::maximal_times_jacobian(const Poly& f) {
  std::vector<Poly> gens;
  const auto grad = gradient(f);
  for (std::size_t i = 0; i < f.ring().arity(); ++i)
    for (const auto& d : grad) gens.push_back(d.shifted(ExpVec::unit(i)));
  // Keeps the ring even when f is constant and all products vanish.
  if (std::all_of(gens.begin(), gens.end(), [](const Poly& p) { return p.is_zero(); }))
    gens.push_back(Poly(f.ring_ptr()));
  return IdealGens(std::move(gens), "maximal_times_jacobian");
}

// ---------------------------------------------------------------------------
// Polynomials sorted by the local ordering

namespace {

struct LTerm {
  ExpVec e;
  ParamRatio c;
};
using LPoly = std::vector<LTerm>;  // local order, largest (= leading) first

// Terms of degree >= bound are dropped (bound 0 keeps everything).
LPoly to_local(const Poly& p, unsigned bound = 0) {
  LPoly out;
  out.reserve(p.size());
  for (const auto& [e, c] : p.terms())
    if (bound == 0 || e.degree() < bound) out.push_back({e, c});
  std::sort(out.begin(), out.end(), [](const LTerm& a, const LTerm& b) { return local_greater(a.e, b.e); });
  return out;
}

Poly from_local(const RingPtr& ring, const LPoly& p) {
  Poly out(ring);
  for (const auto& t : p) out.add_term(t.e, t.c);
  return out;
}

unsigned max_degree(const LPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.e.degree());
  return d;
}

LPoly make_monic(LPoly p) {
  if (p.empty() || p.front().c.is_one()) return p;
  ParamRatio inv = p.front().c.inverse();
  for (auto& t : p) t.c = t.c * inv;
  return p;
}

// h - c * x^m * g, assuming the leading terms cancel; terms of degree
// >= bound are dropped.
LPoly reduce_step(const LPoly& h, const ParamRatio& c, const ExpVec& m, const LPoly& g, unsigned bound) {
  LPoly out;
  out.reserve(h.size() + g.size());
  std::size_t i = 1, j = 1;
  while (i < h.size() || j < g.size()) {
    if (j >= g.size()) {
      out.push_back(h[i++]);
      continue;
    }
    ExpVec ge = g[j].e + m;
    if (bound && ge.degree() >= bound) {
      ++j;
      continue;
    }
    if (i < h.size() && local_greater(h[i].e, ge)) {
      out.push_back(h[i++]);
    } else if (i < h.size() && h[i].e == ge) {
      ParamRatio v = h[i].c - c * g[j].c;
      if (!v.is_zero()) out.push_back({ge, std::move(v)});
      ++i;
      ++j;
    } else {
      out.push_back({ge, -(c * g[j].c)});
      ++j;
    }
  }
  return out;
}

LPoly shifted(const LPoly& p, const ExpVec& m) {
  LPoly out = p;
  for (auto& t : out) t.e = t.e + m;
  return out;
}

struct Elem {
  LPoly p;
  unsigned ecart = 0;
  const ExpVec& lm() const { return p.front().e; }
};

Elem make_elem(LPoly p) {
  Elem e;
  e.p = make_monic(std::move(p));
  e.ecart = max_degree(e.p) - e.p.front().e.degree();
  return e;
}

// Mora's weak normal form: reducers of low ecart first, with h itself joining
// the reducer set whenever it would otherwise be reduced by something of
// larger ecart.
LPoly mora_normal_form(LPoly h, const std::vector<Elem>& basis, unsigned bound) {
  std::vector<Elem> extra;
  while (!h.empty()) {
    const ExpVec lm = h.front().e;
    const Elem* best = nullptr;
    for (const std::vector<Elem>* pool : {&basis, static_cast<const std::vector<Elem>*>(&extra)})
      for (const auto& g : *pool)
        if (g.lm().divides(lm) && (!best || g.ecart < best->ecart)) best = &g;
    if (!best) return h;
    Elem g = *best;
    unsigned eh = max_degree(h) - lm.degree();
    if (g.ecart > eh) extra.push_back(make_elem(h));
    ParamRatio c = h.front().c;  // reducers are monic
    h = reduce_step(h, c, lm - g.lm(), g.p, bound);
  }
  return h;
}

std::vector<ExpVec> monomials_below(std::size_t arity, unsigned bound) {
  std::vector<ExpVec> out;
  if (bound == 0) return out;
  ExpVec e;
  // Odometer over the box [0, bound)^arity, keeping degree < bound.
  while (true) {
    if (e.degree() < bound) out.push_back(e);
    std::size_t i = 0;
    while (i < arity) {
      if (++e[i] < bound) break;
      e[i] = 0;
      ++i;
    }
    if (i == arity) break;
  }
  std::sort(out.begin(), out.end(), [](const ExpVec& a, const ExpVec& b) { return local_greater(a, b); });
  return out;
}

std::string staircase_summary(const StandardBasis& b) {
  std::ostringstream os;
  os << "leading exponents {";
  for (std::size_t k = 0; k < b.leading_exponents.size(); ++k)
    os << (k ? ", " : "") << monomial_to_string(b.leading_exponents[k], *b.ring);
  os << "}";
  std::vector<std::string> free_axes;
  for (std::size_t i = 0; i < b.ring->arity(); ++i) {
    bool hit = std::any_of(b.leading_exponents.begin(), b.leading_exponents.end(), [&](const ExpVec& e) {
      return e[i] > 0 && e.degree() == e[i];
    });
    if (!hit) free_axes.push_back(b.ring->vars[i]);
  }
  if (!free_axes.empty()) {
    os << "; no pure power of";
    for (const auto& v : free_axes) os << ' ' << v;
  }
  os << "; degree cap " << b.degree_cap << (b.truncated ? " (pairs beyond the cap skipped)" : "");
  return os.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Standard bases

bool StandardBasis::has_all_pure_powers() const {
  if (modulus_degree > 0) return true;
  for (std::size_t i = 0; i < ring->arity(); ++i) {
    bool hit = std::any_of(leading_exponents.begin(), leading_exponents.end(),
                           [&](const ExpVec& e) { return e.degree() == e[i]; });
    if (!hit) return false;
  }
  return true;
}

bool StandardBasis::certified_finite() const {
  if (modulus_degree > 0) {
    // m^(D-1) inside I + m^D forces m^(D-1) inside I (Nakayama).
    for (const auto& e : quotient_basis(*this).standard_monomials)
      if (e.degree() + 2 > modulus_degree) return false;
    return true;
  }
  if (!has_all_pure_powers()) return false;
  if (!truncated) return true;
  // Below the cap the leading ideal is exact, so a staircase that ends below
  // it is the true one.
  for (const auto& e : quotient_basis(*this).standard_monomials)
    if (e.degree() > degree_cap) return false;
  return true;
}

StandardBasis standard_basis_unchecked(const IdealGens& ideal, unsigned degree_cap, unsigned modulus_degree) {
  if (degree_cap < 1) throw Error(ErrorKind::CapExceeded, "degree cap must be at least 1");
  StandardBasis out;
  out.ring = ideal.ring();
  out.generators = ideal.generators;
  out.degree_cap = degree_cap;
  out.modulus_degree = modulus_degree;

  std::vector<Elem> s;
  for (const auto& g : ideal.generators) {
    LPoly p = to_local(g, modulus_degree);
    if (!p.empty()) s.push_back(make_elem(std::move(p)));
  }

  struct Pair {
    std::size_t i, j;
    unsigned degree;
  };
  std::vector<Pair> pairs;
  auto add_pairs_with = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(s[i].lm(), s[k].lm()).degree()});
  };
  bool unit = std::any_of(s.begin(), s.end(), [](const Elem& e) { return e.lm().is_zero(); });
  if (!unit)
    for (std::size_t k = 1; k < s.size(); ++k) add_pairs_with(k);

  while (!unit && !pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      return std::tie(a.degree, a.j, a.i) < std::tie(b.degree, b.j, b.i);
    });
    Pair pr = *it;
    *it = pairs.back();
    pairs.pop_back();
    // Everything at or above the modulus degree is zero.
    if (modulus_degree && pr.degree >= modulus_degree) continue;
    if (pr.degree > degree_cap) {
      out.truncated = true;
      continue;
    }
    const ExpVec l = lcm(s[pr.i].lm(), s[pr.j].lm());
    LPoly sp = reduce_step(shifted(s[pr.i].p, l - s[pr.i].lm()), ParamRatio(1L), l - s[pr.j].lm(), s[pr.j].p,
                           modulus_degree);
    LPoly h = mora_normal_form(std::move(sp), s, modulus_degree);
    if (h.empty()) continue;
    s.push_back(make_elem(std::move(h)));
    if (s.back().lm().is_zero()) {
      unit = true;
      break;
    }
    add_pairs_with(s.size() - 1);
  }

  // Minimalise: drop elements whose leading exponent is divisible by another
  // one (the earliest of equal leading exponents survives).
  for (std::size_t k = 0; k < s.size(); ++k) {
    bool redundant = false;
    for (std::size_t m = 0; m < s.size() && !redundant; ++m) {
      if (m == k || !s[m].lm().divides(s[k].lm())) continue;
      redundant = s[m].lm() != s[k].lm() || m < k;
    }
    if (redundant) continue;
    out.elements.push_back(from_local(out.ring, s[k].p));
    out.leading_exponents.push_back(s[k].lm());
  }
  return out;
}

namespace {

// Cost grows steeply with the modulus, so it is raised one degree at a time.
constexpr unsigned kFirstModulus = 4;
// Plane colengths try truncations up to this degree before the gcd test.
constexpr unsigned kEarlyModulus = 12;

// Tries the truncated computations I + m^D for D = 4, 5, ... up to the cap
// and returns the first certified one; otherwise the untruncated basis.
StandardBasis best_standard_basis(const IdealGens& ideal, unsigned degree_cap) {
  for (unsigned d = kFirstModulus; d <= degree_cap + 1; ++d) {
    StandardBasis b = standard_basis_unchecked(ideal, degree_cap, d);
    if (b.certified_finite()) return b;
  }
  return standard_basis_unchecked(ideal, degree_cap, 0);
}

// In two variables the quotient is finite iff the generators have no common
// factor through the origin.
bool plane_common_factor_free(const std::vector<Poly>& gens) {
  for (const auto& g : gens)
    if (!g.constant_term().is_zero()) return true;
  if (gens.empty()) return false;
  Poly common = gens.front();
  for (std::size_t k = 1; k < gens.size() && common.total_degree() > 0; ++k) common = poly_gcd(common, gens[k]);
  return common.total_degree() == 0 || !common.constant_term().is_zero();
}

// Colength is upper semicontinuous in the parameters, so finiteness at one
// rational parameter value gives finiteness over Q(params). The gcd over Q is
// far cheaper than the one over Q(params).
bool isolated_at_sample(const IdealGens& ideal) {
  const auto& params = ideal.ring()->params;
  const RingPtr plain = make_ring(ideal.ring()->vars);
  for (long k = 0; k < 3; ++k) {
    std::map<std::string, Rational> at;
    for (std::size_t i = 0; i < params.size(); ++i) {
      Rational v(static_cast<long>(7 + 5 * i + 13 * k), static_cast<long>(11 + 3 * k));
      v.canonicalize();
      at[params[i]] = v;
    }
    std::vector<Poly> gens;
    try {
      for (const auto& g : ideal.generators) {
        Poly p = change_ring(specialize_params(g, at), plain);
        if (!p.is_zero()) gens.push_back(std::move(p));
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PoleAtAssignment) throw;
      continue;
    }
    if (plane_common_factor_free(gens)) return true;
  }
  return false;
}

std::optional<bool> plane_isolated(const IdealGens& ideal) {
  if (ideal.ring()->arity() != 2) return std::nullopt;
  if (!ideal.ring()->params.empty() && isolated_at_sample(ideal)) return true;
  return plane_common_factor_free(ideal.generators);
}

}  // namespace

StandardBasis standard_basis(const IdealGens& ideal, unsigned degree_cap) {
  StandardBasis b = best_standard_basis(ideal, degree_cap);
  if (!b.certified_finite())
    throw Error(ErrorKind::CapExceeded, "staircase not certified finite: " + staircase_summary(b));
  return b;
}

QuotientBasis quotient_basis(const StandardBasis& basis) {
  if (!basis.has_all_pure_powers())
    throw Error(ErrorKind::CapExceeded, "staircase is not finite: " + staircase_summary(basis));
  const std::size_t n = basis.ring->arity();
  std::array<unsigned, kMaxVars> bound{};
  for (std::size_t i = 0; i < n; ++i) {
    bound[i] = ~0u;
    for (const auto& e : basis.leading_exponents)
      if (e.degree() == e[i]) bound[i] = std::min<unsigned>(bound[i], e[i]);
  }
  if (basis.modulus_degree > 0)
    for (std::size_t i = 0; i < n; ++i) bound[i] = std::min(bound[i], basis.modulus_degree);
  QuotientBasis out;
  if (std::any_of(bound.begin(), bound.begin() + static_cast<std::ptrdiff_t>(n), [](unsigned b) { return b == 0; }))
    return out;
  ExpVec e;
  while (true) {
    bool standard = (basis.modulus_degree == 0 || e.degree() < basis.modulus_degree) &&
                    std::none_of(basis.leading_exponents.begin(), basis.leading_exponents.end(),
                                 [&](const ExpVec& l) { return l.divides(e); });
    if (standard) out.standard_monomials.push_back(e);
    std::size_t i = 0;
    while (i < n) {
      if (++e[i] < bound[i]) break;
      e[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.standard_monomials.begin(), out.standard_monomials.end(),
            [](const ExpVec& a, const ExpVec& b) { return local_greater(a, b); });
  return out;
}

Multiplicity colength(const IdealGens& ideal, const LocalOptions& options) {
  const bool plane = ideal.ring()->arity() == 2;
  // Small staircases certify quickly; the gcd test is only needed beyond.
  unsigned d = kFirstModulus;
  if (plane) {
    for (; d <= std::min(kEarlyModulus, options.degree_cap + 1); ++d) {
      StandardBasis b = standard_basis_unchecked(ideal, options.degree_cap, d);
      if (b.certified_finite()) return quotient_basis(b).colength();
    }
  }
  if (auto isolated = plane_isolated(ideal)) {
    if (!*isolated) return Multiplicity::infinite();
    // Finite, so some truncation degree certifies it.
    for (; d <= (1u << 12); ++d) {
      StandardBasis b = standard_basis_unchecked(ideal, std::max(options.degree_cap, d), d);
      if (b.certified_finite()) return quotient_basis(b).colength();
    }
    throw Error(ErrorKind::CapExceeded, "colength exceeds every truncation degree tried");
  }
  for (d = kFirstModulus; d <= options.degree_cap + 1; ++d) {
    StandardBasis b = standard_basis_unchecked(ideal, options.degree_cap, d);
    if (b.certified_finite()) return quotient_basis(b).colength();
  }
  StandardBasis b = standard_basis_unchecked(ideal, options.degree_cap);
  if (!b.truncated) {
    if (b.has_all_pure_powers()) return quotient_basis(b).colength();
    return Multiplicity::infinite();
  }
  if (b.certified_finite()) return quotient_basis(b).colength();
  if (!b.has_all_pure_powers()) {
    // Free coordinate ray at the cap; accept it when one more degree changes
    // nothing.
    StandardBasis next = standard_basis_unchecked(ideal, options.degree_cap + 1);
    if (!next.has_all_pure_powers() && next.leading_exponents == b.leading_exponents)
      return Multiplicity::infinite();
  }
  throw Error(ErrorKind::CapExceeded, "colength undecided: " + staircase_summary(b));
}

// ---------------------------------------------------------------------------
// Jets

namespace {

template <class F>
F to_field(const ParamRatio& c);
template <>
Rational to_field<Rational>(const ParamRatio& c) {
  return c.rational();
}
template <>
ParamRatio to_field<ParamRatio>(const ParamRatio& c) {
  return c;
}

bool all_rational(const std::vector<Poly>& gens) {
  return std::all_of(gens.begin(), gens.end(), [](const Poly& p) { return p.has_rational_coefficients(); });
}

template <class F>
std::size_t jet_dimension_over(const IdealGens& ideal, unsigned cap) {
  const std::size_t n = ideal.ring()->arity();
  std::vector<ExpVec> monos = monomials_below(n, cap);
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);

  Echelon<F> ech;
  for (const auto& g : ideal.generators) {
    const unsigned o = *g.order();
    if (o >= cap) continue;
    std::vector<std::pair<ExpVec, F>> terms;
    for (const auto& [e, c] : g.terms())
      if (e.degree() < cap) terms.emplace_back(e, to_field<F>(c));
    for (const auto& t : monos) {
      if (t.degree() + o >= cap) continue;
      typename Echelon<F>::Vec v;
      for (const auto& [e, c] : terms) {
        ExpVec p = e + t;
        if (p.degree() < cap) v.emplace(index.at(p), c);
      }
      ech.insert(std::move(v));
      if (ech.rank() == monos.size()) return 0;
    }
  }
  return monos.size() - ech.rank();
}

}  // namespace

std::size_t jet_quotient_dimension(const IdealGens& ideal, unsigned cap) {
  if (all_rational(ideal.generators)) return jet_dimension_over<Rational>(ideal, cap);
  return jet_dimension_over<ParamRatio>(ideal, cap);
}

std::size_t jet_colength(const IdealGens& ideal, unsigned cap) {
  if (cap < 1) throw Error(ErrorKind::NotStabilized, "jet cap must be at least 1");
  std::size_t here = jet_quotient_dimension(ideal, cap);
  std::size_t next = jet_quotient_dimension(ideal, cap + 1);
  if (here != next)
    throw Error(ErrorKind::NotStabilized, "jet dimension " + std::to_string(here) + " at cap " + std::to_string(cap) +
                                              " grows to " + std::to_string(next) + " at cap " +
                                              std::to_string(cap + 1));
  return here;
}

std::size_t jet_colength_search(const IdealGens& ideal, unsigned max_cap, unsigned* cap_used) {
  if (max_cap < 1) throw Error(ErrorKind::NotStabilized, "jet cap must be at least 1");
  std::size_t prev = jet_quotient_dimension(ideal, 1);
  for (unsigned c = 1; c <= max_cap; ++c) {
    std::size_t next = jet_quotient_dimension(ideal, c + 1);
    if (next == prev) {
      if (cap_used) *cap_used = c;
      return prev;
    }
    prev = next;
  }
  throw Error(ErrorKind::NotStabilized, "jet dimension still growing at cap " + std::to_string(max_cap) + " (" +
                                            std::to_string(prev) + " at cap " + std::to_string(max_cap + 1) + ")");
}

// ---------------------------------------------------------------------------
// Gcd and exact division in Q(params)[vars]

namespace {

// Variables of the MPoly image: parameters first, then main variables.
MPoly to_cleared_mpoly(const Poly& p) {
  const std::size_t np = p.ring().params.size();
  MPoly den(Rational(1));
  for (const auto& [e, c] : p.terms()) {
    MPoly d = c.denominator();
    if (d.is_one()) continue;
    MPoly g = gcd(den, d);
    den = *divide_exact(den * d, g);
  }
  MPoly out;
  for (const auto& [e, c] : p.terms()) {
    ExpVec shift;
    for (std::size_t i = 0; i < p.ring().arity(); ++i) shift[np + i] = e[i];
    MPoly scale = *divide_exact(den, c.denominator());
    out += (c.numerator() * scale).shifted(shift);
  }
  return out;
}

Poly from_cleared_mpoly(const MPoly& m, const RingPtr& ring) {
  const std::size_t np = ring->params.size();
  std::map<ExpVec, MPoly> grouped;
  for (const auto& [e, c] : m.terms()) {
    ExpVec var_part, param_part;
    for (std::size_t i = 0; i < np; ++i) param_part[i] = e[i];
    for (std::size_t i = 0; i < ring->arity(); ++i) var_part[i] = e[np + i];
    grouped[var_part] += MPoly::monomial(param_part, c);
  }
  Poly out(ring);
  for (const auto& [e, c] : grouped) out.add_term(e, ParamRatio::polynomial(c));
  return out;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (!(a.ring() == b.ring())) throw Error(ErrorKind::ArityMismatch, "gcd of polynomials in different rings");
  MPoly g = gcd(to_cleared_mpoly(a), to_cleared_mpoly(b));
  // Drop the factor that involves parameters only: it is a unit.
  Poly out = from_cleared_mpoly(g, a.ring_ptr());
  if (out.is_zero()) return out;
  return out.scaled(out.terms().begin()->second.inverse());
}

std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  Poly q(a.ring_ptr()), r = a;
  const auto& [eb, cb] = *b.terms().begin();
  while (!r.is_zero()) {
    const auto [er, cr] = *r.terms().begin();
    if (!eb.divides(er)) return std::nullopt;
    Poly t = Poly::monomial(a.ring_ptr(), er - eb, cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

template <class F>
using YPoly = UPoly<F>;
// Coefficients in x (index = power of x), each a polynomial in y.
template <class F>
using XPoly = std::vector<YPoly<F>>;

template <class F>
void trim(XPoly<F>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class F>
XPoly<F> to_xpoly(const Poly& p) {
  std::vector<std::vector<F>> dense;
  for (const auto& [e, c] : p.terms()) {
    if (dense.size() <= e[0]) dense.resize(e[0] + 1);
    auto& col = dense[e[0]];
    if (col.size() <= e[1]) col.resize(e[1] + 1, F(0L));
    col[e[1]] = to_field<F>(c);
  }
  XPoly<F> out;
  for (auto& col : dense) out.emplace_back(std::move(col));
  trim(out);
  return out;
}

template <class F>
YPoly<F> ypow(const YPoly<F>& b, int k) {
  YPoly<F> r = YPoly<F>::constant(F(1L));
  for (int i = 0; i < k; ++i) r = r * b;
  return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with the exact power.
template <class F>
XPoly<F> pseudo_remainder(XPoly<F> a, const XPoly<F>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int e = static_cast<int>(a.size()) - 1 - db + 1;
  const YPoly<F>& lb = b.back();
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const std::size_t k = a.size() - 1 - static_cast<std::size_t>(db);
    YPoly<F> la = a.back();
    for (auto& c : a) c = c * lb;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + k] = a[i + k] - la * b[i];
    trim(a);
    --e;
  }
  if (e > 0) {
    YPoly<F> scale = ypow(lb, e);
    for (auto& c : a) c = c * scale;
  }
  return a;
}

// Subresultant PRS resultant over F[y] (contents not removed).
template <class F>
YPoly<F> resultant_x(XPoly<F> a, XPoly<F> b) {
  if (a.empty() || b.empty()) return {};
  auto deg = [](const XPoly<F>& p) { return static_cast<int>(p.size()) - 1; };
  F sign(1L);
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
  }
  if (deg(b) == 0) return ypow(b[0], deg(a)).scaled(sign);
  YPoly<F> g = YPoly<F>::constant(F(1L));
  YPoly<F> h = g;
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    XPoly<F> r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    YPoly<F> divisor = g * ypow(h, delta);
    for (auto& c : r) c = exact_quotient(c, divisor);
    b = std::move(r);
    g = a.back();
    if (delta > 0) h = exact_quotient(ypow(g, delta), ypow(h, delta - 1));
    if (deg(b) == 0) break;
  }
  h = exact_quotient(ypow(b.back(), deg(a)), ypow(h, deg(a) - 1));
  return h.scaled(sign);
}

template <class F>
std::optional<std::size_t> order_after_change(const Poly& p, const Poly& q) {
  XPoly<F> a = to_xpoly<F>(p), b = to_xpoly<F>(q);
  if (a.empty() || b.empty()) return std::nullopt;
  if (field_is_zero(a.back().coeff(0)) || field_is_zero(b.back().coeff(0))) return std::nullopt;
  std::vector<F> a0, b0;
  for (const auto& c : a) a0.push_back(c.coeff(0));
  for (const auto& c : b) b0.push_back(c.coeff(0));
  UPoly<F> common = gcd(UPoly<F>(a0), UPoly<F>(b0));
  if (common.low_degree() != static_cast<std::size_t>(common.degree())) return std::nullopt;
  YPoly<F> res = resultant_x(std::move(a), std::move(b));
  if (res.is_zero()) throw Error(ErrorKind::NonIsolated, "resultant of the partial derivatives vanishes identically");
  return res.low_degree();
}

}  // namespace

std::size_t resultant_mu(const Poly& f, std::uint64_t seed) {
  if (f.ring().arity() != 2)
    throw Error(ErrorKind::ArityUnsupported, "the resultant method needs exactly two variables");
  auto grad = gradient(f);
  Poly p = grad[0], q = grad[1];
  if (!p.constant_term().is_zero() || !q.constant_term().is_zero()) return 0;
  if (p.is_zero() || q.is_zero())
    throw Error(ErrorKind::NonIsolated, "a partial derivative vanishes identically");

  Poly common = poly_gcd(p, q);
  if (common.total_degree() > 0) {
    if (common.constant_term().is_zero())
      throw Error(ErrorKind::NonIsolated, "the partial derivatives share the component " + common.to_string() +
                                              " through the origin");
    p = *poly_divide_exact(p, common);
    q = *poly_divide_exact(q, common);
  }

  const RingPtr& ring = f.ring_ptr();
  const bool rational = p.has_rational_coefficients() && q.has_rational_coefficients();
  Poly x = Poly::symbol(ring, ring->vars[0]), y = Poly::symbol(ring, ring->vars[1]);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<std::array<int, 4>> used;
  std::vector<std::size_t> values;
  for (int attempt = 0; values.size() < 2; ++attempt) {
    if (attempt == 256)
      throw Error(ErrorKind::OracleDisagreement, "no transversal coordinate change found in 256 draws");
    std::array<int, 4> m{entry(rng), entry(rng), entry(rng), entry(rng)};
    const int det = m[0] * m[3] - m[1] * m[2];
    if ((det != 1 && det != -1) || std::find(used.begin(), used.end(), m) != used.end()) continue;
    std::map<std::string, Poly> images{
        {ring->vars[0], x.scaled(ParamRatio(long{m[0]})) + y.scaled(ParamRatio(long{m[1]}))},
        {ring->vars[1], x.scaled(ParamRatio(long{m[2]})) + y.scaled(ParamRatio(long{m[3]}))}};
    Poly pl = substitute(p, images), ql = substitute(q, images);
    auto ord = rational ? order_after_change<Rational>(pl, ql) : order_after_change<ParamRatio>(pl, ql);
    if (!ord) continue;  // not transversal, draw again
    used.push_back(m);
    values.push_back(*ord);
  }
  if (values[0] != values[1])
    throw Error(ErrorKind::OracleDisagreement, "resultant orders disagree: " + std::to_string(values[0]) + " vs " +
                                                   std::to_string(values[1]));
  return values[0];
}

// ---------------------------------------------------------------------------
// Milnor numbers

std::string_view method_name(MilnorMethod m) {
  switch (m) {
    case MilnorMethod::standard_basis: return "standard_basis";
    case MilnorMethod::jets: return "jets";
    case MilnorMethod::resultant: return "resultant";
    case MilnorMethod::all: return "all";
  }
  return "?";
}

MilnorMethod parse_method(std::string_view name) {
  for (auto m : {MilnorMethod::standard_basis, MilnorMethod::jets, MilnorMethod::resultant, MilnorMethod::all})
    if (method_name(m) == name) return m;
  throw Error(ErrorKind::SyntaxError, "unknown method '" + std::string(name) +
                                          "' (expected standard_basis, jets, resultant or all)");
}

namespace {

void require_vanishing(const Poly& f) {
  if (!f.constant_term().is_zero())
    throw Error(ErrorKind::NonzeroAtOrigin, "germ does not vanish at the origin: f(0) = " +
                                                f.constant_term().to_string(f.ring().params));
}

Multiplicity resultant_multiplicity(const Poly& f, std::uint64_t seed) {
  try {
    return resultant_mu(f, seed);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIsolated) return Multiplicity::infinite();
    throw;
  }
}

}  // namespace

MilnorReport milnor_report(const Poly& f, MilnorMethod method, const LocalOptions& options) {
  require_vanishing(f);
  const IdealGens jac = IdealGens::jacobian(f);
  MilnorReport out;
  switch (method) {
    case MilnorMethod::standard_basis:
      out.value = colength(jac, options);
      break;
    case MilnorMethod::jets:
      out.value = jet_colength_search(jac, options.jet_cap, &out.jet_cap_used);
      break;
    case MilnorMethod::resultant:
      out.value = resultant_multiplicity(f, options.seed);
      break;
    case MilnorMethod::all: {
      out.value = colength(jac, options);
      out.per_method.emplace("standard_basis", out.value);
      if (out.value.is_finite()) {
        out.per_method.emplace("jets", jet_colength_search(jac, options.jet_cap, &out.jet_cap_used));
      } else {
        // An infinite colength never stabilises; one window is the check.
        out.jet_cap_used = options.jet_cap;
        std::size_t here = jet_quotient_dimension(jac, options.jet_cap);
        bool grows = here != jet_quotient_dimension(jac, options.jet_cap + 1);
        out.per_method.emplace("jets", grows ? Multiplicity::infinite() : Multiplicity(here));
      }
      if (f.ring().arity() == 2) out.per_method.emplace("resultant", resultant_multiplicity(f, options.seed));
      for (const auto& [name, v] : out.per_method) {
        if (v == out.value) continue;
        std::string msg = "methods disagree:";
        for (const auto& [n2, v2] : out.per_method) msg += " " + n2 + "=" + v2.to_string();
        throw Error(ErrorKind::OracleDisagreement, msg);
      }
      return out;
    }
  }
  out.per_method.emplace(std::string(method_name(method)), out.value);
  return out;
}

Multiplicity milnor(const Poly& f, MilnorMethod method, const LocalOptions& options) {
  return milnor_report(f, method, options).value;
}

// ---------------------------------------------------------------------------
// Local quotients

LocalQuotient::LocalQuotient(StandardBasis basis) : basis_(std::move(basis)) {
  if (!basis_.certified_finite()) {
    if (!basis_.truncated && basis_.modulus_degree == 0)
      throw Error(ErrorKind::NonIsolated, "the local quotient is infinite-dimensional: " + staircase_summary(basis_));
    throw Error(ErrorKind::CapExceeded, "staircase not certified finite: " + staircase_summary(basis_));
  }
  staircase_ = quotient_basis(basis_).standard_monomials;
  for (std::size_t k = 0; k < staircase_.size(); ++k) staircase_index_.emplace(staircase_[k], k);
  for (const auto& e : staircase_) nil_degree_ = std::max(nil_degree_, e.degree() + 1);
  for (const auto& el : basis_.elements) {
    LPoly p = make_monic(to_local(el));
    std::vector<std::pair<ExpVec, ParamRatio>> r;
    for (auto& t : p) r.emplace_back(t.e, std::move(t.c));
    reducers_.push_back(std::move(r));
  }

  candidates_ = monomials_below(basis_.ring->arity(), nil_degree_);
  std::stable_sort(candidates_.begin(), candidates_.end(), [](const ExpVec& a, const ExpVec& b) {
    return std::pair(a.degree(), a.max_exponent()) < std::pair(b.degree(), b.max_exponent());
  });
  for (const auto& c : candidates_) {
    if (preferred_.size() == staircase_.size()) break;
    if (preferred_echelon_.insert(staircase_coordinates(Poly::monomial(basis_.ring, c)), preferred_.size()))
      preferred_.push_back(c);
  }
}

Echelon<ParamRatio>::Vec LocalQuotient::staircase_coordinates(const Poly& g) const {
  auto cmp = [](const ExpVec& a, const ExpVec& b) { return local_greater(a, b); };
  std::map<ExpVec, ParamRatio, decltype(cmp)> work(cmp);
  for (const auto& [e, c] : g.terms())
    if (e.degree() < nil_degree_) work.emplace(e, c);
  Echelon<ParamRatio>::Vec coords;
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const ExpVec& e = node.key();
    const ParamRatio& c = node.mapped();
    if (auto it = staircase_index_.find(e); it != staircase_index_.end()) {
      coords.emplace(it->second, c);
      continue;
    }
    const auto& r = *std::find_if(reducers_.begin(), reducers_.end(),
                                  [&](const auto& red) { return red.front().first.divides(e); });
    const ExpVec m = e - r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) {
      ExpVec t = r[k].first + m;
      if (t.degree() >= nil_degree_) continue;
      auto [pos, inserted] = work.try_emplace(t, ParamRatio(0L));
      pos->second -= c * r[k].second;
      if (pos->second.is_zero()) work.erase(pos);
    }
  }
  return coords;
}

Poly LocalQuotient::normal_form(const Poly& g) const {
  auto reduced = preferred_echelon_.reduce(staircase_coordinates(g));
  if (!reduced.residual.empty()) throw std::logic_error("preferred basis does not span the local quotient");
  Poly out(basis_.ring);
  for (const auto& [id, c] : reduced.combination) out.add_term(preferred_[id], c);
  return out;
}

std::vector<ExpVec> versal_basis(const Poly& f, const LocalOptions& options) {
  require_vanishing(f);
  LocalQuotient q(best_standard_basis(IdealGens::maximal_times_jacobian(f), options.degree_cap));
  std::vector<ExpVec> out;
  for (const auto& e : q.monomial_basis())
    if (!e.is_zero()) out.push_back(e);
  return out;
}

Reduction local_reduce(const Poly& g, const StandardBasis& basis, bool with_certificate) {
  if (!(g.ring() == *basis.ring)) throw Error(ErrorKind::ArityMismatch, "polynomial and basis live in different rings");
  LocalQuotient q(basis);
  Reduction out{q.normal_form(g), {}, q.nilpotency_degree()};
  if (!with_certificate) return out;

  out.cap = std::max({q.nilpotency_degree(), g.total_degree() + 1, out.normal_form.total_degree() + 1});
  const auto& elems = basis.elements;
  const std::size_t n = basis.ring->arity();
  std::vector<ExpVec> monos = monomials_below(n, out.cap);
  std::stable_sort(monos.begin(), monos.end(), [](const ExpVec& a, const ExpVec& b) { return a.degree() < b.degree(); });
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> index;
  for (std::size_t k = 0; k < monos.size(); ++k) index.emplace(monos[k], k);
  auto vec_of = [&](const Poly& p) {
    Echelon<ParamRatio>::Vec v;
    for (const auto& [e, c] : p.terms())
      if (e.degree() < out.cap) v.emplace(index.at(e), c);
    return v;
  };

  // Columns t * b_i, low-degree multipliers first.
  std::vector<std::pair<std::size_t, ExpVec>> columns;
  Echelon<ParamRatio> ech(true);
  for (const auto& t : monos)
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (t.degree() + *elems[i].order() >= out.cap) continue;
      if (ech.insert(vec_of(elems[i].shifted(t)), columns.size())) columns.emplace_back(i, t);
    }
  auto solved = ech.reduce(vec_of(g - out.normal_form));
  if (!solved.residual.empty()) throw std::logic_error("membership certificate not found below the cap");
  out.cofactors.assign(elems.size(), Poly(basis.ring));
  for (const auto& [col, c] : solved.combination) out.cofactors[columns[col].first].add_term(columns[col].second, c);
  return out;
}

}  // namespace milnorkit
