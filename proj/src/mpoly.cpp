#include "milnorkit/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "milnorkit/errors.hpp"

namespace milnorkit {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw Error(ErrorKind::SyntaxError, "not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(ExpVec{}, c);
  if (!terms_.empty()) terms_.back().second.canonicalize();
}

MPoly MPoly::variable(std::size_t index) { return monomial(ExpVec::unit(index), Rational(1)); }

MPoly MPoly::monomial(const ExpVec& exps, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace_back(exps, c);
  if (!p.terms_.empty()) p.terms_.back().second.canonicalize();
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  for (auto& t : terms) t.second.canonicalize();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_greater(a.first, b.first); });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
    } else {
      if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().second == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_zero() && terms_[0].second == 1;
}

Rational MPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().first.is_zero()) return terms_.back().second;
  return Rational(0);
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().first.degree(); }

unsigned MPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first[var]);
  return d;
}

unsigned MPoly::low_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = terms_.front().first[var];
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.first[var]);
  return d;
}

int MPoly::highest_var() const {
  int v = -1;
  for (const auto& t : terms_)
    for (std::size_t i = kMaxVars; i-- > 0;)
      if (t.first[i] > 0) {
        v = std::max(v, static_cast<int>(i));
        break;
      }
  return v;
}

std::vector<MPoly> MPoly::coefficients_in(std::size_t var) const {
  std::vector<std::vector<Term>> buckets(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    ExpVec r = e;
    r[var] = 0;
    buckets[e[var]].emplace_back(r, c);
  }
  std::vector<MPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) {
    // Removing one coordinate keeps the grlex order of a bucket only up to
    // ties, so re-sort.
    out.push_back(from_terms(std::move(b)));
  }
  if (terms_.empty()) out.clear();
  return out;
}

MPoly MPoly::from_coefficients(std::size_t var, const std::vector<MPoly>& coeffs) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& [e, c] : coeffs[k].terms_) {
      ExpVec r = e;
      r[var] = static_cast<std::uint16_t>(r[var] + k);
      terms.emplace_back(r, c);
    }
  return from_terms(std::move(terms));
}

MPoly MPoly::eval(std::size_t var, const Rational& value) const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Rational f = c;
    if (e[var] > 0) {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e[var]);
      mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e[var]);
      f *= Rational(num, den);
    }
    ExpVec r = e;
    r[var] = 0;
    terms.emplace_back(r, f);
  }
  return from_terms(std::move(terms));
}

MPoly MPoly::monic() const {
  if (terms_.empty() || leading_coeff() == 1) return *this;
  Rational inv = 1 / leading_coeff();
  return scaled(inv);
}

MPoly MPoly::scaled(const Rational& c) const {
  if (c == 0) return MPoly{};
  MPoly p = *this;
  for (auto& t : p.terms_) t.second *= c;
  return p;
}

MPoly MPoly::shifted(const ExpVec& mono) const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.first = t.first + mono;
  return p;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

namespace {

template <class Combine>
std::vector<MPoly::Term> merge_terms(const std::vector<MPoly::Term>& a,
                                     const std::vector<MPoly::Term>& b, Combine combine_b) {
  std::vector<MPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_greater(a[i].first, b[j].first))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || grlex_greater(b[j].first, a[i].first)) {
      out.emplace_back(b[j].first, combine_b(b[j].second));
      ++j;
    } else {
      Rational c = a[i].second + combine_b(b[j].second);
      if (c != 0) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return c; });
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly{};
  if (b.is_constant()) return a.scaled(b.terms_[0].second);
  if (a.is_constant()) return b.scaled(a.terms_[0].second);
  std::vector<MPoly::Term> terms;
  terms.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) terms.emplace_back(ea + eb, ca * cb);
  return MPoly::from_terms(std::move(terms));
}

std::size_t MPoly::hash() const {
  std::size_t h = terms_.size();
  ExpVecHash eh;
  for (const auto& [e, c] : terms_) {
    h = h * 31 + eh(e);
    h = h * 31 + mpz_get_ui(c.get_num_mpz_t()) + 7 * mpz_get_ui(c.get_den_mpz_t());
  }
  return h;
}

std::string MPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? "-" : "+");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || e.is_zero()) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  if (a.is_zero()) return MPoly{};
  if (b.is_constant()) return a.scaled(1 / b.leading_coeff());
  std::vector<MPoly::Term> quotient;
  MPoly r = a;
  const ExpVec& lb = b.leading_exp();
  Rational inv_lb = 1 / b.leading_coeff();
  while (!r.is_zero()) {
    const ExpVec& lr = r.leading_exp();
    if (!lb.divides(lr)) return std::nullopt;
    ExpVec m = lr - lb;
    Rational c = r.leading_coeff() * inv_lb;
    quotient.emplace_back(m, c);
    r -= b.shifted(m).scaled(c);
  }
  return MPoly::from_terms(std::move(quotient));
}

namespace {

MPoly content_in(const MPoly& a, std::size_t var) {
  MPoly g;
  for (const auto& c : a.coefficients_in(var)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly primitive_in(const MPoly& a, std::size_t var) {
  MPoly c = content_in(a, var);
  return divide_exact(a, c)->monic();
}

// lc(b)^k * r reduced modulo b, as coefficient lists in one variable.
std::vector<MPoly> pseudo_remainder(std::vector<MPoly> r, const std::vector<MPoly>& b) {
  const std::size_t db = b.size() - 1;
  const MPoly& lb = b.back();
  while (!r.empty() && r.size() - 1 >= db) {
    MPoly lr = r.back();
    std::size_t shift = r.size() - 1 - db;
    for (auto& c : r) c = c * lb;
    for (std::size_t k = 0; k <= db; ++k) r[k + shift] -= lr * b[k];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return r;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(Rational(1));
  if (a == b) return a.monic();

  const std::size_t v = static_cast<std::size_t>(std::max(a.highest_var(), b.highest_var()));
  if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly g = gcd(ca, cb);
  std::vector<MPoly> pa = divide_exact(a, ca)->monic().coefficients_in(v);
  std::vector<MPoly> pb = divide_exact(b, cb)->monic().coefficients_in(v);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    std::vector<MPoly> r = pseudo_remainder(pa, pb);
    pa = std::move(pb);
    if (r.empty()) {
      pb.clear();
      break;
    }
    pb = primitive_in(MPoly::from_coefficients(v, r), v).coefficients_in(v);
  }
  MPoly h = primitive_in(MPoly::from_coefficients(v, pa), v);
  return (g * h).monic();
}

}  // namespace milnorkit
