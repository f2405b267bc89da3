#include "milnorkit/param_ratio.hpp"

#include <set>

#include "milnorkit/errors.hpp"

namespace milnorkit {

ParamRatio ParamRatio::fraction(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (num.is_zero()) return ParamRatio{};
  if (den.is_constant()) {
    if (num.is_constant()) return ParamRatio(num.leading_coeff() / den.leading_coeff());
    ParamRatio r;
    r.frac_ = std::make_shared<const Frac>(Frac{num.scaled(1 / den.leading_coeff()), MPoly(Rational(1))});
    return r;
  }
  MPoly g = gcd(num, den);
  MPoly n = *divide_exact(num, g);
  MPoly d = *divide_exact(den, g);
  Rational lc = d.leading_coeff();
  if (lc != 1) {
    Rational inv = 1 / lc;
    n = n.scaled(inv);
    d = d.scaled(inv);
  }
  if (d.is_constant() && n.is_constant()) return ParamRatio(n.leading_coeff());
  ParamRatio r;
  r.frac_ = std::make_shared<const Frac>(Frac{std::move(n), std::move(d)});
  return r;
}

MPoly ParamRatio::numerator() const { return frac_ ? frac_->num : MPoly(q_); }
MPoly ParamRatio::denominator() const { return frac_ ? frac_->den : MPoly(Rational(1)); }

ParamRatio ParamRatio::operator-() const {
  if (!frac_) return ParamRatio(Rational(-q_));
  ParamRatio r;
  r.frac_ = std::make_shared<const Frac>(Frac{-frac_->num, frac_->den});
  return r;
}

namespace {

bool den_is_one(const MPoly& d) { return d.is_one(); }

ParamRatio from_poly_unchecked(MPoly num) {
  // Denominator 1 is already canonical.
  return ParamRatio::fraction(num, MPoly(Rational(1)));
}

}  // namespace

ParamRatio operator+(const ParamRatio& a, const ParamRatio& b) {
  if (!a.frac_ && !b.frac_) return ParamRatio(Rational(a.q_ + b.q_));
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  MPoly an = a.numerator(), ad = a.denominator();
  MPoly bn = b.numerator(), bd = b.denominator();
  if (den_is_one(ad) && den_is_one(bd)) return from_poly_unchecked(an + bn);
  if (ad == bd) return ParamRatio::fraction(an + bn, ad);
  if (den_is_one(bd)) return ParamRatio::fraction(an + bn * ad, ad);  // still coprime to ad
  if (den_is_one(ad)) return ParamRatio::fraction(an * bd + bn, bd);
  MPoly g = gcd(ad, bd);
  MPoly ad_g = *divide_exact(ad, g);
  MPoly bd_g = *divide_exact(bd, g);
  return ParamRatio::fraction(an * bd_g + bn * ad_g, ad * bd_g);
}

ParamRatio operator-(const ParamRatio& a, const ParamRatio& b) { return a + (-b); }

ParamRatio operator*(const ParamRatio& a, const ParamRatio& b) {
  if (!a.frac_ && !b.frac_) return ParamRatio(Rational(a.q_ * b.q_));
  if (a.is_zero() || b.is_zero()) return ParamRatio{};
  if (!a.frac_ || !b.frac_) {
    const ParamRatio& p = a.frac_ ? a : b;
    const Rational& c = a.frac_ ? b.q_ : a.q_;
    if (c == 1) return p;
    ParamRatio r;
    r.frac_ = std::make_shared<const ParamRatio::Frac>(ParamRatio::Frac{p.frac_->num.scaled(c), p.frac_->den});
    return r;
  }
  const MPoly& an = a.frac_->num;
  const MPoly& ad = a.frac_->den;
  const MPoly& bn = b.frac_->num;
  const MPoly& bd = b.frac_->den;
  if (den_is_one(ad) && den_is_one(bd)) return from_poly_unchecked(an * bn);
  MPoly g1 = gcd(an, bd);
  MPoly g2 = gcd(bn, ad);
  MPoly n = *divide_exact(an, g1) * *divide_exact(bn, g2);
  MPoly d = *divide_exact(ad, g2) * *divide_exact(bd, g1);
  return ParamRatio::fraction(n, d);
}

ParamRatio ParamRatio::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!frac_) return ParamRatio(Rational(1 / q_));
  // num and den are already coprime: only the normalisation changes.
  Rational lc = frac_->num.leading_coeff();
  Rational inv = 1 / lc;
  MPoly n = frac_->den.scaled(inv);
  MPoly d = frac_->num.scaled(inv);
  if (d.is_constant() && n.is_constant()) return ParamRatio(n.leading_coeff());
  ParamRatio r;
  r.frac_ = std::make_shared<const Frac>(Frac{std::move(n), std::move(d)});
  return r;
}

ParamRatio operator/(const ParamRatio& a, const ParamRatio& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (!a.frac_ && !b.frac_) return ParamRatio(Rational(a.q_ / b.q_));
  return a * b.inverse();
}

ParamRatio ParamRatio::pow(unsigned k) const {
  ParamRatio result(1L);
  ParamRatio base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

bool operator==(const ParamRatio& a, const ParamRatio& b) {
  if (!a.frac_ && !b.frac_) return a.q_ == b.q_;
  if (!a.frac_ || !b.frac_) return false;
  if (a.frac_ == b.frac_) return true;
  return a.frac_->num == b.frac_->num && a.frac_->den == b.frac_->den;
}

ParamRatio ParamRatio::specialize(const std::map<std::size_t, Rational>& assignment) const {
  if (!frac_ || assignment.empty()) return *this;
  MPoly n = frac_->num;
  MPoly d = frac_->den;
  for (const auto& [idx, value] : assignment) {
    n = n.eval(idx, value);
    d = d.eval(idx, value);
  }
  if (d.is_zero()) throw Error(ErrorKind::PoleAtAssignment, "denominator vanishes under the assignment");
  return fraction(n, d);
}

ParamRatio ParamRatio::remap(const std::vector<int>& old_to_new) const {
  if (!frac_) return *this;
  auto remap_poly = [&](const MPoly& p) {
    std::vector<MPoly::Term> terms;
    for (const auto& [e, c] : p.terms()) {
      ExpVec r;
      for (std::size_t i = 0; i < kMaxVars; ++i) {
        if (e[i] == 0) continue;
        if (i >= old_to_new.size() || old_to_new[i] < 0)
          throw Error(ErrorKind::UnknownSymbol, "parameter has no slot in the target ring");
        r[static_cast<std::size_t>(old_to_new[i])] += e[i];
      }
      terms.emplace_back(r, c);
    }
    return MPoly::from_terms(std::move(terms));
  };
  return fraction(remap_poly(frac_->num), remap_poly(frac_->den));
}

std::vector<std::size_t> ParamRatio::parameters_used() const {
  std::set<std::size_t> used;
  if (frac_)
    for (const MPoly* p : {&frac_->num, &frac_->den})
      for (const auto& [e, c] : p->terms())
        for (std::size_t i = 0; i < kMaxVars; ++i)
          if (e[i] > 0) used.insert(i);
  return {used.begin(), used.end()};
}

std::size_t ParamRatio::hash() const {
  if (!frac_) return mpz_get_ui(q_.get_num_mpz_t()) * 1000003u + mpz_get_ui(q_.get_den_mpz_t());
  return frac_->num.hash() * 31 + frac_->den.hash();
}

std::string ParamRatio::to_string(const std::vector<std::string>& names, bool* atomic) const {
  auto single_factor = [](const MPoly& p) {
    // One term with coefficient 1 (a bare monomial) or a bare number.
    return p.size() == 1 && (p.leading_coeff() == 1 || p.leading_exp().is_zero());
  };
  if (!frac_) {
    if (atomic) *atomic = q_.get_den() == 1 && q_ >= 0;
    return q_.get_str();
  }
  const MPoly& n = frac_->num;
  const MPoly& d = frac_->den;
  std::string ns = n.to_string(names);
  if (d.is_one()) {
    if (atomic) *atomic = n.size() == 1 && n.leading_coeff() > 0;
    return ns;
  }
  if (atomic) *atomic = false;
  std::string out = n.size() == 1 ? ns : "(" + ns + ")";
  std::string ds = d.to_string(names);
  bool bare = d.size() == 1 && single_factor(d) &&
              (d.leading_exp().is_zero() || d.leading_exp().degree() == d.leading_exp().max_exponent());
  out += "/";
  out += bare ? ds : "(" + ds + ")";
  return out;
}

}  // namespace milnorkit
