#include "milnorkit/poly.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "milnorkit/errors.hpp"

namespace milnorkit {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

int index_of(const std::vector<std::string>& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace

int Ring::var_index(std::string_view name) const { return index_of(vars, name); }
int Ring::param_index(std::string_view name) const { return index_of(params, name); }

RingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> params) {
  if (vars.empty() || vars.size() > kMaxArity)
    throw Error(ErrorKind::ArityUnsupported,
                "number of variables must be between 1 and " + std::to_string(kMaxArity));
  if (params.size() > kMaxVars - kMaxArity)
    throw Error(ErrorKind::ArityUnsupported, "too many parameters (at most 4)");
  std::set<std::string> seen;
  for (const auto* list : {&vars, &params})
    for (const auto& n : *list) {
      if (!is_identifier(n)) throw Error(ErrorKind::SyntaxError, "invalid symbol name '" + n + "'");
      if (!seen.insert(n).second) throw Error(ErrorKind::SyntaxError, "symbol '" + n + "' declared twice");
    }
  return std::make_shared<const Ring>(Ring{std::move(vars), std::move(params)});
}

Poly Poly::constant(RingPtr ring, const ParamRatio& c) {
  Poly p(std::move(ring));
  p.add_term(ExpVec{}, c);
  return p;
}

Poly Poly::monomial(RingPtr ring, const ExpVec& exps, const ParamRatio& c) {
  Poly p(std::move(ring));
  p.add_term(exps, c);
  return p;
}

Poly Poly::symbol(RingPtr ring, std::string_view name) {
  int v = ring->var_index(name);
  if (v >= 0) return monomial(ring, ExpVec::unit(static_cast<std::size_t>(v)));
  int a = ring->param_index(name);
  if (a >= 0) return constant(ring, ParamRatio::parameter(static_cast<std::size_t>(a)));
  throw Error(ErrorKind::UnknownSymbol, "unknown symbol '" + std::string(name) + "'");
}

ParamRatio Poly::coefficient(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? ParamRatio{} : it->second;
}

void Poly::add_term(const ExpVec& exps, const ParamRatio& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

std::optional<unsigned> Poly::order() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

std::vector<ExpVec> Poly::support() const {
  std::vector<ExpVec> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

bool Poly::has_rational_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_rational()) return false;
  return true;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_))
    throw Error(ErrorKind::ArityMismatch, "polynomials belong to different rings");
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.ring_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Poly Poly::scaled(const ParamRatio& c) const {
  Poly p(ring_);
  if (c.is_zero()) return p;
  for (const auto& [e, k] : terms_) p.terms_.emplace_hint(p.terms_.end(), e, k * c);
  return p;
}

Poly Poly::shifted(const ExpVec& mono) const {
  Poly p(ring_);
  for (const auto& [e, k] : terms_) p.terms_.emplace(e + mono, k);
  return p;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(ring_, ParamRatio(1L));
  Poly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::truncated(unsigned bound) const {
  Poly p(ring_);
  for (const auto& [e, c] : terms_)
    if (e.degree() < bound) p.terms_.emplace(e, c);
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (!(a.ring_ == b.ring_ || *a.ring_ == *b.ring_)) return false;
  return a.terms_ == b.terms_;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    // Split off a leading sign when the coefficient is a signed monomial.
    bool neg = false;
    ParamRatio mag = c;
    if (c.is_rational()) {
      neg = c.rational() < 0;
    } else {
      MPoly n = c.numerator();
      if (c.denominator().is_one() && n.size() == 1) neg = n.leading_coeff() < 0;
    }
    if (neg) mag = -c;
    os << (neg ? "-" : (first ? "" : "+"));
    first = false;

    bool atomic = false;
    std::string cs = mag.to_string(ring_->params, &atomic);
    bool wrote = false;
    if (!mag.is_one() || e.is_zero()) {
      os << (atomic || e.is_zero() ? cs : "(" + cs + ")");
      wrote = true;
    }
    for (std::size_t i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << ring_->vars[i];
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

nlohmann::json Poly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json exps = nlohmann::json::array();
    for (std::size_t i = 0; i < ring_->arity(); ++i) exps.push_back(e[i]);
    out.push_back({{"exps", exps}, {"coeff", c.to_string(ring_->params)}});
  }
  return out;
}

Poly Poly::from_json(RingPtr ring, const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::SyntaxError, "polynomial JSON must be a list of terms");
  Poly p(ring);
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff") || !t["exps"].is_array() ||
        !t["coeff"].is_string())
      throw Error(ErrorKind::SyntaxError, "polynomial term must be {exps: [int], coeff: string}");
    const auto& ex = t["exps"];
    if (ex.size() != ring->arity())
      throw Error(ErrorKind::ArityMismatch, "term arity does not match the ring");
    ExpVec e;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (!ex[i].is_number_integer()) throw Error(ErrorKind::SyntaxError, "exponent must be an integer");
      auto v = ex[i].get<long long>();
      if (v < 0) throw Error(ErrorKind::NegativeExponent, "negative exponent in JSON term");
      e[i] = static_cast<std::uint16_t>(v);
    }
    p.add_term(e, parse_scalar(t["coeff"].get<std::string>(), ring->params));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Poly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
    throw Error(kind, msg + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip_ws();
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Poly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        std::size_t at = pos_;
        Poly d = factor();
        if (d.total_degree() > 0) {
          pos_ = at;
          fail("division by a non-constant polynomial");
        }
        ParamRatio c = d.constant_term();
        if (c.is_zero()) {
          pos_ = at;
          fail("division by zero", ErrorKind::DivisionByZero);
        }
        acc = acc.scaled(c.inverse());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = primary();
    if (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') fail("negative exponent", ErrorKind::NegativeExponent);
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a non-negative integer exponent");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Poly primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)), 10);
      return Poly::constant(ring_, ParamRatio(Rational(n)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (ring_->var_index(name) < 0 && ring_->param_index(name) < 0) {
        pos_ = start;
        fail("unknown symbol '" + name + "'", ErrorKind::UnknownSymbol);
      }
      return Poly::symbol(ring_, name);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

ParamRatio parse_scalar(std::string_view text, const std::vector<std::string>& params) {
  // A scalar ring needs one main variable; pick a name that cannot clash.
  auto ring = std::make_shared<const Ring>(Ring{{"__scalar_var"}, params});
  Poly p = Parser(text, ring).parse();
  if (p.total_degree() > 0) throw Error(ErrorKind::SyntaxError, "scalar expected: '" + std::string(text) + "'");
  return p.constant_term();
}

Poly partial(const Poly& f, std::size_t var) {
  if (var >= f.ring().arity()) throw Error(ErrorKind::UnknownSymbol, "variable index out of range");
  Poly d(f.ring_ptr());
  for (const auto& [e, c] : f.terms()) {
    if (e[var] == 0) continue;
    ExpVec r = e;
    r[var] -= 1;
    d.add_term(r, c * ParamRatio(static_cast<long>(e[var])));
  }
  return d;
}

Poly partial(const Poly& f, std::string_view var) {
  int v = f.ring().var_index(var);
  if (v < 0) throw Error(ErrorKind::UnknownSymbol, "unknown variable '" + std::string(var) + "'");
  return partial(f, static_cast<std::size_t>(v));
}

Poly substitute(const Poly& f, const std::map<std::string, Poly>& images) {
  const Ring& ring = f.ring();
  std::vector<Poly> image(ring.arity(), Poly(f.ring_ptr()));
  for (std::size_t i = 0; i < ring.arity(); ++i)
    image[i] = Poly::monomial(f.ring_ptr(), ExpVec::unit(i));
  for (const auto& [name, img] : images) {
    int v = ring.var_index(name);
    if (v < 0) throw Error(ErrorKind::UnknownSymbol, "unknown variable '" + name + "' in substitution");
    if (!(img.ring() == ring)) throw Error(ErrorKind::ArityMismatch, "substitution image lives in another ring");
    image[static_cast<std::size_t>(v)] = img;
  }
  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(ring.arity());
  auto power = [&](std::size_t i, unsigned k) -> const Poly& {
    auto& list = powers[i];
    if (list.empty()) list.push_back(Poly::constant(f.ring_ptr(), ParamRatio(1L)));
    while (list.size() <= k) list.push_back(list.back() * image[i]);
    return list[k];
  };
  Poly out(f.ring_ptr());
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(f.ring_ptr(), c);
    for (std::size_t i = 0; i < ring.arity(); ++i)
      if (e[i] > 0) t *= power(i, e[i]);
    out += t;
  }
  return out;
}

Poly specialize_params(const Poly& f, const std::map<std::string, Rational>& values) {
  std::map<std::size_t, Rational> assignment;
  for (const auto& [name, q] : values) {
    int a = f.ring().param_index(name);
    if (a < 0) throw Error(ErrorKind::UnknownSymbol, "unknown parameter '" + name + "'");
    assignment[static_cast<std::size_t>(a)] = q;
  }
  Poly out(f.ring_ptr());
  for (const auto& [e, c] : f.terms()) out.add_term(e, c.specialize(assignment));
  return out;
}

Poly change_ring(const Poly& f, const RingPtr& target) {
  const Ring& src = f.ring();
  if (src == *target) {
    Poly p(target);
    for (const auto& [e, c] : f.terms()) p.add_term(e, c);
    return p;
  }
  std::vector<int> var_map(src.arity(), -1), param_map(src.params.size(), -1);
  for (std::size_t i = 0; i < src.arity(); ++i) var_map[i] = target->var_index(src.vars[i]);
  for (std::size_t i = 0; i < src.params.size(); ++i) param_map[i] = target->param_index(src.params[i]);
  Poly out(target);
  for (const auto& [e, c] : f.terms()) {
    ExpVec r;
    for (std::size_t i = 0; i < src.arity(); ++i) {
      if (e[i] == 0) continue;
      if (var_map[i] < 0)
        throw Error(ErrorKind::UnknownSymbol, "variable '" + src.vars[i] + "' missing in target ring");
      r[static_cast<std::size_t>(var_map[i])] = e[i];
    }
    for (std::size_t a : c.parameters_used())
      if (param_map[a] < 0)
        throw Error(ErrorKind::UnknownSymbol, "parameter '" + src.params[a] + "' missing in target ring");
    out.add_term(r, c.remap(param_map));
  }
  return out;
}

std::vector<Poly> gradient(const Poly& f) {
  std::vector<Poly> g;
  for (std::size_t i = 0; i < f.ring().arity(); ++i) g.push_back(partial(f, i));
  return g;
}

}  // namespace milnorkit
