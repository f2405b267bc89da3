#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "milnorkit/exp_vec.hpp"
#include "milnorkit/param_ratio.hpp"

namespace milnorkit {

inline constexpr std::size_t kMaxArity = 4;

/// Variable and parameter names of a polynomial ring Q(params)[vars].
struct Ring {
  std::vector<std::string> vars;
  std::vector<std::string> params;

  std::size_t arity() const { return vars.size(); }
  int var_index(std::string_view name) const;
  int param_index(std::string_view name) const;

  friend bool operator==(const Ring&, const Ring&) = default;
};

using RingPtr = std::shared_ptr<const Ring>;

/// Validates names (identifiers, no clashes) and arity 1..4.
RingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> params = {});

/// Sparse polynomial in the main variables with exact coefficients in
/// Q(params). Germs at the origin are represented by polynomial
/// representatives.
class Poly {
 public:
  using TermMap = std::map<ExpVec, ParamRatio, GrlexDesc>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  static Poly constant(RingPtr ring, const ParamRatio& c);
  static Poly monomial(RingPtr ring, const ExpVec& exps, const ParamRatio& c = ParamRatio(1L));
  /// A main variable, or a parameter as a constant polynomial.
  static Poly symbol(RingPtr ring, std::string_view name);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ParamRatio coefficient(const ExpVec& exps) const;
  ParamRatio constant_term() const { return coefficient(ExpVec{}); }
  void add_term(const ExpVec& exps, const ParamRatio& c);

  unsigned total_degree() const;
  /// Lowest total degree of a term; nullopt (infinity) for the zero polynomial.
  std::optional<unsigned> order() const;
  std::vector<ExpVec> support() const;
  /// True when every coefficient is a plain rational number.
  bool has_rational_coefficients() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const ParamRatio& c) const;
  Poly shifted(const ExpVec& mono) const;
  Poly pow(unsigned k) const;
  /// Terms of total degree < bound.
  Poly truncated(unsigned bound) const;

  friend bool operator==(const Poly& a, const Poly& b);

  std::string to_string() const;
  nlohmann::json to_json() const;
  static Poly from_json(RingPtr ring, const nlohmann::json& j);

 private:
  void check_ring(const Poly& o) const;

  RingPtr ring_;
  TermMap terms_;
};

/// Parses an expression over the ring: sums, products, integer powers,
/// parentheses, integer and p/q literals, and division by scalars.
Poly parse_poly(std::string_view text, const RingPtr& ring);
/// Parses a scalar in the parameter symbols, e.g. "-3/4*a^2*b".
ParamRatio parse_scalar(std::string_view text, const std::vector<std::string>& params);

Poly partial(const Poly& f, std::size_t var);
Poly partial(const Poly& f, std::string_view var);

/// Ring homomorphism sending each named variable to its image; unmapped
/// variables are fixed. Images must live in f's ring.
Poly substitute(const Poly& f, const std::map<std::string, Poly>& images);

/// Substitutes rational values for parameters (by name). The ring is kept.
Poly specialize_params(const Poly& f, const std::map<std::string, Rational>& values);

/// Re-expresses f in another ring, matching variables and parameters by name.
/// Throws UnknownSymbol if something f uses has no counterpart.
Poly change_ring(const Poly& f, const RingPtr& target);

/// The Jacobian ideal generators (df/dx_1, ..., df/dx_n).
std::vector<Poly> gradient(const Poly& f);

}  // namespace milnorkit
