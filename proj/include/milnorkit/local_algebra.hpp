#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "milnorkit/echelon.hpp"
#include "milnorkit/poly.hpp"

namespace milnorkit {

/// A colength or Milnor number: a natural number or infinity.
class Multiplicity {
 public:
  Multiplicity(std::size_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static Multiplicity infinite() { return Multiplicity(); }

  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const { return *value_; }
  std::string to_string() const { return value_ ? std::to_string(*value_) : "infinity"; }

  friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

 private:
  Multiplicity() = default;
  std::optional<std::size_t> value_;
};

/// Generators of an ideal of the local ring at the origin.
struct IdealGens {
  std::vector<Poly> generators;
  std::string tag;

  /// Drops zero generators; all must share one ring.
  explicit IdealGens(std::vector<Poly> gens, std::string tag = {});
  static IdealGens jacobian(const Poly& f);
  /// m * (df/dx_1, ..., df/dx_n), generated by x_i * df/dx_j.
  static IdealGens maximal_times_jacobian(const Poly& f);

  const RingPtr& ring() const { return ring_; }

 private:
  RingPtr ring_;
};

struct LocalOptions {
  /// Bound on the lcm degree of processed S-pairs in the standard basis.
  unsigned degree_cap = 64;
  /// Largest truncation degree tried by the jet method.
  unsigned jet_cap = 40;
  /// Seed for the coordinate changes of the resultant method.
  std::uint64_t seed = 0;
};

/// Standard basis for the local degree ordering (lowest degree leads, ties
/// broken reverse-lexicographically).
struct StandardBasis {
  RingPtr ring;
  std::vector<Poly> generators;   // the input
  std::vector<Poly> elements;     // minimal standard basis
  std::vector<ExpVec> leading_exponents;
  unsigned degree_cap = 0;
  /// When nonzero D, this is a basis of I + m^D and every term of degree >= D
  /// has been dropped. Once the staircase stays below degree D - 1 the two
  /// ideals coincide.
  unsigned modulus_degree = 0;
  /// Some S-pairs beyond the cap were skipped, so only the staircase up to
  /// degree_cap is guaranteed.
  bool truncated = false;

  /// Every variable has a pure power among the leading exponents.
  bool has_all_pure_powers() const;
  /// The staircase is finite and completely determined.
  bool certified_finite() const;
};

struct QuotientBasis {
  /// Monomials outside the leading ideal, ordered by increasing degree.
  std::vector<ExpVec> standard_monomials;
  std::size_t colength() const { return standard_monomials.size(); }
};

/// Mora's tangent-cone algorithm, run modulo m^D for increasing D when that
/// certifies the staircase. Throws CapExceeded when the staircase is infinite
/// or undetermined at the cap (message lists the partial staircase).
StandardBasis standard_basis(const IdealGens& ideal, unsigned degree_cap = 64);
/// One run without the finiteness check, of I + m^modulus_degree when the
/// modulus is nonzero.
StandardBasis standard_basis_unchecked(const IdealGens& ideal, unsigned degree_cap = 64,
                                       unsigned modulus_degree = 0);
QuotientBasis quotient_basis(const StandardBasis& basis);

/// dim of the local quotient; infinity when some coordinate ray avoids the
/// leading ideal.
Multiplicity colength(const IdealGens& ideal, const LocalOptions& options = {});

/// dim of (polynomials of degree < cap) / (I + m^cap), no stabilisation check.
std::size_t jet_quotient_dimension(const IdealGens& ideal, unsigned cap);
/// Colength certified by dim at cap == dim at cap+1. Throws NotStabilized.
std::size_t jet_colength(const IdealGens& ideal, unsigned cap);
/// Tries caps 1..max_cap until the jet dimension stabilises.
std::size_t jet_colength_search(const IdealGens& ideal, unsigned max_cap, unsigned* cap_used = nullptr);

/// Intersection multiplicity i_0(f_x, f_y) as the y-order of
/// Res_x(f_x o L, f_y o L) for two random unimodular L. Plane germs only.
/// Throws NonIsolated, ArityUnsupported, OracleDisagreement.
std::size_t resultant_mu(const Poly& f, std::uint64_t seed = 0);

enum class MilnorMethod { standard_basis, jets, resultant, all };

std::string_view method_name(MilnorMethod m);
MilnorMethod parse_method(std::string_view name);

struct MilnorReport {
  Multiplicity value = Multiplicity(0);
  std::map<std::string, Multiplicity> per_method;
  unsigned jet_cap_used = 0;
};

/// Milnor number dim O/(grad f). 0 for smooth germs. Requires f(0) = 0.
Multiplicity milnor(const Poly& f, MilnorMethod method = MilnorMethod::standard_basis,
                    const LocalOptions& options = {});
MilnorReport milnor_report(const Poly& f, MilnorMethod method, const LocalOptions& options = {});

/// The finite-dimensional algebra O/I with a preferred monomial basis.
/// The preferred basis is chosen greedily among monomials ordered by total
/// degree, then by largest exponent (balanced monomials first), then by the
/// local ordering; it need not coincide with the staircase.
class LocalQuotient {
 public:
  explicit LocalQuotient(StandardBasis basis);

  const StandardBasis& basis() const { return basis_; }
  const std::vector<ExpVec>& staircase() const { return staircase_; }
  const std::vector<ExpVec>& monomial_basis() const { return preferred_; }
  /// N with m^N contained in the ideal.
  unsigned nilpotency_degree() const { return nil_degree_; }

  /// Coordinates of g modulo the ideal w.r.t. the staircase.
  Echelon<ParamRatio>::Vec staircase_coordinates(const Poly& g) const;
  /// Normal form written in the preferred monomial basis.
  Poly normal_form(const Poly& g) const;

 private:
  StandardBasis basis_;
  std::vector<ExpVec> staircase_;
  std::unordered_map<ExpVec, std::size_t, ExpVecHash> staircase_index_;
  std::vector<ExpVec> preferred_;
  std::vector<ExpVec> candidates_;
  std::vector<std::vector<std::pair<ExpVec, ParamRatio>>> reducers_;  // monic, local order
  Echelon<ParamRatio> preferred_echelon_{true};
  unsigned nil_degree_ = 0;
};

/// Monomials whose classes form a basis of m / m(grad f). Throws NonIsolated.
std::vector<ExpVec> versal_basis(const Poly& f, const LocalOptions& options = {});

struct Reduction {
  Poly normal_form;
  /// One cofactor per element of the standard basis.
  std::vector<Poly> cofactors;
  /// g - sum(cofactors[i] * elements[i]) - normal_form has order >= cap.
  unsigned cap = 0;
};

/// Normal form of g in the local quotient, optionally with cofactors.
Reduction local_reduce(const Poly& g, const StandardBasis& basis, bool with_certificate);

/// Greatest common divisor in Q(params)[vars], up to a unit of Q(params).
Poly poly_gcd(const Poly& a, const Poly& b);
/// a / b in Q(params)[vars] when exact.
std::optional<Poly> poly_divide_exact(const Poly& a, const Poly& b);

std::string monomial_to_string(const ExpVec& e, const Ring& ring);

}  // namespace milnorkit
