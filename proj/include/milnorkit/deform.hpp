#pragma once

#include <string>
#include <vector>

#include "milnorkit/local_algebra.hpp"

namespace milnorkit {

/// One-parameter deformation f(s, z) of a germ f0(z). The deformation symbol
/// is a parameter of the ring, so the generic fibre lives over Q(params, s).
struct Family {
  Poly total;
  Poly base;  // re-expressed in total's ring
  std::string symbol;
};

/// Checks f(0, z) = f0(z), f(s, 0) = 0 and a finite generic Milnor number.
/// Throws BaseMismatch, NonzeroAtOrigin, GenericNonIsolated.
Family make_family(const Poly& total, const Poly& base, const std::string& symbol = "s",
                   const LocalOptions& options = {});

enum class GenericMode { symbolic, sampled };

/// Default sample values for the sampled mode.
std::vector<Rational> default_samples();

struct GenericMuOptions {
  GenericMode mode = GenericMode::symbolic;
  std::vector<Rational> samples = default_samples();
  LocalOptions local;
};

struct SampleValue {
  Rational s;
  Multiplicity mu;
};

struct GenericMu {
  std::size_t value = 0;
  std::vector<SampleValue> samples;  // sampled mode only
};

/// Milnor number of the generic fibre. Symbolic mode treats s as
/// transcendental; sampled mode takes the minimum over the samples, which
/// must be attained at least twice (SampleInconsistent otherwise).
GenericMu generic_mu(const Family& family, const GenericMuOptions& options = {});

struct JumpReport {
  std::size_t mu_base = 0;
  GenericMu mu_generic;
  std::size_t jump = 0;
  GenericMode mode = GenericMode::symbolic;
};

/// mu(base) - generic mu. Throws NonIsolated when the base is not isolated.
JumpReport family_jump(const Family& family, const GenericMuOptions& options = {});

/// f + z_1^2 + ... + z_k^2 in a ring enlarged by k fresh variables.
/// Throws ArityUnsupported past four variables.
Poly suspend(const Poly& f, std::size_t k);

std::string_view mode_name(GenericMode m);

}  // namespace milnorkit
