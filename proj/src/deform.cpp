#include "milnorkit/deform.hpp"

#include <algorithm>

#include "milnorkit/errors.hpp"

namespace milnorkit {

std::string_view mode_name(GenericMode m) { return m == GenericMode::symbolic ? "symbolic" : "sampled"; }

std::vector<Rational> default_samples() {
  std::vector<Rational> out;
  for (long d : {101, 103, 107, 109, 113}) out.emplace_back(1, d);
  return out;
}

Family make_family(const Poly& total, const Poly& base, const std::string& symbol, const LocalOptions& options) {
  RingPtr ring = total.ring_ptr();
  if (ring->param_index(symbol) < 0) {
    if (ring->var_index(symbol) >= 0)
      throw Error(ErrorKind::SyntaxError, "deformation symbol '" + symbol + "' is a main variable");
    auto params = ring->params;
    params.push_back(symbol);
    ring = make_ring(ring->vars, params);
  }
  Family fam{change_ring(total, ring), change_ring(base, ring), symbol};

  if (specialize_params(fam.total, {{symbol, Rational(0)}}) != fam.base)
    throw Error(ErrorKind::BaseMismatch, "f(0, z) = " + specialize_params(fam.total, {{symbol, Rational(0)}}).to_string() +
                                             " differs from the base " + fam.base.to_string());
  if (!fam.total.constant_term().is_zero())
    throw Error(ErrorKind::NonzeroAtOrigin, "f(s, 0) = " + fam.total.constant_term().to_string(ring->params) +
                                                " is not identically zero");
  if (!milnor(fam.total, MilnorMethod::standard_basis, options).is_finite())
    throw Error(ErrorKind::GenericNonIsolated, "the generic fibre has a non-isolated critical point");
  return fam;
}

GenericMu generic_mu(const Family& family, const GenericMuOptions& options) {
  GenericMu out;
  if (options.mode == GenericMode::symbolic) {
    Multiplicity m = milnor(family.total, MilnorMethod::standard_basis, options.local);
    if (!m.is_finite())
      throw Error(ErrorKind::GenericNonIsolated, "the generic fibre has a non-isolated critical point");
    out.value = m.value();
    return out;
  }

  if (options.samples.empty()) throw Error(ErrorKind::SampleInconsistent, "no sample values given");
  for (const auto& v : options.samples) {
    if (v == 0) throw Error(ErrorKind::SampleInconsistent, "sample value 0 is the special fibre");
    Poly fiber = specialize_params(family.total, {{family.symbol, v}});
    out.samples.push_back({v, milnor(fiber, MilnorMethod::standard_basis, options.local)});
  }
  std::optional<std::size_t> lowest;
  for (const auto& sv : out.samples)
    if (sv.mu.is_finite() && (!lowest || sv.mu.value() < *lowest)) lowest = sv.mu.value();
  if (!lowest) throw Error(ErrorKind::GenericNonIsolated, "every sampled fibre is non-isolated");
  auto hits = std::count_if(out.samples.begin(), out.samples.end(),
                            [&](const SampleValue& sv) { return sv.mu == Multiplicity(*lowest); });
  if (hits < 2)
    throw Error(ErrorKind::SampleInconsistent, "minimum " + std::to_string(*lowest) +
                                                   " attained at a single sample; add more sample values");
  out.value = *lowest;
  return out;
}

JumpReport family_jump(const Family& family, const GenericMuOptions& options) {
  JumpReport out;
  out.mode = options.mode;
  Multiplicity base = milnor(family.base, MilnorMethod::standard_basis, options.local);
  if (!base.is_finite()) throw Error(ErrorKind::NonIsolated, "the base germ has a non-isolated critical point");
  out.mu_base = base.value();
  out.mu_generic = generic_mu(family, options);
  out.jump = out.mu_base - out.mu_generic.value;
  return out;
}

Poly suspend(const Poly& f, std::size_t k) {
  const Ring& ring = f.ring();
  if (ring.arity() + k > kMaxArity)
    throw Error(ErrorKind::ArityUnsupported, "suspension would exceed " + std::to_string(kMaxArity) + " variables");
  auto vars = ring.vars;
  std::vector<std::string> fresh;
  for (const char* name : {"y", "z", "w", "u", "v", "t"}) {
    if (fresh.size() == k) break;
    if (ring.var_index(name) >= 0 || ring.param_index(name) >= 0) continue;
    fresh.emplace_back(name);
  }
  for (std::size_t n = 1; fresh.size() < k; ++n) {
    std::string name = "z" + std::to_string(n);
    if (ring.var_index(name) < 0 && ring.param_index(name) < 0) fresh.push_back(name);
  }
  vars.insert(vars.end(), fresh.begin(), fresh.end());
  RingPtr target = make_ring(vars, ring.params);
  Poly out = change_ring(f, target);
  for (std::size_t i = ring.arity(); i < vars.size(); ++i) out.add_term(ExpVec::unit(i, 2), ParamRatio(1L));
  return out;
}

}  // namespace milnorkit
