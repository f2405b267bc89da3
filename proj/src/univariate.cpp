#include "milnorkit/univariate.hpp"

#include "milnorkit/poly.hpp"

namespace milnorkit {

std::string upoly_to_string(const UPoly<ParamRatio>& p, const std::string& var,
                            const std::vector<std::string>& params) {
  auto ring = std::make_shared<const Ring>(Ring{{var}, params});
  Poly q(ring);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) q.add_term(ExpVec::unit(0, static_cast<std::uint16_t>(k)), p.coeffs()[k]);
  return q.to_string();
}

}  // namespace milnorkit
