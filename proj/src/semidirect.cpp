#include "optb/semidirect.hpp"

namespace optb {

BundleElement sd_mul(const MappingClass& m, const BundleElement& e1,
                     const BundleElement& e2) {
  return BundleElement{concat(e1.w, apply(mc_power(m, e1.k), e2.w)),
                       e1.k + e2.k};
}

BundleElement sd_inv(const MappingClass& m, const BundleElement& e) {
  return BundleElement{apply(mc_power(m, -e.k), invert(e.w)), -e.k};
}

}  // namespace optb
