#pragma once

#include <cstdint>

#include "optb/monodromy.hpp"
#include "optb/words.hpp"

namespace optb {

/// Element of the bundle group F_2 x| Z in normal form: a fiber word and a
/// power of the circle generator tau. The identity is (empty, 0).
struct BundleElement {
  Word w;
  std::int64_t k = 0;

  friend bool operator==(const BundleElement&, const BundleElement&) = default;
};

/// Group law (g1, k1) (g2, k2) = (g1 . phi^k1(g2), k1 + k2) for the
/// automorphism phi described by m.
BundleElement sd_mul(const MappingClass& m, const BundleElement& e1,
                     const BundleElement& e2);

/// Exact inverse (phi^-k(w^-1), -k).
BundleElement sd_inv(const MappingClass& m, const BundleElement& e);

}  // namespace optb
