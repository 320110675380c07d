#include "optb/classify.hpp"

#include <cstdlib>

namespace optb {

GeometryType geometry_type(const Mat2& m) {
  require_sl2(m, "geometry_type");
  const std::int64_t t = std::llabs(trace(m));
  if (t < 2) return GeometryType::Periodic;
  if (t == 2) return GeometryType::Reducible;
  return GeometryType::PseudoAnosov;
}

std::string geometry_name(GeometryType g) {
  switch (g) {
    case GeometryType::Periodic: return "periodic";
    case GeometryType::Reducible: return "reducible";
    case GeometryType::PseudoAnosov: return "pseudo-anosov";
  }
  return "unknown";
}

TunnelVerdict tunnel_one_test(const Mat2& m, std::int64_t m_bound,
                              std::int64_t p_bound) {
  require_sl2(m, "tunnel_one_test");
  if (mod2(m) == Mat2::identity()) return ObstructedMod2{};

  // Every family member of trace t is B_t (and its inverse has the same
  // trace), so the m-loop collapses to a single candidate.
  const std::int64_t t = trace(m);
  if (std::llabs(t) <= m_bound) {
    const Mat2 family{t, 1, -1, 0};
    for (const Mat2& target : {family, inverse(family)}) {
      if (auto p = bounded_gl2_conjugacy(m, target, p_bound)) {
        return TunnelOne{*p, t};
      }
    }
  }
  return TunnelUnknown{p_bound};
}

Mat2 paper_family(std::int64_t n) {
  return Mat2{4 * n - 1, -2 * n, 2, -1};
}

}  // namespace optb
