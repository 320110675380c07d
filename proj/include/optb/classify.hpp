#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "optb/matrices.hpp"

namespace optb {

/// Mapping-class type by |trace|: < 2 periodic, = 2 reducible, > 2
/// pseudo-Anosov.
enum class GeometryType { Periodic, Reducible, PseudoAnosov };

GeometryType geometry_type(const Mat2& m);
std::string geometry_name(GeometryType g);

/// A bounded match against the tunnel-number-one family
/// B_m = (m 1 / -1 0): p A p^-1 is B_m or its inverse.
struct TunnelOne {
  Mat2 conjugator;
  std::int64_t m = 0;
};

/// A matrix congruent to the identity mod 2 is never conjugate to any B_m.
struct ObstructedMod2 {};

/// Bounded search missed; not a negative result.
struct TunnelUnknown {
  std::int64_t bound = 0;
};

using TunnelVerdict = std::variant<TunnelOne, ObstructedMod2, TunnelUnknown>;

/// Mod-2 obstruction first, then a bounded conjugacy search against B_m and
/// B_m^-1. Only m = trace(A) can match since the family member of trace m is
/// B_m (trace is a conjugation invariant).
TunnelVerdict tunnel_one_test(const Mat2& m, std::int64_t m_bound = 8,
                              std::int64_t p_bound = 8);

/// The family (4n-1  -2n / 2  -1); det +1 for every n, trace 4n - 2.
Mat2 paper_family(std::int64_t n);

}  // namespace optb
