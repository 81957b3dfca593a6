#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>

#include "channel.hpp"
#include "geometry.hpp"

namespace phasecov {

// Channel classes whose measures are studied, plus the intersections with
// the time-local-generator region. ASCII spelling of A intersect B is AxB.
enum class Region {
  PT,
  CPT,
  EBC,
  TLG,
  PTxTLG,
  CPTxTLG,
  EBCxTLG,
};

inline constexpr std::array<Region, 7> kAllRegions = {
    Region::PT,     Region::CPT,     Region::EBC,    Region::TLG,
    Region::PTxTLG, Region::CPTxTLG, Region::EBCxTLG,
};

std::string_view region_name(Region r);
bool region_from_name(std::string_view name, Region& out);

struct RegionSpec {
  Region region = Region::PT;
  Surface surface = Surface::Full3D;
};

class MismatchedSurface : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Membership of one boxed point in each base class. The TLG strictness
// clauses apply only to eigenvalue coordinates left free by the surface:
// on the l1 = 0 surface the l1 > 0 clause is dropped (and likewise l3 > 0
// on l3 = 0), matching the hypersurface region displays. Everywhere else
// TLG is l1 > 0, l3 > 0, |l*| <= 1 verbatim.
struct RegionMask {
  bool pt = false;
  bool cpt = false;
  bool ebc = false;
  bool tlg = false;

  bool in(Region r) const {
    switch (r) {
      case Region::PT: return pt;
      case Region::CPT: return cpt;
      case Region::EBC: return ebc;
      case Region::TLG: return tlg;
      case Region::PTxTLG: return pt && tlg;
      case Region::CPTxTLG: return cpt && tlg;
      case Region::EBCxTLG: return ebc && tlg;
    }
    return false;
  }

  // 4-bit encoding used by the counting kernel.
  unsigned bits() const {
    return (pt ? 1u : 0u) | (cpt ? 2u : 0u) | (ebc ? 4u : 0u) | (tlg ? 8u : 0u);
  }
  static RegionMask from_bits(unsigned b) {
    return {(b & 1u) != 0, (b & 2u) != 0, (b & 4u) != 0, (b & 8u) != 0};
  }
};

RegionMask classify_point(Surface s, std::span<const double> free_coords);
RegionMask classify_channel(Surface s, const Channel& c);

bool contains(const RegionSpec& spec, std::span<const double> free_coords);

// Axis-aligned sampling box [-1, 1]^dim in the free coordinates. Every
// region lies inside it (|l1| <= 1, |l3| <= 1, |l*| <= 1 on membership;
// TLG is clipped to the box).
struct BoundingBox {
  std::size_t dim = 3;

  double lebesgue() const {
    double v = 1.0;
    for (std::size_t i = 0; i < dim; ++i) v *= 2.0;
    return v;
  }
};

BoundingBox bounding_box(Surface s);

}  // namespace phasecov
