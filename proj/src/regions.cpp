#include "regions.hpp"

#include <cmath>

namespace phasecov {

std::string_view region_name(Region r) {
  switch (r) {
    case Region::PT: return "PT";
    case Region::CPT: return "CPT";
    case Region::EBC: return "EBC";
    case Region::TLG: return "TLG";
    case Region::PTxTLG: return "PTxTLG";
    case Region::CPTxTLG: return "CPTxTLG";
    case Region::EBCxTLG: return "EBCxTLG";
  }
  return "?";
}

bool region_from_name(std::string_view name, Region& out) {
  for (Region r : kAllRegions) {
    if (name == region_name(r)) {
      out = r;
      return true;
    }
  }
  // UTF-8 intersection spellings accepted as aliases.
  if (name == "PT∩TLG") { out = Region::PTxTLG; return true; }
  if (name == "CPT∩TLG") { out = Region::CPTxTLG; return true; }
  if (name == "EBC∩TLG") { out = Region::EBCxTLG; return true; }
  return false;
}

RegionMask classify_channel(Surface s, const Channel& c) {
  RegionMask m;
  m.pt = is_positive(c, 0.0);
  m.cpt = is_cpt(c, 0.0);
  m.ebc = is_ebc(c, 0.0);

  bool tlg = std::abs(c.lambda_star) <= 1.0;
  if (s != Surface::NonInvertibleL1) tlg = tlg && c.lambda1 > 0.0;
  if (s != Surface::NonInvertibleL3) tlg = tlg && c.lambda3 > 0.0;
  m.tlg = tlg;
  return m;
}

RegionMask classify_point(Surface s, std::span<const double> free_coords) {
  return classify_channel(s, embed(s, free_coords));
}

bool contains(const RegionSpec& spec, std::span<const double> free_coords) {
  return classify_point(spec.surface, free_coords).in(spec.region);
}

BoundingBox bounding_box(Surface s) { return BoundingBox{surface_dimension(s)}; }

}  // namespace phasecov
