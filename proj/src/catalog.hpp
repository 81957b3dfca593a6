#pragma once

#include <optional>

#include "regions.hpp"

namespace phasecov {

// Units of a tabulated reference volume. Almost all entries are
// Hilbert-Schmidt volumes (Lebesgue measure of the region times the constant
// surface density). The l3zero entries are tabulated in bare coordinate
// (Lebesgue) units: the reference values on that surface are the coordinate
// areas 4 and pi/2, with the sqrt(2)/4 density not applied. Comparisons
// against Monte Carlo estimates must convert by the exact density constant;
// ratios are unit-free.
enum class VolumeUnits { HilbertSchmidt, Lebesgue };

struct AnalyticVolume {
  double value = 0.0;
  VolumeUnits units = VolumeUnits::HilbertSchmidt;
};

// Closed-form Lebesgue measure of the region in the free coordinates of the
// surface, when one exists. TLG alone has none (the box clip is a sampling
// convention, not part of the region definition).
std::optional<double> lebesgue_measure(Region r, Surface s);

// Tabulated closed-form volume in the units recorded for the surface.
std::optional<AnalyticVolume> analytic_volume(const RegionSpec& spec);

// Closed-form ratio of two region volumes on a common surface. Directly
// published ratios are returned as their printed expressions; other pairs
// fall back to the quotient of Lebesgue measures. Throws MismatchedSurface
// when the specs name different surfaces.
std::optional<double> analytic_ratio(const RegionSpec& num, const RegionSpec& den);

}  // namespace phasecov
