#include "catalog.hpp"

#include <cmath>
#include <numbers>

namespace phasecov {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);

// (sqrt(5) - 1) / 4: EBC endpoint (and CPT lower endpoint) on the
// fully symmetric line.
const double kGolden14 = (kSqrt5 - 1.0) / 4.0;

}  // namespace

std::optional<double> lebesgue_measure(Region r, Surface s) {
  switch (s) {
    case Surface::Full3D:
      switch (r) {
        case Region::PT: return 4.0;
        case Region::CPT: return 16.0 / 9.0;
        case Region::EBC: return kPi / 3.0;
        case Region::PTxTLG: return 1.0;
        case Region::CPTxTLG: return (32.0 - 3.0 * kPi) / 36.0;
        case Region::EBCxTLG: return kPi / 12.0;
        case Region::TLG: return std::nullopt;
      }
      break;
    case Surface::Unital:
      switch (r) {
        case Region::PT: return 4.0;
        case Region::CPT: return 2.0;
        case Region::EBC: return 1.0;
        case Region::PTxTLG: return 1.0;
        case Region::CPTxTLG: return 0.75;
        case Region::EBCxTLG: return 0.25;
        case Region::TLG: return std::nullopt;
      }
      break;
    case Surface::Isotropic:
      switch (r) {
        case Region::PT: return 2.0;
        case Region::CPT: return 2.0 * (2.0 * kPi * kSqrt3 + 9.0) / 27.0;
        case Region::EBC: return 2.0 * (4.0 * kPi * kSqrt3 - 9.0) / 27.0;
        case Region::PTxTLG: return 1.0;
        case Region::CPTxTLG: return 1.0;
        case Region::EBCxTLG: return (4.0 * kPi * kSqrt3 - 9.0) / 27.0;
        case Region::TLG: return std::nullopt;
      }
      break;
    case Surface::FullySymmetric:
      switch (r) {
        case Region::PT: return 1.0;
        case Region::CPT: return 0.5 + kGolden14;
        case Region::EBC: return 2.0 * kGolden14;
        case Region::PTxTLG: return 0.5;
        case Region::CPTxTLG: return 0.5;
        case Region::EBCxTLG: return kGolden14;
        case Region::TLG: return std::nullopt;
      }
      break;
    case Surface::NonInvertibleL1:
      // PT, CPT and EBC coincide with the diamond |l3| + |l*| <= 1.
      switch (r) {
        case Region::PT:
        case Region::CPT:
        case Region::EBC: return 2.0;
        case Region::PTxTLG:
        case Region::CPTxTLG:
        case Region::EBCxTLG: return 1.0;
        case Region::TLG: return std::nullopt;
      }
      break;
    case Surface::NonInvertibleL3:
      // PT is the square |l1|,|l*| <= 1; CPT = EBC is the ellipse
      // 4 l1^2 + l*^2 <= 1.
      switch (r) {
        case Region::PT: return 4.0;
        case Region::CPT:
        case Region::EBC: return kPi / 2.0;
        case Region::PTxTLG: return 2.0;
        case Region::CPTxTLG:
        case Region::EBCxTLG: return kPi / 4.0;
        case Region::TLG: return std::nullopt;
      }
      break;
  }
  return std::nullopt;
}

std::optional<AnalyticVolume> analytic_volume(const RegionSpec& spec) {
  // Unital-surface volumes are deliberately absent: only the CPT/PT and
  // EBC/CPT ratios are tabulated for that surface.
  if (spec.surface == Surface::Unital) return std::nullopt;

  const auto leb = lebesgue_measure(spec.region, spec.surface);
  if (!leb) return std::nullopt;

  if (spec.surface == Surface::NonInvertibleL3)
    return AnalyticVolume{*leb, VolumeUnits::Lebesgue};
  return AnalyticVolume{*leb * measure_density(spec.surface), VolumeUnits::HilbertSchmidt};
}

std::optional<double> analytic_ratio(const RegionSpec& num, const RegionSpec& den) {
  if (num.surface != den.surface)
    throw MismatchedSurface("analytic_ratio: regions live on different surfaces");
  const Surface s = num.surface;

  // Directly tabulated ratios, kept as their closed-form expressions.
  struct Entry {
    Region num, den;
    Surface surface;
    double value;
  };
  const Entry published[] = {
      {Region::CPT, Region::PT, Surface::Full3D, 4.0 / 9.0},
      {Region::PTxTLG, Region::PT, Surface::Full3D, 0.25},
      {Region::CPTxTLG, Region::CPT, Surface::Full3D, 0.5 - 3.0 * kPi / 64.0},
      {Region::EBC, Region::CPT, Surface::Full3D, 3.0 * kPi / 16.0},
      {Region::EBCxTLG, Region::CPTxTLG, Surface::Full3D, 3.0 * kPi / (32.0 - 3.0 * kPi)},
      {Region::EBCxTLG, Region::EBC, Surface::Full3D, 0.25},
      {Region::CPT, Region::PT, Surface::Isotropic, (9.0 + 2.0 * kPi * kSqrt3) / 27.0},
      {Region::EBC, Region::CPT, Surface::Isotropic,
       (4.0 * kPi * kSqrt3 - 9.0) / (2.0 * kPi * kSqrt3 + 9.0)},
      {Region::CPT, Region::PT, Surface::Unital, 0.5},
      {Region::EBC, Region::CPT, Surface::Unital, 0.5},
  };
  for (const Entry& e : published) {
    if (e.num == num.region && e.den == den.region && e.surface == s) return e.value;
  }

  const auto n = lebesgue_measure(num.region, s);
  const auto d = lebesgue_measure(den.region, s);
  if (!n || !d || *d == 0.0) return std::nullopt;
  return *n / *d;
}

}  // namespace phasecov
