#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>

#include "channel.hpp"

namespace phasecov {

// Parameter manifolds studied: the full 3-parameter space and its
// hypersurface restrictions. Each surface fixes which coordinates stay free:
//   Full3D          (l1, l3, l*)   3 free
//   Unital          (l1, l3)       l* = 0
//   Isotropic       (l3, l*)       l1 = l3
//   FullySymmetric  (l)            l1 = l3 = l*
//   NonInvertibleL1 (l3, l*)       l1 = 0
//   NonInvertibleL3 (l1, l*)       l3 = 0
enum class Surface {
  Full3D,
  Unital,
  Isotropic,
  FullySymmetric,
  NonInvertibleL1,
  NonInvertibleL3,
};

inline constexpr std::array<Surface, 6> kAllSurfaces = {
    Surface::Full3D,         Surface::Unital,          Surface::Isotropic,
    Surface::FullySymmetric, Surface::NonInvertibleL1, Surface::NonInvertibleL3,
};

std::size_t surface_dimension(Surface s);

// CLI-facing names: full, unital, iso, sym1d, l1zero, l3zero.
std::string_view surface_name(Surface s);
bool surface_from_name(std::string_view name, Surface& out);

// Names of the free coordinates, in the order embed() consumes them.
std::array<std::string_view, 3> surface_coordinate_names(Surface s);

// Channel at the given free coordinates of the surface.
Channel embed(Surface s, std::span<const double> free_coords);

// Diagonal Hilbert-Schmidt metric coefficients on the free coordinates,
// from Tr(d rho_Choi^2) restricted to the surface. Only the first
// surface_dimension(s) entries are meaningful.
std::array<double, 3> line_element_coefficients(Surface s);

// Constant sqrt(det g) attached to the surface; volume = density x Lebesgue
// measure of a region in the free coordinates.
double measure_density(Surface s);

// Density 1/8 of the three-eigenvalue unital (Pauli) family, exposed for
// cross-checks: fixing lambda2 = lambda1 there reproduces the Unital
// coefficients (1/2, 1/4).
double pauli_measure_density();

}  // namespace phasecov
