#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace phasecov {

std::size_t surface_dimension(Surface s) {
  switch (s) {
    case Surface::Full3D: return 3;
    case Surface::FullySymmetric: return 1;
    default: return 2;
  }
}

std::string_view surface_name(Surface s) {
  switch (s) {
    case Surface::Full3D: return "full";
    case Surface::Unital: return "unital";
    case Surface::Isotropic: return "iso";
    case Surface::FullySymmetric: return "sym1d";
    case Surface::NonInvertibleL1: return "l1zero";
    case Surface::NonInvertibleL3: return "l3zero";
  }
  return "?";
}

bool surface_from_name(std::string_view name, Surface& out) {
  for (Surface s : kAllSurfaces) {
    if (name == surface_name(s)) {
      out = s;
      return true;
    }
  }
  return false;
}

std::array<std::string_view, 3> surface_coordinate_names(Surface s) {
  switch (s) {
    case Surface::Full3D: return {"lambda1", "lambda3", "lambdaStar"};
    case Surface::Unital: return {"lambda1", "lambda3", ""};
    case Surface::Isotropic: return {"lambda3", "lambdaStar", ""};
    case Surface::FullySymmetric: return {"lambda", "", ""};
    case Surface::NonInvertibleL1: return {"lambda3", "lambdaStar", ""};
    case Surface::NonInvertibleL3: return {"lambda1", "lambdaStar", ""};
  }
  return {"", "", ""};
}

Channel embed(Surface s, std::span<const double> q) {
  if (q.size() < surface_dimension(s))
    throw std::invalid_argument("embed: not enough coordinates for surface");
  switch (s) {
    case Surface::Full3D: return {q[0], q[1], q[2]};
    case Surface::Unital: return {q[0], q[1], 0.0};
    case Surface::Isotropic: return {q[0], q[0], q[1]};
    case Surface::FullySymmetric: return {q[0], q[0], q[0]};
    case Surface::NonInvertibleL1: return {0.0, q[0], q[1]};
    case Surface::NonInvertibleL3: return {q[0], 0.0, q[1]};
  }
  return {};
}

std::array<double, 3> line_element_coefficients(Surface s) {
  switch (s) {
    case Surface::Full3D: return {0.5, 0.25, 0.25};
    case Surface::Unital: return {0.5, 0.25, 0.0};
    case Surface::Isotropic: return {0.75, 0.25, 0.0};
    case Surface::FullySymmetric: return {1.0, 0.0, 0.0};
    case Surface::NonInvertibleL1: return {0.25, 0.25, 0.0};
    case Surface::NonInvertibleL3: return {0.5, 0.25, 0.0};
  }
  return {};
}

double measure_density(Surface s) {
  switch (s) {
    case Surface::Full3D: return std::sqrt(2.0) / 8.0;
    case Surface::Unital: return std::sqrt(2.0) / 4.0;
    case Surface::Isotropic: return std::sqrt(3.0) / 4.0;
    case Surface::FullySymmetric: return 1.0;
    case Surface::NonInvertibleL1: return 0.25;
    case Surface::NonInvertibleL3: return std::sqrt(2.0) / 4.0;
  }
  return 0.0;
}

double pauli_measure_density() { return 0.125; }

}  // namespace phasecov
