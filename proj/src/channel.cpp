#include "channel.hpp"

#include <algorithm>
#include <cmath>

namespace phasecov {

Mat2 multiply(const Mat2& a, const Mat2& b) {
  Mat2 r;
  r.m[0] = a.m[0] * b.m[0] + a.m[1] * b.m[2];
  r.m[1] = a.m[0] * b.m[1] + a.m[1] * b.m[3];
  r.m[2] = a.m[2] * b.m[0] + a.m[3] * b.m[2];
  r.m[3] = a.m[2] * b.m[1] + a.m[3] * b.m[3];
  return r;
}

Mat2 adjoint(const Mat2& a) {
  return {{std::conj(a.m[0]), std::conj(a.m[2]), std::conj(a.m[1]), std::conj(a.m[3])}};
}

Mat2 subtract(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 4; ++i) r.m[i] = a.m[i] - b.m[i];
  return r;
}

double max_abs_entry(const Mat2& a) {
  double v = 0.0;
  for (const auto& e : a.m) v = std::max(v, std::abs(e));
  return v;
}

Mat2 density_matrix(const Bloch& x) {
  Mat2 r;
  r.m[0] = Complex(0.5 * (1.0 + x.x3), 0.0);
  r.m[1] = Complex(0.5 * x.x1, -0.5 * x.x2);
  r.m[2] = Complex(0.5 * x.x1, 0.5 * x.x2);
  r.m[3] = Complex(0.5 * (1.0 - x.x3), 0.0);
  return r;
}

double ChoiMatrix::trace_real() const {
  double t = 0.0;
  for (int i = 0; i < 4; ++i) t += entries[i][i].real();
  return t;
}

double ChoiSpectrum::min() const {
  return std::min(std::min(alpha_plus, alpha_minus), std::min(beta_plus, beta_minus));
}

double ChoiSpectrum::max() const {
  return std::max(std::max(alpha_plus, alpha_minus), std::max(beta_plus, beta_minus));
}

std::array<double, 4> ChoiSpectrum::sorted_ascending() const {
  std::array<double, 4> v{alpha_plus, alpha_minus, beta_plus, beta_minus};
  std::sort(v.begin(), v.end());
  return v;
}

Bloch apply(const Channel& c, const Bloch& x) {
  return {c.lambda1 * x.x1, c.lambda1 * x.x2, c.lambda_star + c.lambda3 * x.x3};
}

std::pair<double, double> output_eigenvalues(const Channel& c, const Bloch& x) {
  const double planar = c.lambda1 * c.lambda1 * (x.x1 * x.x1 + x.x2 * x.x2);
  const double axial = c.lambda_star + c.lambda3 * x.x3;
  const double r = std::sqrt(planar + axial * axial);
  return {0.5 * (1.0 + r), 0.5 * (1.0 - r)};
}

Bloch invariant_state(const Channel& c) {
  const double denom = 1.0 - c.lambda3;
  if (std::abs(denom) < kFixedPointTol)
    throw DegenerateFixedPoint("fixed point degenerate: lambda3 = 1");
  return {0.0, 0.0, c.lambda_star / denom};
}

ChoiMatrix choi(const Channel& c) {
  ChoiMatrix r;
  const double q = 0.25;
  r.entries[0][0] = Complex(q * (1.0 + c.lambda_star + c.lambda3), 0.0);
  r.entries[1][1] = Complex(q * (1.0 - c.lambda_star - c.lambda3), 0.0);
  r.entries[2][2] = Complex(q * (1.0 + c.lambda_star - c.lambda3), 0.0);
  r.entries[3][3] = Complex(q * (1.0 - c.lambda_star + c.lambda3), 0.0);
  r.entries[0][3] = Complex(q * 2.0 * c.lambda1, 0.0);
  r.entries[3][0] = Complex(q * 2.0 * c.lambda1, 0.0);
  return r;
}

ChoiSpectrum choi_spectrum(const Channel& c) {
  const double root = std::sqrt(c.lambda_star * c.lambda_star + 4.0 * c.lambda1 * c.lambda1);
  ChoiSpectrum s;
  s.alpha_plus = 0.25 * (1.0 - c.lambda3 + c.lambda_star);
  s.alpha_minus = 0.25 * (1.0 - c.lambda3 - c.lambda_star);
  s.beta_plus = 0.25 * (1.0 + c.lambda3 + root);
  s.beta_minus = 0.25 * (1.0 + c.lambda3 - root);
  return s;
}

bool is_positive(const Channel& c, double eps) {
  return std::abs(c.lambda1) <= 1.0 + eps &&
         std::abs(c.lambda3) + std::abs(c.lambda_star) <= 1.0 + eps;
}

bool is_cpt(const Channel& c, double eps) {
  const double lhs = 4.0 * c.lambda1 * c.lambda1 + c.lambda_star * c.lambda_star;
  const double rhs = (1.0 + c.lambda3) * (1.0 + c.lambda3);
  return std::abs(c.lambda3) + std::abs(c.lambda_star) <= 1.0 + eps && lhs <= rhs + eps;
}

bool is_ebc(const Channel& c, double eps) {
  const double lhs = 4.0 * c.lambda1 * c.lambda1 + c.lambda_star * c.lambda_star;
  const double rhs = (1.0 - c.lambda3) * (1.0 - c.lambda3);
  return is_cpt(c, eps) && lhs <= rhs + eps;
}

bool is_tlg(const Channel& c) {
  return c.lambda1 > 0.0 && c.lambda3 > 0.0 && std::abs(c.lambda_star) <= 1.0;
}

Mat2 apply_operator(const Channel& c, const Mat2& x) {
  const Complex tr = x.trace();
  const Complex t1 = x.m[2] + x.m[1];                       // tr(sigma1 X)
  const Complex t2 = Complex(0, 1) * (x.m[1] - x.m[2]);     // tr(sigma2 X)
  const Complex t3 = x.m[0] - x.m[3];                       // tr(sigma3 X)

  Mat2 r;
  r.m[0] = 0.5 * (tr * (1.0 + c.lambda_star) + c.lambda3 * t3);
  r.m[3] = 0.5 * (tr * (1.0 - c.lambda_star) - c.lambda3 * t3);
  r.m[1] = 0.5 * c.lambda1 * (t1 - Complex(0, 1) * t2);
  r.m[2] = 0.5 * c.lambda1 * (t1 + Complex(0, 1) * t2);
  return r;
}

double covariance_check(const Channel& c, double phi, const Mat2& x) {
  Mat2 u;
  u.m[0] = std::exp(Complex(0, -phi));
  u.m[3] = std::exp(Complex(0, phi));
  const Mat2 udag = adjoint(u);

  const Mat2 rotated_first = apply_operator(c, multiply(multiply(u, x), udag));
  const Mat2 mapped_first = multiply(multiply(u, apply_operator(c, x)), udag);
  return max_abs_entry(subtract(rotated_first, mapped_first));
}

}  // namespace phasecov
