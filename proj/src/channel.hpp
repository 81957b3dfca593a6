#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <utility>

namespace phasecov {

using Complex = std::complex<double>;

// Trace-preserving phase-covariant qubit map. lambda1 is the doubly
// degenerate eigenvalue (sigma_1 and sigma_2 directions), lambda3 the
// sigma_3 eigenvalue, lambda_star the non-unitality parameter. Construction
// places no range restriction; raw parameter triples may describe maps that
// are not even positive. The is_* predicates classify.
struct Channel {
  double lambda1 = 1.0;
  double lambda3 = 1.0;
  double lambda_star = 0.0;
};

inline constexpr Channel kIdentityChannel{1.0, 1.0, 0.0};

// Bloch vector (x1, x2, x3); density matrices satisfy |x| <= 1.
struct Bloch {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  double norm2() const { return x1 * x1 + x2 * x2 + x3 * x3; }
  bool in_ball(double eps = 0.0) const { return norm2() <= 1.0 + eps; }
};

// 2x2 complex matrix, row-major: m[0]=a00, m[1]=a01, m[2]=a10, m[3]=a11.
struct Mat2 {
  std::array<Complex, 4> m{};

  static Mat2 identity() { return {{Complex(1, 0), {}, {}, Complex(1, 0)}}; }
  static Mat2 sigma1() { return {{{}, Complex(1, 0), Complex(1, 0), {}}}; }
  static Mat2 sigma2() { return {{{}, Complex(0, -1), Complex(0, 1), {}}}; }
  static Mat2 sigma3() { return {{Complex(1, 0), {}, {}, Complex(-1, 0)}}; }

  Complex trace() const { return m[0] + m[3]; }
};

Mat2 multiply(const Mat2& a, const Mat2& b);
Mat2 adjoint(const Mat2& a);
Mat2 subtract(const Mat2& a, const Mat2& b);
double max_abs_entry(const Mat2& a);

// Density matrix of a Bloch vector: (I + x.sigma)/2.
Mat2 density_matrix(const Bloch& x);

// 4x4 Choi state of the map: diagonal plus one Hermitian corner pair at
// (0,3)/(3,0). Trace 1 by construction.
struct ChoiMatrix {
  std::array<std::array<Complex, 4>, 4> entries{};

  double trace_real() const;
};

// Closed-form Choi eigenvalues:
//   alpha_pm = (1 - lambda3 +- lambda_star) / 4
//   beta_pm  = (1 + lambda3 +- sqrt(lambda_star^2 + 4 lambda1^2)) / 4
struct ChoiSpectrum {
  double alpha_plus = 0.0;
  double alpha_minus = 0.0;
  double beta_plus = 0.0;
  double beta_minus = 0.0;

  double sum() const { return alpha_plus + alpha_minus + beta_plus + beta_minus; }
  double min() const;
  double max() const;
  std::array<double, 4> sorted_ascending() const;
};

// Thrown by invariant_state when lambda3 is 1 to tolerance and the fixed
// point is not unique/finite.
class DegenerateFixedPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// lambda3 values within this distance of 1 count as degenerate.
inline constexpr double kFixedPointTol = 1e-12;

// Bloch action: (x1, x2, x3) -> (l1 x1, l1 x2, l* + l3 x3). Total on any
// input; the image leaves the ball when the map is not positive.
Bloch apply(const Channel& c, const Bloch& x);

// Eigenvalues (mu_plus, mu_minus) of the output density matrix;
// mu_plus + mu_minus == 1 exactly.
std::pair<double, double> output_eigenvalues(const Channel& c, const Bloch& x);

// The unique fixed state (0, 0, l*/(1-l3)); throws DegenerateFixedPoint
// when |1 - lambda3| < kFixedPointTol.
Bloch invariant_state(const Channel& c);

ChoiMatrix choi(const Channel& c);
ChoiSpectrum choi_spectrum(const Channel& c);

// Parameter-region positivity test: |l1| <= 1 and |l3| + |l*| <= 1. This is
// the conventional positivity region for the family and the one all volume
// results use. It is necessary for the map to be positive on every state but
// not sufficient when |l1| > |l3| and l* != 0; see docs/positivity.md.
bool is_positive(const Channel& c, double eps = 0.0);

// Complete positivity: |l3| + |l*| <= 1 and 4 l1^2 + l*^2 <= (1 + l3)^2.
// Equivalent to all Choi eigenvalues being nonnegative.
bool is_cpt(const Channel& c, double eps = 0.0);

// Entanglement breaking: CPT and 4 l1^2 + l*^2 <= (1 - l3)^2. Equivalent,
// given CPT, to the Choi matrix being dominated by I/4 + I/4 (max Choi
// eigenvalue <= 1/2).
bool is_ebc(const Channel& c, double eps = 0.0);

// Reachable by a regular time-local generator: strictly positive lambda1 and
// lambda3 (a vanishing eigenvalue needs a singular generator) and |l*| <= 1.
bool is_tlg(const Channel& c);

// Linear extension of the map to arbitrary 2x2 operators.
Mat2 apply_operator(const Channel& c, const Mat2& x);

// Max-abs-entry norm of Lambda[U X U^dag] - U Lambda[X] U^dag with
// U = exp(-i sigma3 phi). Zero (to rounding) for every parameter triple.
double covariance_check(const Channel& c, double phi, const Mat2& x);

}  // namespace phasecov
