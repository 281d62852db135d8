#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "rtoa/errors.hpp"

namespace rtoa {

// Node counts, truncations and tolerances for every integral family in the
// library. One instance is threaded through all evaluations so that a run is
// reproducible from its configuration alone.
struct QuadratureSpec {
  int contour_nodes = 64;        // trapezoid points on the contour circle
  int laguerre_nodes = 64;       // Gauss-Laguerre points (weight e^-y)
  double zeta_truncation = 16.0; // sine-transform domain, in envelope widths
  int nodes_per_oscillation = 16;
  double branch_cut_truncation = 40.0;  // upper cutoff scale: e^-x below this is dropped
  double rel_tolerance = 1e-9;
  std::vector<double> abel_damping =   // inverse-length damping ladder
      {0.4, 0.28284271247461901, 0.2, 0.14142135623730950,
       0.1, 0.070710678118654752, 0.05};

  void validate() const {
    if (contour_nodes < 8) throw ConfigError("quadrature: require contour_nodes >= 8");
    if (laguerre_nodes < 8) throw ConfigError("quadrature: require laguerre_nodes >= 8");
    if (nodes_per_oscillation < 8)
      throw ConfigError("quadrature: require nodes_per_oscillation >= 8");
    if (!(zeta_truncation >= 8.0))
      throw ConfigError("quadrature: require zeta_truncation >= 8");
    if (!(rel_tolerance > 0.0 && rel_tolerance <= 1e-2))
      throw ConfigError("quadrature: require rel_tolerance in (0, 1e-2]");
    if (!(branch_cut_truncation > 0.0))
      throw ConfigError("quadrature: require branch_cut_truncation > 0");
    if (abel_damping.size() < 3)
      throw ConfigError("quadrature: require at least 3 abel_damping values");
    for (std::size_t i = 1; i < abel_damping.size(); ++i)
      if (!(abel_damping[i] < abel_damping[i - 1]) || !(abel_damping[i] > 0.0))
        throw ConfigError("quadrature: abel_damping must be positive and strictly decreasing");
  }
};

// A complex value with an absolute error estimate. Operations never let a
// NaN/Inf escape: they throw instead.
struct ComplexResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error = 0.0;
};

struct RealResult {
  double value = 0.0;
  double abs_error = 0.0;
};

// (1/2pi i) closed contour integral of an analytic integrand over the circle
// |z| = radius, by the N-node trapezoid rule (spectrally accurate). The error
// estimate comes from node doubling.
ComplexResult contour_circle_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double radius, const QuadratureSpec& spec);

// integral_0^inf e^-y g(y) dy by Gauss-Laguerre with node doubling.
// A sampled growth-ratio probe rejects integrands with exponential rate >= 1.
ComplexResult laguerre_integral(
    const std::function<std::complex<double>(double)>& g,
    const QuadratureSpec& spec);

// integral_1^inf e^(-decay_rate*y) * (sqrt(y^2-1)/y) * h(y) dy.
// The substitution y = 1 + u^2 removes the end-point square-root singularity.
RealResult branch_cut_integral(const std::function<double(double)>& h,
                               double decay_rate, const QuadratureSpec& spec);

// Controls for the oscillatory sine transform below. Internal callers fill
// these in; the plain entry point probes the integrand itself.
struct SineTransformOptions {
  // F(z) ~ singular_coeff / z as z->0; that part is integrated through the
  // bounded quotient sin(kz)/z.
  double singular_coeff = 0.0;
  // Constant part of F at infinity. It carries no intrinsic decay, so it is
  // integrated with the Abel damping ladder and extrapolated to zero damping.
  double asymptotic_const = 0.0;
  // When true, the full non-constant part is also run through the Abel
  // ladder (for oscillatory tails that decay too slowly to truncate).
  bool force_abel = false;
  // Domain: [0, zeta_truncation * length_scale].
  double length_scale = 1.0;
  // Extra oscillation frequency carried by F itself (panel sizing hint).
  double osc_hint = 0.0;
};

// integral_0^inf sin(k z) F(z) dz with panelised Gauss-Legendre resolving at
// least spec.nodes_per_oscillation nodes per period.
RealResult fourier_sine_integral(const std::function<double(double)>& F, double k,
                                 const QuadratureSpec& spec);
RealResult fourier_sine_integral(const std::function<double(double)>& F, double k,
                                 const QuadratureSpec& spec,
                                 const SineTransformOptions& opt);

namespace detail {

// Panelised Gauss-Legendre integral of f over [a, b] with embedded low/high
// order error estimate. panel_width caps the panel size.
RealResult panel_integral(const std::function<double(double)>& f, double a,
                          double b, double panel_width);

// Sine integral Si(x) = integral_0^x sin t / t dt.
double sine_integral_si(double x);

// Polynomial (Neville) extrapolation of (x_i, y_i) to x = 0; spread reports
// the difference between the last two extrapolation columns.
double neville_to_zero(const std::vector<double>& x, const std::vector<double>& y,
                       double* spread);

}  // namespace detail

}  // namespace rtoa
