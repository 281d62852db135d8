#include "rtoa/classical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rtoa {

double lorentz_gamma(double p, const PhysicsConfig& phys) {
  const double r = p / phys.mc();
  return std::sqrt(1.0 + r * r);
}

double PiecewisePotential::operator()(double q) const {
  std::size_t i = 0;
  while (i < breaks.size() && q >= breaks[i]) ++i;
  return values[i];
}

namespace {

// Inverse speed (time per unit length) for travel through a region where the
// potential differs from the launch point by w = V(q0) - V(q'), in the form
// the kernel quantisation is built on:
//   dt/dq = sqrt(mu/2) * gamma / sqrt(p^2/2mu + w (gamma + w / 2 mu c^2)).
double segment_rate(double p, double gamma, double w, const PhysicsConfig& phys,
                    const std::string& segment) {
  const double bracket =
      p * p / (2.0 * phys.mu) + w * (gamma + w / (2.0 * phys.mc2()));
  if (!(bracket > 0.0))
    throw ForbiddenRegionError(
        "classical arrival time: segment is classically forbidden", segment);
  return std::sqrt(0.5 * phys.mu) * gamma / std::sqrt(bracket);
}

}  // namespace

double arrival_time_quadrature(const ClassicalState& state,
                               const PiecewisePotential& potential,
                               double arrival_x, const PhysicsConfig& phys) {
  if (state.p0 == 0.0)
    throw DomainError("classical arrival time: p0 must be nonzero");
  const double lo = std::min(state.q0, arrival_x);
  const double hi = std::max(state.q0, arrival_x);
  const double gamma = lorentz_gamma(state.p0, phys);
  const double v_launch = potential(state.q0);

  // Cut [lo, hi] at every potential breakpoint; each piece is exact.
  std::vector<double> cuts{lo};
  for (double br : potential.breaks)
    if (br > lo && br < hi) cuts.push_back(br);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const double w = v_launch - potential(mid);
    const std::string segment = "[" + std::to_string(cuts[i]) + ", " +
                                std::to_string(cuts[i + 1]) + "]";
    sum += (cuts[i + 1] - cuts[i]) * segment_rate(state.p0, gamma, w, phys, segment);
  }
  // t = -sgn(p) * integral_x^q == +integral over [lo,hi] when travelling
  // towards the detector; launches moving away never arrive.
  const double sgn = (state.p0 > 0.0) ? 1.0 : -1.0;
  const double direction = (arrival_x >= state.q0) ? 1.0 : -1.0;
  if (sgn * direction < 0.0)
    throw DomainError("classical arrival time: trajectory moves away from the arrival point");
  return sum;
}

namespace {

double segment_time_pm(double p, double V0, double sign, const PhysicsConfig& phys) {
  const double gamma = lorentz_gamma(p, phys);
  const double g = gamma + sign * V0 / phys.mc2();
  const double disc = g * g - 1.0;
  if (!(disc > 0.0))
    throw ForbiddenRegionError("barrier segment time: below-barrier classical energy",
                               "barrier");
  return gamma / std::sqrt(disc);
}

}  // namespace

double barrier_segment_time_plus(double p, double V0, const PhysicsConfig& phys) {
  return segment_time_pm(p, V0, +1.0, phys);
}

double barrier_segment_time_minus(double p, double V0, const PhysicsConfig& phys) {
  return segment_time_pm(p, V0, -1.0, phys);
}

double free_arrival_time_closed(const ClassicalState& state, const PhysicsConfig& phys) {
  if (state.p0 == 0.0) throw DomainError("free arrival time: p0 must be nonzero");
  return -phys.mu * state.q0 * lorentz_gamma(state.p0, phys) / state.p0;
}

double barrier_arrival_time_closed(const ClassicalState& state,
                                   const SquareBarrier& barrier,
                                   const PhysicsConfig& phys) {
  barrier.validate(phys);
  if (!(state.p0 > 0.0))
    throw DomainError("barrier arrival time: require p0 > 0 for arrival at the origin");
  const double gamma = lorentz_gamma(state.p0, phys);
  const double mu = phys.mu, c = phys.c;
  const double L = barrier.length();

  if (state.q0 > barrier.b) {
    // arrival side: no barrier crossed
    return free_arrival_time_closed(state, phys);
  }
  if (state.q0 >= barrier.a) {
    // launched on top: barrier stretch [q0, b] at the launch momentum, then
    // the interaction-free stretch [b, 0]
    const double t_plus = barrier_segment_time_plus(state.p0, barrier.V0, phys);
    return -mu * (state.q0 - barrier.b) * gamma / state.p0 +
           (-barrier.b / c) * t_plus;
  }
  // far side: free stretches of total length |q0| - L plus the barrier stretch
  const double t_minus = barrier_segment_time_minus(state.p0, barrier.V0, phys);
  return -mu * (state.q0 + L) * gamma / state.p0 + (L / c) * t_minus;
}

}  // namespace rtoa
