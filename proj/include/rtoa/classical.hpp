#pragma once

#include <vector>

#include "rtoa/barrier.hpp"
#include "rtoa/units.hpp"

namespace rtoa {

struct ClassicalState {
  double q0 = -10.0;  // initial position
  double p0 = 1.0;    // initial momentum, nonzero for arrival-time queries
};

// Relativistic dispersion factor sqrt(1 + p^2 / (mu c)^2) >= 1.
double lorentz_gamma(double p, const PhysicsConfig& phys = {});

// Piecewise-constant potential: value(q) is constant between breakpoints.
// values has one more entry than breaks; breaks must be strictly increasing.
struct PiecewisePotential {
  std::vector<double> breaks;
  std::vector<double> values;

  static PiecewisePotential free_space() { return {{}, {0.0}}; }
  static PiecewisePotential from_barrier(const SquareBarrier& barrier) {
    return {{barrier.a, barrier.b}, {0.0, barrier.V0, 0.0}};
  }
  double operator()(double q) const;
};

// Classical relativistic time of arrival at arrival_x, integrated segment by
// segment (each constant-potential segment has a constant integrand, so the
// quadrature is exact). Throws ForbiddenRegionError when a segment is
// classically inaccessible.
double arrival_time_quadrature(const ClassicalState& state,
                               const PiecewisePotential& potential,
                               double arrival_x, const PhysicsConfig& phys = {});

// Per-unit-length crossing times entering the closed barrier forms:
// t_pm = gamma * ((gamma +- V0/mu c^2)^2 - 1)^(-1/2).
double barrier_segment_time_plus(double p, double V0, const PhysicsConfig& phys = {});
double barrier_segment_time_minus(double p, double V0, const PhysicsConfig& phys = {});

// Free arrival time -mu q0 gamma / p0 for arrival at the origin.
double free_arrival_time_closed(const ClassicalState& state,
                                const PhysicsConfig& phys = {});

// Closed-form barrier arrival time at the origin, dispatched on the region
// that contains q0. Requires the above-barrier condition when the trajectory
// crosses the barrier.
double barrier_arrival_time_closed(const ClassicalState& state,
                                   const SquareBarrier& barrier,
                                   const PhysicsConfig& phys = {});

}  // namespace rtoa
