#pragma once

#include <cmath>

#include "rtoa/errors.hpp"
#include "rtoa/units.hpp"

namespace rtoa {

// Square potential barrier V(q) = V0 on (a, b), zero elsewhere, placed on the
// left of the arrival point q = 0.
struct SquareBarrier {
  double a = -5.0;   // left edge
  double b = -3.0;   // right edge, a < b < 0
  double V0 = 0.5;   // height, 0 < V0 < mu c^2

  double length() const { return b - a; }

  void validate(const PhysicsConfig& phys) const {
    if (!(a < b && b < 0.0)) throw ConfigError("barrier: require a < b < 0");
    if (!(V0 > 0.0)) throw ConfigError("barrier: require V0 > 0");
    if (!(V0 < phys.mc2()))
      throw ConfigError("barrier: require V0 < mu c^2 (below the rest mass energy)");
  }
};

// Mean-coordinate regions of the barrier kernel. Region II is taken closed
// on [a, b]; the boundary set has measure zero in every integral.
enum class BarrierRegion { ArrivalSide, OnBarrier, FarSide };

inline BarrierRegion classify_eta(double eta, const SquareBarrier& barrier) {
  if (eta > barrier.b) return BarrierRegion::ArrivalSide;
  if (eta >= barrier.a) return BarrierRegion::OnBarrier;
  return BarrierRegion::FarSide;
}

}  // namespace rtoa
