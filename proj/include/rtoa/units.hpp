#pragma once

#include <cmath>

#include "rtoa/errors.hpp"

namespace rtoa {

// Mass, light speed and Planck scales for one computation. The default is
// natural units (hbar = mu = c = 1); every formula in the library is written
// with the scales explicit so that limit studies can move c or hbar alone.
struct PhysicsConfig {
  double mu = 1.0;
  double c = 1.0;
  double hbar = 1.0;

  static PhysicsConfig natural() { return {}; }

  void validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError("units: require mu > 0");
    if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError("units: require c > 0");
    if (!(hbar > 0.0) || !std::isfinite(hbar)) throw ConfigError("units: require hbar > 0");
  }

  double mc() const { return mu * c; }              // momentum scale
  double mc2() const { return mu * c * c; }         // rest-mass energy
  double compton() const { return hbar / (mu * c); }  // reduced Compton length
};

}  // namespace rtoa
