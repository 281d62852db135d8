#pragma once

#include <cmath>

#include "rtoa/barrier.hpp"
#include "rtoa/units.hpp"

namespace rtoa {

// Gaussian incident state psi(q) = e^{i k0 q} (2 pi sigma^2)^(-1/4)
//                                  exp(-(q - q0)^2 / 4 sigma^2).
// The envelope phi carries no mean momentum; k0 is the carrier.
struct GaussianPacket {
  double q0 = -30.0;   // centre
  double sigma = 5.0;  // position spread
  double k0 = 2.0;     // carrier wavenumber

  static constexpr double kSupportSigmas = 8.0;

  void validate() const {
    if (!(sigma > 0.0)) throw ConfigError("packet: require sigma > 0");
    if (!std::isfinite(q0) || !std::isfinite(k0))
      throw ConfigError("packet: q0 and k0 must be finite");
  }

  // Group velocity hbar k0 / mu.
  double group_velocity(const PhysicsConfig& phys = {}) const {
    return phys.hbar * k0 / phys.mu;
  }

  // Envelope overlap Phi(zeta) = integral phi*(eta - zeta/2) phi(eta + zeta/2) d eta.
  double overlap(double zeta) const {
    return std::exp(-zeta * zeta / (8.0 * sigma * sigma));
  }

  // integral eta phi*(eta - zeta/2) phi(eta + zeta/2) d eta; the odd part of
  // the Gaussian product integrates away, leaving the centre times the overlap.
  double weighted_overlap(double zeta) const { return q0 * overlap(zeta); }

  // |psi~(k)|^2 = sqrt(2 sigma^2 / pi) exp(-2 sigma^2 (k - k0)^2); unit mass.
  double momentum_density(double k) const {
    const double d = k - k0;
    return std::sqrt(2.0 * sigma * sigma / M_PI) *
           std::exp(-2.0 * sigma * sigma * d * d);
  }

  // Probability mass of the momentum density above the cutoff kappa.
  double momentum_mass_above(double kappa) const {
    return 0.5 * std::erfc(std::sqrt(2.0) * sigma * (kappa - k0));
  }

  // Position-density mass to the right of x (Gaussian tail of |phi|^2).
  double position_mass_above(double x) const {
    return 0.5 * std::erfc((x - q0) / (std::sqrt(2.0) * sigma));
  }

  // The far-side kernel formulas require the packet support to stay out of
  // the barrier: |q0 - a| >= 8 sigma, i.e. a tail mass below ~6e-16.
  bool supports_far_side(const SquareBarrier& barrier) const {
    return q0 < barrier.a && (barrier.a - q0) >= kSupportSigmas * sigma;
  }

  void require_far_side(const SquareBarrier& barrier) const {
    if (!supports_far_side(barrier))
      throw ConfigError(
          "packet: support condition violated, require q0 + 8 sigma <= barrier.a");
  }
};

// Extension point for non-Gaussian packets. The envelope must be smooth and
// normalised; overlap() defaults to direct quadrature of the shifted product.
class PacketModel {
 public:
  virtual ~PacketModel() = default;
  virtual double amplitude(double q) const = 0;        // envelope phi(q)
  virtual double centre() const = 0;
  virtual double width() const = 0;
  virtual double overlap(double zeta) const;           // numerical default
  virtual double weighted_overlap(double zeta) const;  // numerical default
};

class GaussianModel final : public PacketModel {
 public:
  explicit GaussianModel(const GaussianPacket& p) : p_(p) {}
  double amplitude(double q) const override {
    const double s2 = p_.sigma * p_.sigma;
    return std::pow(2.0 * M_PI * s2, -0.25) *
           std::exp(-(q - p_.q0) * (q - p_.q0) / (4.0 * s2));
  }
  double centre() const override { return p_.q0; }
  double width() const override { return p_.sigma; }

 private:
  GaussianPacket p_;
};

}  // namespace rtoa
