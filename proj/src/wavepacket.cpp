#include "rtoa/wavepacket.hpp"

#include "rtoa/quadrature.hpp"

namespace rtoa {

double PacketModel::overlap(double zeta) const {
  const double c = centre(), w = width();
  const auto f = [&](double eta) {
    return amplitude(eta - 0.5 * zeta) * amplitude(eta + 0.5 * zeta);
  };
  return detail::panel_integral(f, c - 10.0 * w, c + 10.0 * w, 0.5 * w).value;
}

double PacketModel::weighted_overlap(double zeta) const {
  const double c = centre(), w = width();
  const auto f = [&](double eta) {
    return eta * amplitude(eta - 0.5 * zeta) * amplitude(eta + 0.5 * zeta);
  };
  return detail::panel_integral(f, c - 10.0 * w, c + 10.0 * w, 0.5 * w).value;
}

}  // namespace rtoa
