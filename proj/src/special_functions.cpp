#include "rtoa/special_functions.hpp"

#include <cmath>
#include <numbers>

#include "rtoa/errors.hpp"
#include "gauss_rules.hpp"

namespace rtoa {

namespace {

#if defined(__SIZEOF_FLOAT128__)
using quad_t = __float128;
#else
using quad_t = long double;
#endif

struct QComplex {
  quad_t re = 0.0, im = 0.0;
};
inline QComplex operator+(QComplex a, QComplex b) { return {a.re + b.re, a.im + b.im}; }
inline QComplex operator*(QComplex a, QComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline QComplex scale(QComplex a, quad_t s) { return {a.re * s, a.im * s}; }
inline double qabs2(QComplex a) {
  return static_cast<double>(a.re * a.re + a.im * a.im);
}

// Power series sum z^n/(n!)^2 in extended precision. Valid while the
// cancellation e^(2 sqrt|z|) stays far above the extended epsilon.
std::complex<double> series_0f1(std::complex<double> z) {
  QComplex zq{static_cast<quad_t>(z.real()), static_cast<quad_t>(z.imag())};
  QComplex term{1.0, 0.0}, sum{1.0, 0.0};
  for (int n = 1; n <= 400; ++n) {
    term = scale(term * zq, static_cast<quad_t>(1.0) / (static_cast<quad_t>(n) * n));
    sum = sum + term;
    if (qabs2(term) < 1e-68 * std::max(qabs2(sum), 1e-60)) break;
  }
  return {static_cast<double>(sum.re), static_cast<double>(sum.im)};
}

constexpr double kOverflowExp = 700.0;

}  // namespace

double hyp0f1_one(double z) {
  if (z == 0.0) return 1.0;
  if (!std::isfinite(z)) throw DomainError("hyp0f1_one: argument must be finite");
  const double x = 2.0 * std::sqrt(std::abs(z));
  if (z > 0.0 && x > kOverflowExp)
    throw OverflowError("hyp0f1_one: I0 argument overflows", x / std::numbers::ln10);
  if (x <= 16.0) return series_0f1({z, 0.0}).real();
  return (z > 0.0) ? std::cyl_bessel_i(0.0, x) : std::cyl_bessel_j(0.0, x);
}

std::complex<double> hyp0f1_one(std::complex<double> z) {
  if (z.imag() == 0.0) return {hyp0f1_one(z.real()), 0.0};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw DomainError("hyp0f1_one: argument must be finite");
  const std::complex<double> w = 2.0 * std::sqrt(z);  // principal branch
  if (std::abs(w.real()) > kOverflowExp)
    throw OverflowError("hyp0f1_one: I0 argument overflows",
                        std::abs(w.real()) / std::numbers::ln10);
  if (std::abs(w) <= 48.0) return series_0f1(z);
  return detail::hyp0f1_one_damped(z, 0.0);
}

namespace detail {

std::complex<double> hyp0f1_one_damped(std::complex<double> z, double damp) {
  // 0F1(;1;z) = I0(2 sqrt z) = (1/pi) integral_0^pi exp(2 sqrt(z) cos t) dt.
  // The damping is folded into the exponent so neither factor is formed.
  const std::complex<double> w = 2.0 * std::sqrt(z);
  if (std::abs(w) <= 40.0 && damp < 500.0)
    return series_0f1(z) * std::exp(-damp);
  if (std::abs(w.real()) - damp > kOverflowExp)
    throw OverflowError("hyp0f1_one_damped: damped I0 still overflows",
                        (std::abs(w.real()) - damp) / std::numbers::ln10);
  const double wmag = std::abs(w);
  int n = 64;
  while (n < 48 + 1.3 * wmag && n < 4096) n *= 2;
  if (wmag > 3000.0)
    throw DomainError("hyp0f1_one_damped: argument too large for the integral path");
  const auto& rule = gauss_legendre(n);
  const double half = std::numbers::pi / 2.0;
  std::complex<double> sum{};
  for (int i = 0; i < n; ++i) {
    const double t = half + half * rule.nodes[i];
    const std::complex<double> e = w * std::cos(t) - damp;
    if (e.real() < -745.0) continue;
    sum += rule.weights[i] * std::exp(e);
  }
  return sum * (half / std::numbers::pi);
}

}  // namespace detail

}  // namespace rtoa
