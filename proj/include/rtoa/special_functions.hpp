#pragma once

#include <complex>

namespace rtoa {

// Confluent limit function 0F1(;1;z) = sum_n z^n / (n!)^2.
//
// Equal to I0(2 sqrt(z)) for z >= 0 and J0(2 sqrt(-z)) for z <= 0. Small and
// complex arguments run through the power series with compensated summation;
// large real arguments use the Bessel identities. Throws OverflowError when
// the result exceeds the representable range.
std::complex<double> hyp0f1_one(std::complex<double> z);
double hyp0f1_one(double z);

namespace detail {

// e^(-damp) * 0F1(;1;z), evaluated without forming either huge factor.
// Needed by the contour kernel route, where the integrand is exponentially
// large but the damped product is moderate.
std::complex<double> hyp0f1_one_damped(std::complex<double> z, double damp);

}  // namespace detail

}  // namespace rtoa
