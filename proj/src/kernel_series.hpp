#pragma once

#include <vector>

namespace rtoa::detail {

#if defined(__SIZEOF_FLOAT128__)
using kq_t = __float128;
#else
using kq_t = long double;
#endif

// Resummed power series for the contour factor of the barrier kernel.
//
// In the dimensionless variables beta = V0 / (2 mu c^2) (signed) and
// xi = mu c |zeta| / hbar the factor is an even entire-like series
//   F(xi) = sum_n d_n xi^(2n),
//   d_n   = sum_j (-1)^j beta^(n+j) / ((n+j)!)^2 * C(2n+2j, 2j) (2j)! * p_(n+j,j),
// where p_(m,j) = [w^j] sqrt(1+w) (sqrt(1+w) + beta)^m. The j-sum converges
// geometrically with ratio |2 beta| < 1; it resums the y-integral of the
// closed contour representation, which itself diverges once the integrand
// growth rate passes 1. Everything is carried in quad precision because the
// evaluation cancels like a Bessel series of argument ~ 2 sqrt|beta| xi.
struct SeriesTable {
  double beta = 0.0;
  int n_valid = 0;                // usable powers of xi^2
  std::vector<kq_t> d;            // coefficients d_n, n = 0 .. n_valid-1
  std::vector<double> amp;        // sum over |terms| per n (cancellation gauge)
  double j_tail_ratio = 0.0;      // measured geometric ratio of the j-sum
};

SeriesTable build_series_table(double beta, double xi_max_hint);

struct SeriesEval {
  double value = 0.0;
  double abs_error = 0.0;  // rounding amplification + truncation bound
};

SeriesEval eval_series(const SeriesTable& table, double xi);

// Largest xi for which eval_series stays below the given absolute error.
double series_xi_limit(const SeriesTable& table, double abs_tol);

}  // namespace rtoa::detail
