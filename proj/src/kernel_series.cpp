#include "kernel_series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace rtoa::detail {

namespace {

inline double to_d(kq_t x) { return static_cast<double>(x); }
inline kq_t qabs(kq_t x) { return x < 0 ? -x : x; }

constexpr double kEps128 = 1.9e-34;

}  // namespace

SeriesTable build_series_table(double beta, double xi_max_hint) {
  SeriesTable table;
  table.beta = beta;
  const double v = std::abs(2.0 * beta);  // j-sum tail ratio, = V0 / mu c^2

  // Size the (m, j) triangle: enough m for the xi range plus enough j-room
  // for the geometric tail at every kept n.
  const double lam = 2.0 * std::sqrt(std::abs(beta) * (1.0 + std::abs(beta)));
  const int n_need =
      static_cast<int>(std::ceil(0.75 * lam * std::max(xi_max_hint, 4.0))) + 40;
  const int j_need =
      (v > 1e-12) ? static_cast<int>(std::ceil(72.0 / -std::log(std::min(v, 0.97)))) + 8
                  : 4;
  const int M = std::min(560, n_need + j_need);

  const kq_t bq = static_cast<kq_t>(beta);

  // p_(m,j) = [w^j] sqrt(1+w) P^m,  q_(m,j) = [w^j] P^m,  P = sqrt(1+w)+beta.
  // Recurrences: q_m = p_(m-1) + beta q_(m-1);
  //              p_m = (1+w) q_(m-1) + beta p_(m-1).
  std::vector<std::vector<kq_t>> p(M + 1, std::vector<kq_t>(M + 1, kq_t(0)));
  std::vector<std::vector<kq_t>> q(M + 1, std::vector<kq_t>(M + 1, kq_t(0)));
  {
    kq_t b = 1.0;  // binom(1/2, j)
    for (int j = 0; j <= M; ++j) {
      p[0][j] = b;
      b *= (static_cast<kq_t>(0.5) - j) / (j + 1);
    }
    q[0][0] = 1.0;
  }
  for (int m = 1; m <= M; ++m) {
    for (int j = 0; j <= M; ++j) {
      q[m][j] = p[m - 1][j] + bq * q[m - 1][j];
      p[m][j] = q[m - 1][j] + (j > 0 ? q[m - 1][j - 1] : kq_t(0)) + bq * p[m - 1][j];
    }
  }

  // Diagonal coefficients c_(n+j, j) = beta^m/(m!)^2 C(2m,2j)(2j)! stepped by
  // c(m, j) = c(m-1, j-1) * beta * 2 (2m-1) / m.
  const int n_cap = std::max(8, M - j_need);
  table.d.assign(n_cap, kq_t(0));
  table.amp.assign(n_cap, 0.0);
  double ratio_seen = 0.0;

  for (int n = 0; n < n_cap; ++n) {
    kq_t c = 1.0;  // c(n, 0) = beta^n / (n!)^2
    for (int m = 1; m <= n; ++m) c *= bq / (static_cast<kq_t>(m) * m);
    kq_t dn = 0.0, amp = 0.0, prev_mag = 0.0;
    for (int j = 0; n + j <= M; ++j) {
      if (j > 0) {
        const int m = n + j;
        c *= bq * static_cast<kq_t>(2 * (2 * m - 1)) / m;
      }
      const kq_t term = ((j % 2) ? -c : c) * p[n + j][j];
      dn += term;
      const kq_t mag = qabs(term);
      amp += mag;
      if (j > 4 && to_d(mag) < 1e-36 * (std::abs(to_d(dn)) + 1e-40) && mag < prev_mag)
        break;
      if (j > 3 && prev_mag > kq_t(0)) {
        const double r = to_d(mag / prev_mag);
        if (r < 4.0) ratio_seen = std::max(ratio_seen, std::min(r, 0.999));
      }
      prev_mag = mag;
    }
    table.d[n] = dn;
    table.amp[n] = to_d(amp);
  }
  table.n_valid = n_cap;
  table.j_tail_ratio = ratio_seen;
  return table;
}

SeriesEval eval_series(const SeriesTable& table, double xi) {
  const kq_t x = static_cast<kq_t>(xi) * xi;  // series in xi^2
  kq_t sum = 0.0, amp_sum = 0.0, pow = 1.0;
  double tail = 0.0;
  int n = 0;
  for (; n < table.n_valid; ++n) {
    const kq_t term = table.d[n] * pow;
    sum += term;
    amp_sum += static_cast<kq_t>(table.amp[n]) * pow;
    const double mag = std::abs(to_d(term));
    if (n > 8 && mag < 1e-40 * std::max(1.0, std::abs(to_d(sum)))) {
      tail = mag;
      break;
    }
    pow *= x;
  }
  SeriesEval out;
  out.value = to_d(sum);
  double trunc = tail;
  if (n == table.n_valid && table.n_valid > 1) {
    // ran out of validated coefficients: bound by the last kept term
    trunc = std::abs(to_d(table.d[table.n_valid - 1] * pow)) * 4.0 + 1e-30;
  }
  out.abs_error = kEps128 * std::abs(to_d(amp_sum)) * 8.0 + trunc;
  return out;
}

double series_xi_limit(const SeriesTable& table, double abs_tol) {
  double lo = 0.0, hi = 4096.0;
  if (eval_series(table, hi).abs_error <= abs_tol) return hi;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (eval_series(table, mid).abs_error <= abs_tol)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

}  // namespace rtoa::detail
