#include "rtoa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gauss_rules.hpp"

namespace rtoa {

namespace detail {

#if defined(__SIZEOF_FLOAT128__)
using quad_t = __float128;
#else
using quad_t = long double;
#endif

double neville_to_zero(const std::vector<double>& x, const std::vector<double>& y,
                       double* spread) {
  const std::size_t n = x.size();
  std::vector<double> col(y);
  double prev = col[0];
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      // value at 0 of the polynomial through points i .. i+level
      col[i] = (x[i + level] * col[i] - x[i] * col[i + 1]) / (x[i + level] - x[i]);
    }
    prev = (level + 1 < n) ? col[0] : prev;
  }
  if (spread) *spread = std::abs(col[0] - prev);
  return col[0];
}

double sine_integral_si(double x) {
  if (x < 0.0) return -sine_integral_si(-x);
  if (x == 0.0) return 0.0;
  if (x <= 30.0) {
    // power series in extended precision; terms peak near e^x / x
    quad_t sum = 0.0, term = x;
    const quad_t x2 = static_cast<quad_t>(x) * x;
    for (int n = 0; n < 200; ++n) {
      sum += term / (2 * n + 1);
      term *= -x2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
      double mag = std::abs(static_cast<double>(term));
      if (mag < 1e-25 * std::max(1.0, std::abs(static_cast<double>(sum)))) break;
    }
    return static_cast<double>(sum);
  }
  // asymptotic form, truncated at its smallest term
  double p = 0.0, q = 0.0, term = 1.0;
  const double inv2 = 1.0 / (x * x);
  double fac = 1.0;
  for (int n = 0; n < 12; ++n) {
    const double tp = ((n % 2) ? -1.0 : 1.0) * fac * std::pow(inv2, n);
    fac *= (2.0 * n + 1.0);
    const double tq = ((n % 2) ? -1.0 : 1.0) * fac * std::pow(inv2, n);
    fac *= (2.0 * n + 2.0);
    if (std::abs(tp) > std::abs(term) && n > 1) break;  // past the optimal term
    p += tp;
    q += tq;
    term = tp;
  }
  return std::numbers::pi / 2.0 - std::cos(x) / x * p - std::sin(x) / (x * x) * q;
}

RealResult panel_integral(const std::function<double(double)>& f, double a,
                          double b, double panel_width) {
  RealResult out;
  if (!(b > a)) return out;
  const auto& lo = gauss_legendre(8);
  const auto& hi = gauss_legendre(16);
  const int npanels = std::max<int>(1, static_cast<int>(std::ceil((b - a) / panel_width)));
  const double h = (b - a) / npanels;
  for (int p = 0; p < npanels; ++p) {
    const double x0 = a + p * h, mid = x0 + 0.5 * h, half = 0.5 * h;
    double shi = 0.0, slo = 0.0;
    for (std::size_t i = 0; i < hi.nodes.size(); ++i)
      shi += hi.weights[i] * f(mid + half * hi.nodes[i]);
    for (std::size_t i = 0; i < lo.nodes.size(); ++i)
      slo += lo.weights[i] * f(mid + half * lo.nodes[i]);
    out.value += half * shi;
    out.abs_error += std::abs(half * (shi - slo));
  }
  if (!std::isfinite(out.value))
    throw AccuracyError("panel_integral: non-finite result", out.value, out.abs_error);
  return out;
}

}  // namespace detail

ComplexResult contour_circle_integral(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    double radius, const QuadratureSpec& spec) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw DomainError("contour_circle_integral: radius must be positive and finite");
  using C = std::complex<double>;
  const int max_doublings = 7;
  C prev{};
  double prev_diff = std::numeric_limits<double>::infinity();
  double fscale = 0.0;
  int n = spec.contour_nodes;
  for (int pass = 0; pass <= max_doublings; ++pass, n *= 2) {
    C sum{};
    for (int j = 0; j < n; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / n;
      const C u = std::polar(1.0, theta);
      const C fz = f(radius * u);
      fscale = std::max(fscale, std::abs(fz));
      sum += fz * u;
    }
    const C cur = sum * (radius / n);
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
      throw AccuracyError("contour_circle_integral: non-finite trapezoid sum",
                          std::abs(cur), std::abs(prev));
    if (pass > 0) {
      const double diff = std::abs(cur - prev);
      const double floor = 64.0 * std::numeric_limits<double>::epsilon() * radius * fscale;
      if (diff <= std::max(spec.rel_tolerance * std::abs(cur), floor))
        return {cur, std::max(diff, floor)};
      prev_diff = diff;
    }
    prev = cur;
  }
  throw AccuracyError("contour_circle_integral: no convergence after node doubling",
                      std::abs(prev), prev_diff);
}

namespace {

// Exponential growth rate of |g| from samples at geometric y points. Used to
// reject divergent Laguerre integrands and to pick the stretch map.
double sampled_growth_rate(const std::function<std::complex<double>(double)>& g) {
  const double ys[] = {4.0, 8.0, 16.0, 32.0, 48.0, 64.0};
  double rate = -std::numeric_limits<double>::infinity();
  double prev_log = std::log(std::max(std::abs(g(ys[0])), 1e-300));
  double prev_y = ys[0];
  for (std::size_t i = 1; i < std::size(ys); ++i) {
    const double cur_log = std::log(std::max(std::abs(g(ys[i])), 1e-300));
    if (i + 2 >= std::size(ys))  // trust only the asymptotic pairs
      rate = std::max(rate, (cur_log - prev_log) / (ys[i] - prev_y));
    prev_log = cur_log;
    prev_y = ys[i];
  }
  return rate;
}

std::complex<double> laguerre_pass(const std::function<std::complex<double>(double)>& g,
                                   int n, double stretch) {
  const auto& rule = rtoa::detail::gauss_laguerre(n);
  std::complex<double> sum{};
  for (int i = 0; i < n; ++i) {
    const double u = rule.nodes[i];
    if (u > 50.0) break;  // weight below 2e-22; keeps stretched integrands finite
    const double y = u * stretch;
    // e^-y g(y) = e^-u [e^-(y-u) g(y)]; the bracket is evaluated as one factor
    sum += rule.weights[i] * (g(y) * std::exp(u - y)) * stretch;
  }
  return sum;
}

}  // namespace

ComplexResult laguerre_integral(const std::function<std::complex<double>(double)>& g,
                                const QuadratureSpec& spec) {
  const double rate = sampled_growth_rate(g);
  if (rate >= 1.0)
    throw DivergenceError(
        "laguerre_integral: integrand growth rate >= 1, the weighted integral "
        "diverges (adjust the contour radius or the barrier parameters)",
        rate);
  // Map y = u/(1-a) so the residual growth e^{(rate-1)y} becomes e^-u.
  const double a = std::clamp(rate + 0.02, 0.0, 0.97);
  const double stretch = 1.0 / (1.0 - a);
  int n = spec.laguerre_nodes;
  std::complex<double> prev = laguerre_pass(g, n, stretch);
  const int max_doublings = 4;
  double diff = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < max_doublings; ++pass) {
    n *= 2;
    const std::complex<double> cur = laguerre_pass(g, n, stretch);
    diff = std::abs(cur - prev);
    if (!std::isfinite(cur.real()) || !std::isfinite(cur.imag()))
      throw AccuracyError("laguerre_integral: non-finite sum", std::abs(cur),
                          std::abs(prev));
    if (diff <= spec.rel_tolerance * std::max(std::abs(cur), 1e-300) ||
        diff <= 1e-15 * std::abs(cur) + 1e-280) {
      return {cur, diff};
    }
    prev = cur;
  }
  return {prev, diff};  // best effort; caller sees the estimate
}

RealResult branch_cut_integral(const std::function<double(double)>& h,
                               double decay_rate, const QuadratureSpec& spec) {
  if (!(decay_rate > 0.0))
    throw DomainError(
        "branch_cut_integral: decay_rate must be > 0 (zeta = 0 evaluations "
        "must use the small-zeta asymptotic path)");
  const double x_cut =
      std::min(spec.branch_cut_truncation, -std::log(spec.rel_tolerance * 1e-3));
  const double u_max = std::sqrt(x_cut / decay_rate);
  // y = 1 + u^2 removes the sqrt(y^2-1) end-point singularity exactly.
  const auto integrand = [&](double u) {
    const double y = 1.0 + u * u;
    return 2.0 * u * u * std::sqrt(u * u + 2.0) / y *
           std::exp(-decay_rate * y) * h(y);
  };
  const double width = std::min(0.35 * u_max, 0.8 / std::sqrt(std::max(decay_rate, 1.0)));
  RealResult res = detail::panel_integral(integrand, 0.0, u_max, width);
  if (res.abs_error > spec.rel_tolerance * std::max(std::abs(res.value), 1e-300)) {
    const RealResult fine = detail::panel_integral(integrand, 0.0, u_max, width * 0.5);
    res.abs_error = std::abs(fine.value - res.value) + fine.abs_error;
    res.value = fine.value;
  }
  // truncated tail bound: |h| near the cut end times the remaining weight
  res.abs_error += std::exp(-x_cut - decay_rate) *
                   std::abs(h(1.0 + u_max * u_max)) / decay_rate;
  return res;
}

namespace {

struct SineParts {
  double value = 0.0;
  double err = 0.0;
};

// One damped sweep integral_0^T sin(kz) G(z) e^(-eps z) dz.
SineParts damped_sweep(const std::function<double(double)>& G, double k, double eps,
                       double T, double width) {
  const auto f = [&](double z) { return std::sin(k * z) * G(z) * std::exp(-eps * z); };
  RealResult r = rtoa::detail::panel_integral(f, 0.0, T, width);
  return {r.value, r.abs_error};
}

}  // namespace

RealResult fourier_sine_integral(const std::function<double(double)>& F, double k,
                                 const QuadratureSpec& spec,
                                 const SineTransformOptions& opt) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw DomainError("fourier_sine_integral: require k > 0");
  const double T = spec.zeta_truncation * opt.length_scale;
  const double keff = k + std::max(opt.osc_hint, 0.0);
  const int panels_per_period =
      std::max(1, (spec.nodes_per_oscillation + 15) / 16);
  double width = (2.0 * std::numbers::pi / keff) / panels_per_period;
  width = std::min({width, 0.75 * opt.length_scale, T / 4.0});

  RealResult out;

  // Constant part: Abel-regularised tail is exact, cos(kT)/k.
  if (opt.asymptotic_const != 0.0) {
    const auto f = [&](double z) { return std::sin(k * z) * opt.asymptotic_const; };
    RealResult head = detail::panel_integral(f, 0.0, T, width);
    out.value += head.value + opt.asymptotic_const * std::cos(k * T) / k;
    out.abs_error += head.abs_error;
  }

  // 1/z part: Si(kT) over the head plus the pi/2 - Si(kT) tail, i.e. the
  // Dirichlet value exactly. Assembled through Si so both pieces stay finite.
  if (opt.singular_coeff != 0.0) {
    const double head = detail::sine_integral_si(k * T);
    out.value += opt.singular_coeff * (head + (std::numbers::pi / 2.0 - head));
  }

  // Remaining part of F.
  const auto G = [&](double z) {
    double g = F(z);
    if (opt.singular_coeff != 0.0) g -= opt.singular_coeff / z;
    g -= opt.asymptotic_const;
    return g;
  };

  if (!opt.force_abel) {
    const auto f = [&](double z) { return std::sin(k * z) * G(z); };
    RealResult head = detail::panel_integral(f, 0.0, T, width);
    out.value += head.value;
    out.abs_error += head.abs_error;
    return out;
  }

  // Abel ladder: damped integrals extrapolated to zero damping.
  std::vector<double> eps(spec.abel_damping);
  std::vector<double> vals;
  vals.reserve(eps.size());
  double sweep_err = 0.0;
  for (double e : eps) {
    const double Te = std::max(T, -std::log(spec.rel_tolerance * 1e-3) / e);
    SineParts p = damped_sweep(G, k, e, Te, width);
    vals.push_back(p.value);
    sweep_err = std::max(sweep_err, p.err);
  }
  double spread = 0.0;
  const double limit = detail::neville_to_zero(eps, vals, &spread);
  if (spread > spec.rel_tolerance * std::max(1.0, std::abs(limit)) + sweep_err)
    throw AccuracyError("fourier_sine_integral: Abel extrapolation spread exceeds tolerance",
                        limit, spread);
  out.value += limit;
  out.abs_error += spread + sweep_err;
  return out;
}

RealResult fourier_sine_integral(const std::function<double(double)>& F, double k,
                                 const QuadratureSpec& spec) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw DomainError("fourier_sine_integral: require k > 0");
  SineTransformOptions opt;
  const double T = spec.zeta_truncation * opt.length_scale;

  // Probe the small-z side for a 1/z component.
  const double z0 = 1e-7;
  const double p1 = F(z0) * z0, p2 = F(2.0 * z0) * (2.0 * z0);
  if (std::abs(p1) > 1e-8 && std::abs(p1 - p2) < 1e-3 * std::abs(p1))
    opt.singular_coeff = 0.5 * (p1 + p2);

  // Probe the far side: decayed, constant, or genuinely non-decaying.
  const double f1 = F(0.82 * T) - opt.singular_coeff / (0.82 * T);
  const double f2 = F(0.93 * T) - opt.singular_coeff / (0.93 * T);
  const double f3 = F(T) - opt.singular_coeff / T;
  const double far = std::max({std::abs(f1), std::abs(f2), std::abs(f3)});
  const double near = std::abs(F(0.05 * T)) + std::abs(opt.singular_coeff) + 1e-30;
  if (far > 1e-13 * near) {
    if (std::abs(f1 - f3) < 1e-6 * std::max(1.0, std::abs(f3)) &&
        std::abs(f2 - f3) < 1e-6 * std::max(1.0, std::abs(f3))) {
      opt.asymptotic_const = f3;
    } else {
      opt.force_abel = true;
    }
  }
  return fourier_sine_integral(F, k, spec, opt);
}

}  // namespace rtoa
