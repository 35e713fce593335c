// Copyright 2026 The rvgen Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rvg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "rvg/errors.hpp"

namespace rvg {
namespace {

// Gauss-Kronrod 7-15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const double fsum = f(c - x) + f(c + x);
    kron += kWgk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  kron *= h;
  gauss *= h;
  return {kron, std::fabs(kron - gauss)};
}

struct Panel {
  double lo, hi, integral, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double adaptive(const std::function<double(double)>& f, double lo, double hi,
                const QuadratureOptions& opts) {
  if (!(lo < hi)) throw oracle_error("quadrature: empty or inverted interval");
  std::priority_queue<Panel> heap;
  double total = 0.0, err = 0.0;
  const int n0 = std::max(1, opts.initial_panels);
  for (int i = 0; i < n0; ++i) {
    const double a = lo + (hi - lo) * i / n0;
    const double b = lo + (hi - lo) * (i + 1) / n0;
    const PanelResult r = gk15(f, a, b);
    heap.push({a, b, r.integral, r.error});
    total += r.integral;
    err += r.error;
  }
  std::size_t panels = static_cast<std::size_t>(n0);
  while (err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (panels >= opts.max_panels || heap.empty())
      throw oracle_error("quadrature: did not converge within panel budget");
    const Panel worst = heap.top();
    heap.pop();
    total -= worst.integral;
    err -= worst.error;
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi)
      throw oracle_error("quadrature: interval collapsed without convergence");
    for (const auto& [a, b] : {std::pair{worst.lo, mid}, std::pair{mid, worst.hi}}) {
      const PanelResult r = gk15(f, a, b);
      heap.push({a, b, r.integral, r.error});
      total += r.integral;
      err += r.error;
    }
    ++panels;
  }
  return total;
}

// Peak of log_f over a coarse scan; only used as an exponent offset, so a
// rough value is fine.
double scan_log_peak(const std::function<double(double)>& log_f, double lo, double hi) {
  double peak = -std::numeric_limits<double>::infinity();
  const int kScan = 513;
  for (int i = 1; i < kScan; ++i) {
    const double v = log_f(lo + (hi - lo) * i / kScan);
    if (std::isfinite(v) && v > peak) peak = v;
  }
  if (!std::isfinite(peak)) throw oracle_error("quadrature: log integrand is -inf everywhere");
  return peak;
}

// Expands [center - k*scale, center + k*scale] until log_f is 60 nats below
// its running peak on both sides (or the window stops growing the integral).
std::pair<double, double> truncate_line(const std::function<double(double)>& log_f, double center,
                                        double scale) {
  if (!(scale > 0.0) || !std::isfinite(center))
    throw oracle_error("quadrature: bad center/scale for full-line integral");
  double peak = log_f(center);
  double lo = center, hi = center;
  const double kDrop = 60.0;
  for (int side = 0; side < 2; ++side) {
    double step = scale;
    double x = center;
    for (int i = 0; i < 200; ++i) {
      x += (side == 0 ? -step : step);
      const double v = log_f(x);
      if (std::isfinite(v) && v > peak) peak = v;
      if (std::isfinite(v) && v > peak - kDrop) {
        step *= 1.5;
        continue;
      }
      // one confirmation point further out, in case of multimodality
      const double x2 = x + (side == 0 ? -4.0 * step : 4.0 * step);
      const double v2 = log_f(x2);
      if (std::isfinite(v2) && v2 > peak - kDrop) {
        x = x2;
        step *= 1.5;
        continue;
      }
      break;
    }
    (side == 0 ? lo : hi) = x;
  }
  return {lo, hi};
}

}  // namespace

double quadrature_integrate_signed(const std::function<double(double)>& f, double lo, double hi,
                                   const QuadratureOptions& opts) {
  return adaptive(f, lo, hi, opts);
}

double quadrature_integrate(const std::function<double(double)>& log_f, double lo, double hi,
                            const QuadratureOptions& opts) {
  const double offset = scan_log_peak(log_f, lo, hi);
  const double scaled =
      adaptive([&](double x) { return std::exp(log_f(x) - offset); }, lo, hi, opts);
  return scaled * std::exp(offset);
}

double log_quadrature_integrate(const std::function<double(double)>& log_f, double lo, double hi,
                                const QuadratureOptions& opts) {
  const double offset = scan_log_peak(log_f, lo, hi);
  const double scaled =
      adaptive([&](double x) { return std::exp(log_f(x) - offset); }, lo, hi, opts);
  if (!(scaled > 0.0)) throw oracle_error("log quadrature: nonpositive integral");
  return offset + std::log(scaled);
}

double quadrature_integrate_line(const std::function<double(double)>& log_f, double center,
                                 double scale, const QuadratureOptions& opts) {
  const auto [lo, hi] = truncate_line(log_f, center, scale);
  return quadrature_integrate(log_f, lo, hi, opts);
}

double log_quadrature_integrate_line(const std::function<double(double)>& log_f, double center,
                                     double scale, const QuadratureOptions& opts) {
  const auto [lo, hi] = truncate_line(log_f, center, scale);
  return log_quadrature_integrate(log_f, lo, hi, opts);
}

double NumericCdf::operator()(double x) const {
  if (x <= knots.front()) return 0.0;
  if (x >= knots.back()) return 1.0;
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
  const double w = (x - knots[i]) / (knots[i + 1] - knots[i]);
  return values[i] + w * (values[i + 1] - values[i]);
}

NumericCdf numeric_cdf(const std::function<double(double)>& log_f, double lo, double hi,
                       std::size_t cells, const QuadratureOptions& opts) {
  if (cells < 16) throw oracle_error("numeric_cdf: too few cells");
  const double offset = scan_log_peak(log_f, lo, hi);
  const auto f = [&](double x) { return std::exp(log_f(x) - offset); };
  QuadratureOptions cell_opts = opts;
  cell_opts.initial_panels = 1;
  cell_opts.abs_tol = opts.abs_tol / static_cast<double>(cells);

  NumericCdf out;
  out.knots.resize(cells + 1);
  out.values.resize(cells + 1);
  for (std::size_t i = 0; i <= cells; ++i) out.knots[i] = lo + (hi - lo) * i / cells;
  out.values[0] = 0.0;
  for (std::size_t i = 0; i < cells; ++i)
    out.values[i + 1] = out.values[i] + adaptive(f, out.knots[i], out.knots[i + 1], cell_opts);
  const double total = out.values[cells];
  if (!(total > 0.0)) throw oracle_error("numeric_cdf: zero total mass");
  for (auto& v : out.values) v /= total;
  return out;
}

double ks_asymptotic_pvalue(double statistic, double effective_n) {
  const double sq = std::sqrt(effective_n);
  const double lambda = (sq + 0.12 + 0.11 / sq) * statistic;
  double p = 0.0;
  for (int k = 1; k <= 101; ++k) {
    const double term = 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
    p += term;
    if (std::fabs(term) < 1e-12) break;
  }
  return std::clamp(p, 0.0, 1.0);
}

namespace {

double ks_statistic_sorted(const std::vector<double>& sorted,
                           const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double fi = cdf(sorted[i]);
    d = std::max(d, std::max((i + 1) / n - fi, fi - i / n));
  }
  return d;
}

}  // namespace

KsResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf) {
  if (samples.size() < 100) throw oracle_error("ks_test: need at least 100 samples");
  std::sort(samples.begin(), samples.end());
  const double d = ks_statistic_sorted(samples, cdf);
  return {d, ks_asymptotic_pvalue(d, static_cast<double>(samples.size()))};
}

KsResult ks_test_quadrature(std::vector<double> samples,
                            const std::function<double(double)>& log_f, double lo, double hi) {
  if (samples.size() < 100) throw oracle_error("ks_test_quadrature: need at least 100 samples");
  std::sort(samples.begin(), samples.end());
  if (samples.front() < lo || samples.back() > hi)
    throw oracle_error("ks_test_quadrature: samples outside stated support");

  const double offset = scan_log_peak(log_f, lo, hi);
  const auto f = [&](double x) { return std::exp(log_f(x) - offset); };
  QuadratureOptions tail_opts;
  tail_opts.abs_tol = 1e-12;
  tail_opts.initial_panels = 8;

  // cumulative mass at each order statistic; endpoint pieces adaptively (they
  // may contain integrable singularities), interior gaps with a single
  // Kronrod panel each.
  std::vector<double> cum(samples.size());
  double acc = adaptive(f, lo, samples.front(), tail_opts);
  cum[0] = acc;
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (samples[i] > samples[i - 1]) acc += gk15(f, samples[i - 1], samples[i]).integral;
    cum[i] = acc;
  }
  const double total = acc + adaptive(f, samples.back(), hi, tail_opts);
  if (!(total > 0.0)) throw oracle_error("ks_test_quadrature: zero total mass");

  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double fi = cum[i] / total;
    d = std::max(d, std::max((i + 1) / n - fi, fi - i / n));
  }
  return {d, ks_asymptotic_pvalue(d, n)};
}

KsResult ks_test_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 100 || b.size() < 100)
    throw oracle_error("ks_test_two_sample: need at least 100 samples per side");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::fabs(i / na - j / nb));
  }
  return {d, ks_asymptotic_pvalue(d, na * nb / (na + nb))};
}

namespace {

// Regularized incomplete gamma: series for the lower part, Lentz continued
// fraction for the upper part.
double lower_gamma_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int k = 1; k < 10000; ++k) {
    term *= x / (s + k);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
  }
  return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

double upper_gamma_cf(double s, double x) {
  const double tiny = 1e-300;
  double b = x + 1.0 - s, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int k = 1; k < 10000; ++k) {
    const double an = -k * (k - s);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x + s * std::log(x) - std::lgamma(s));
}

}  // namespace

double chi_square_pvalue(double statistic, int dof) {
  if (dof <= 0) throw oracle_error("chi_square_pvalue: dof must be positive");
  if (statistic <= 0.0) return 1.0;
  const double s = 0.5 * dof, x = 0.5 * statistic;
  const double p = (x < s + 1.0) ? 1.0 - lower_gamma_series(s, x) : upper_gamma_cf(s, x);
  return std::clamp(p, 0.0, 1.0);
}

SampleReport measure_iterations(const std::string& method, const InstrumentedSampler& sampler,
                                std::size_t n, std::uint64_t seed) {
  SampleReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.method = method;
  RandomStream stream(seed);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t iters = 0;
    const double x = sampler(stream, &iters);
    rep.total_iterations += iters;
    sum += x;
    sum2 += x * x;
  }
  rep.mean_iterations = static_cast<double>(rep.total_iterations) / static_cast<double>(n);
  rep.sample_mean = sum / static_cast<double>(n);
  rep.sample_var = sum2 / static_cast<double>(n) - rep.sample_mean * rep.sample_mean;
  return rep;
}

SampleReport measure_iterations(const std::string& method, const InstrumentedSampler& sampler,
                                std::size_t n, std::uint64_t seed,
                                const std::function<double(double)>& cdf) {
  SampleReport rep;
  rep.n = n;
  rep.seed = seed;
  rep.method = method;
  RandomStream stream(seed);
  std::vector<double> xs(n);
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t iters = 0;
    xs[i] = sampler(stream, &iters);
    rep.total_iterations += iters;
    sum += xs[i];
    sum2 += xs[i] * xs[i];
  }
  rep.mean_iterations = static_cast<double>(rep.total_iterations) / static_cast<double>(n);
  rep.sample_mean = sum / static_cast<double>(n);
  rep.sample_var = sum2 / static_cast<double>(n) - rep.sample_mean * rep.sample_mean;
  const KsResult ks = ks_test(std::move(xs), cdf);
  rep.ks_statistic = ks.statistic;
  rep.ks_pvalue = ks.pvalue;
  return rep;
}

}  // namespace rvg
