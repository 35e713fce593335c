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

#include "rvg/validate.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "rvg/betaized.hpp"
#include "rvg/conjugate.hpp"
#include "rvg/detail/numeric.hpp"
#include "rvg/ghs.hpp"
#include "rvg/oracle.hpp"
#include "rvg/pearson4.hpp"
#include "rvg/pearson4_oracle.hpp"
#include "rvg/random.hpp"
#include "rvg/specfun.hpp"
#include "rvg/student.hpp"

namespace rvg {
namespace {

using detail::kHalfPi;
using detail::kPi;

constexpr double kSignificance = 1e-3;

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

void check(std::vector<CheckResult>& out, const std::string& name, bool pass,
           std::string detail) {
  out.push_back({name, pass, std::move(detail)});
}

// worst |x - y| / max(1, |y|) over a callback-driven grid
struct WorstError {
  double value = 0.0;
  void update(double got, double want) {
    const double e = std::fabs(got - want) / std::max(1.0, std::fabs(want));
    if (e > value) value = e;
  }
};

std::vector<double> draw(const InstrumentedSampler& sampler, std::size_t n, std::uint64_t seed) {
  RandomStream stream(seed);
  std::vector<double> xs(n);
  for (auto& x : xs) x = sampler(stream, nullptr);
  return xs;
}

const double kBracketAs[] = {1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 10000.0};
const double kBracketSs[] = {0.0, 0.5, 1.0, 5.0, 50.0, 500.0};

}  // namespace

std::vector<CheckResult> validate_specfun(const ValidateOptions&) {
  std::vector<CheckResult> out;

  {  // real-axis reduction of the complex kernel
    WorstError w;
    for (double x = 0.5; x <= 100.0; x += 0.37)
      w.update(log_abs_gamma_complex(x, 0.0), log_gamma_real(x));
    check(out, "specfun.real_axis_reduction", w.value <= 1e-12, fmt("max err %.2e", w.value));
  }
  {  // |Gamma(1/2+iy)|^2 cosh(pi y) = pi
    WorstError w;
    for (double y = 0.0; y <= 20.0; y += 0.25) {
      const double lhs = 2.0 * log_abs_gamma_complex(0.5, y) + detail::log_cosh(kPi * y);
      w.update(lhs, std::log(kPi));
    }
    check(out, "specfun.sech_identity", w.value <= 1e-10, fmt("max log err %.2e", w.value));
  }
  {  // duplication-formula consistency of the normalization constant
    WorstError w;
    for (double a : kBracketAs)
      for (double s : kBracketSs)
        w.update(pearson4_log_norm_duplication(a, s), pearson4_log_norm(a, s));
    check(out, "specfun.duplication_consistency", w.value <= 1e-10, fmt("max err %.2e", w.value));
  }
  {  // bracket gamma_lo <= gamma <= gamma_hi, and tightness at a = 100
    bool ok = true;
    for (double a : kBracketAs)
      for (double s : kBracketSs) {
        const NormBounds nb = pearson4_norm_bounds(a, s);
        const double lg = pearson4_log_norm(a, s);
        ok = ok && nb.log_gamma_lo <= lg && lg <= nb.log_gamma_hi;
      }
    const NormBounds nb100 = pearson4_norm_bounds(100.0, 0.0);
    const double ratio = std::exp(nb100.log_gamma_hi - nb100.log_gamma_lo);
    check(out, "specfun.gamma_bracket", ok && ratio < 1.01,
          fmt("bracket_ok=%.0f ratio(a=100)=%.6f", ok ? 1.0 : 0.0, ratio));
  }
  {  // Batir sandwich for Gamma(1+x)
    bool ok = true;
    for (double x = 1.0; x <= 100.0; x += 0.5) {
      const double core = x * (std::log(x) - 1.0);
      const double lg = log_gamma_real(1.0 + x);
      ok = ok && 0.5 * std::log(2.0 * kPi * (x + 1.0 / 6.0)) + core <= lg + 1e-12 &&
           lg <= 0.5 * std::log(2.0 * kPi * (x + 0.177)) + core + 1e-12;
    }
    check(out, "specfun.batir_sandwich", ok, "x in [1,100]");
  }
  {  // Boyd bracket around the Stirling magnitude
    bool ok = true;
    for (double x : {0.5, 1.0, 2.0, 10.0, 100.0})
      for (double y : {0.0, 0.5, 5.0, 50.0}) {
        const BoydFactors bf = boyd_factor_bounds(x, y);
        const double two_lg = 2.0 * log_abs_gamma_complex(x, y);
        ok = ok && std::log(bf.theta_lo) + 2.0 * bf.log_stirling_mag <= two_lg + 1e-12 &&
             two_lg <= std::log(bf.theta_hi) + 2.0 * bf.log_stirling_mag + 1e-12;
      }
    check(out, "specfun.boyd_bracket", ok, "grid x in {0.5..100}, y in {0..50}");
  }
  {  // quadrature route to the normalization constant
    const Pearson4Params p{2.0, 3.0};
    const double direct = pearson4_normalization(p);
    check(out, "specfun.gamma_quadrature_consistency", std::fabs(direct - 1.0) <= 1e-8,
          fmt("integral of f = %.12f", direct));
  }
  return out;
}

std::vector<CheckResult> validate_pearson4(const ValidateOptions& opts) {
  std::vector<CheckResult> out;
  const std::size_t n_ks = opts.quick ? 20000 : 100000;
  const std::size_t n_iter = opts.quick ? 20000 : 100000;

  {  // normalization over the full parameter grid
    WorstError w;
    for (double a : {0.6, 1.0, 1.5, 2.0, 10.0, 100.0})
      for (double s : {0.0, 1.0, 5.0, 50.0}) w.update(pearson4_normalization({a, s}), 1.0);
    check(out, "pearson4.normalization", w.value <= 1e-6, fmt("max |I-1| = %.2e", w.value));
  }
  {  // log-concavity of the angular density for a >= 1
    bool ok = true;
    for (double a : {1.0, 2.0, 10.0, 100.0})
      for (double s : {0.0, 1.0, 10.0}) {
        const Pearson4Params p{a, s};
        const double lo = -kHalfPi + 0.05, hi = kHalfPi - 0.05;
        const int n = 400;
        const double step = (hi - lo) / n;
        for (int i = 1; i < n; ++i) {
          const double y = lo + i * step;
          const double second = angular_log_density(p, y - step) -
                                2.0 * angular_log_density(p, y) +
                                angular_log_density(p, y + step);
          ok = ok && second <= 1e-9;
        }
      }
    check(out, "pearson4.angular_log_concavity", ok, "second differences <= 0");
  }
  {  // bracket-driven envelope dominates h; explicit lower bound stays below
    bool ok = true;
    for (double a : {1.1, 2.0, 10.0, 100.0})
      for (double s : {0.0, 1.0, 10.0}) {
        const Pearson4Params p{a, s};
        const LogConcaveEnvelope env = make_envelope(p);
        const double lo_height = std::exp(env.bounds.log_gamma_lo + env.log_delta);
        for (int i = 1; i < 600; ++i) {
          const double y = -kHalfPi + i * (kPi / 600);
          const double log_h = angular_log_density(p, y);
          const double log_env = env.bounds.log_gamma_hi + env.log_delta +
                                 std::min(0.0, 1.0 - std::fabs(y - env.mode) * lo_height);
          const double log_lower = env.bounds.log_gamma_lo + p.s * y +
                                   2.0 * (p.a - 1.0) * std::log(std::cos(y));
          ok = ok && log_env >= log_h - 1e-9 && log_lower <= log_h + 1e-9;
        }
      }
    check(out, "pearson4.envelope_domination", ok, "upper >= h >= explicit lower, log domain");
  }
  {  // distributional correctness of every dispatch route
    struct Cell {
      Pearson4Params p;
      const char* name;
    };
    const Cell cells[] = {
        {{2.0, 0.0}, "student-one-liner"}, {{1.0, 2.0}, "skewed-cauchy"},
        {{3.0, 4.0}, "gamma-free"},        {{0.8, 0.5}, "student-reject"},
        {{0.7, 2.0}, "symmetrized"},
    };
    for (const auto& cell : cells) {
      const auto xs = draw(
          [&](RandomStream& rs, std::uint64_t* it) { return sample(rs, cell.p, it); }, n_ks,
          0x9e3779b9u ^ static_cast<std::uint64_t>(cell.p.a * 1000 + cell.p.s));
      const KsResult ks = pearson4_ks(xs, cell.p);
      check(out, std::string("pearson4.ks_route.") + cell.name, ks.pvalue > kSignificance,
            fmt("D=%.5f p=%.5f", ks.statistic, ks.pvalue));
    }
  }
  {  // known-constant log-concave sampler: expected 4 iterations
    bool ok = true;
    double worst = 0.0;
    for (double a : {2.0, 10.0, 100.0})
      for (double s : {0.0, 1.0, 10.0, 100.0}) {
        const Pearson4Params p{a, s};
        const LogConcaveEnvelope env = make_envelope(p);
        const auto rep = measure_iterations(
            "logconcave",
            [&](RandomStream& rs, std::uint64_t* it) { return sample_logconcave(rs, p, env, it); },
            n_iter, 1234);
        worst = std::max(worst, rep.mean_iterations);
        ok = ok && rep.mean_iterations <= 4.05;
      }
    check(out, "pearson4.iterations_logconcave", ok, fmt("worst mean %.3f <= 4.05", worst));
  }
  {  // bracket-driven sampler: measured against its per-cell envelope area
    bool ok = true;
    double worst_excess = -1.0;
    for (double a : {1.1, 2.0, 10.0, 100.0})
      for (double s : {0.0, 1.0, 10.0, 1000.0}) {
        const Pearson4Params p{a, s};
        const LogConcaveEnvelope env = make_envelope(p);
        const double bound = theoretical_iteration_bound(Pearson4Method::kGammaFree, p);
        const auto rep = measure_iterations(
            "gamma-free",
            [&](RandomStream& rs, std::uint64_t* it) {
              return sample_logconcave_gamma_free(rs, p, env, it);
            },
            n_iter, 4321);
        const double slack = 4.0 * bound / std::sqrt(static_cast<double>(n_iter));
        worst_excess = std::max(worst_excess, rep.mean_iterations - bound);
        ok = ok && rep.mean_iterations <= bound + slack;
      }
    const Pearson4Params big{10000.0, 50.0};
    const auto rep_big = measure_iterations(
        "gamma-free",
        [&](RandomStream& rs, std::uint64_t* it) {
          return sample_logconcave_gamma_free(rs, big, it);
        },
        n_iter, 4321);
    ok = ok && rep_big.mean_iterations >= 3.5 && rep_big.mean_iterations <= 4.5;
    check(out, "pearson4.iterations_gamma_free", ok,
          fmt("worst excess over area bound %.4f; mean @a=1e4 %.3f", worst_excess,
              rep_big.mean_iterations));
  }
  {  // symmetrized sampler: uniform budget pi^2/(2 pi - 4)
    bool ok = true;
    double worst = 0.0;
    for (double a : {0.6, 0.8, 1.0})
      for (double s : {1.0, 5.0, 50.0}) {
        const Pearson4Params p{a, s};
        const auto rep = measure_iterations(
            "symmetrized",
            [&](RandomStream& rs, std::uint64_t* it) { return sample_symmetrized(rs, p, it); },
            n_iter, 777);
        worst = std::max(worst, rep.mean_iterations);
        ok = ok && rep.mean_iterations <= kPi * kPi / (2.0 * kPi - 4.0);
      }
    check(out, "pearson4.iterations_symmetrized", ok, fmt("worst mean %.3f <= 4.33", worst));
  }
  {  // Student-t rejection budget window at small s
    bool ok = true;
    for (double a : {1.0, 2.0})
      for (double s : {0.5, 1.0}) {
        const Pearson4Params p{a, s};
        const auto rep = measure_iterations(
            "student-reject",
            [&](RandomStream& rs, std::uint64_t* it) { return sample_reject_student(rs, p, it); },
            n_iter, 99);
        ok = ok && rep.mean_iterations >= 0.5 * std::exp(kPi * s / 2.0) &&
             rep.mean_iterations <= std::exp(kPi * s);
      }
    check(out, "pearson4.iterations_student_reject", ok, "within [e^{pi s/2}/2, e^{pi s}]");
  }
  {  // angular mean of samples vs quadrature mean
    const Pearson4Params p{3.0, 5.0};
    const auto xs = draw(
        [&](RandomStream& rs, std::uint64_t* it) { return sample(rs, p, it); }, n_ks, 31337);
    double mean = 0.0;
    for (double x : xs) mean += std::atan(x);
    mean /= static_cast<double>(xs.size());
    const double want = pearson4_angular_mean(p);
    const double tol = 4.0 * 1.0 / std::sqrt(static_cast<double>(xs.size()));
    check(out, "pearson4.angular_mean", std::fabs(mean - want) <= tol,
          fmt("sample %.5f vs quadrature %.5f", mean, want));
  }
  return out;
}

std::vector<CheckResult> validate_betaized(const ValidateOptions& opts) {
  std::vector<CheckResult> out;
  const std::size_t n_ks = opts.quick ? 20000 : 100000;
  const std::size_t n_iter = opts.quick ? 20000 : 100000;

  const BetaizedParams triples[] = {{1.0, 1.0, 0.0},    {1.0, 50.0, 3.0},  {2.0, 3.0, 5.0},
                                    {10.0, 10.0, -7.0}, {1000.0, 1000.0, 0.0},
                                    {1000.0, 1000.0, 2000.0}};

  {  // normalization
    WorstError w;
    for (const auto& p : triples) {
      const Moments m = moments(p);
      const double sigma = std::sqrt(m.variance);
      const double integral = quadrature_integrate_line(
          [f = BetaizedDensity(p)](double x) { return f(x); }, m.mean, sigma);
      w.update(integral, 1.0);
    }
    check(out, "betaized.normalization", w.value <= 1e-6, fmt("max |I-1| = %.2e", w.value));
  }
  {  // sandwich alpha g <= f <= beta g and log-concavity of g
    bool ok = true;
    bool concave = true;
    for (const auto& p : triples) {
      const SandwichConstants c = sandwich_constants(p);
      const BetaizedDensity f(p);
      const double la = std::log(c.alpha), lb = std::log(c.beta);
      const double lo = c.mu - 20.0 * c.sigma, step = 40.0 * c.sigma / 400;
      double prev2 = 0.0, prev1 = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double x = lo + i * step;
        const double lf = f(x), lg = log_surrogate_g(p, x);
        ok = ok && la + lg <= lf + 1e-9 && lf <= lb + lg + 1e-9;
        if (i >= 2) concave = concave && (prev2 - 2.0 * prev1 + lg <= 1e-9);
        prev2 = prev1;
        prev1 = lg;
      }
    }
    check(out, "betaized.sandwich", ok, "alpha g <= f <= beta g, log domain");
    check(out, "betaized.surrogate_log_concavity", concave, "second differences <= 0");
  }
  {  // both envelopes dominate f
    bool ok2 = true, ok3 = true;
    for (const auto& p : triples) {
      const SandwichConstants c = sandwich_constants(p);
      const BetaizedDensity f(p);
      const double lo = c.mu - 20.0 * c.sigma, step = 40.0 * c.sigma / 500;
      for (int i = 0; i <= 500; ++i) {
        const double x = lo + i * step;
        const double lf = f(x);
        const double u = std::fabs(x - c.mu);
        const double env2 = std::log(c.A) - std::log(c.sigma) +
                            std::min(0.0, c.B - c.C * u / c.sigma);
        ok2 = ok2 && lf <= env2 + 1e-9;
        double env3;
        if (u <= c.eta + 1.0 / c.tau_prime)
          env3 = std::log(c.beta * c.tau_prime);
        else if (u <= c.eta + 1.0 / c.tau)
          env3 = std::log(c.beta) - std::log(u - c.eta);
        else
          env3 = std::log(c.beta * c.tau) + std::min(0.0, 1.0 + c.eta * c.tau - c.tau * u);
        ok3 = ok3 && lf <= env3 + 1e-9;
      }
    }
    check(out, "betaized.lemma2_envelope", ok2, "A/sigma envelope dominates f");
    check(out, "betaized.lemma3_envelope", ok3, "tripartite envelope dominates f");
  }
  {  // distributional correctness, both samplers, same seed budget
    const BetaizedParams p{2.0, 3.0, 5.0};
    const SandwichConstants c = sandwich_constants(p);
    const BetaizedDensity f(p);
    const NumericCdf cdf = numeric_cdf([&](double x) { return f(x); }, c.mu - 30.0 * c.sigma,
                                       c.mu + 30.0 * c.sigma, 8192);
    for (const auto& [name, fn] :
         {std::pair<const char*, InstrumentedSampler>{
              "lemma2",
              [&](RandomStream& rs, std::uint64_t* it) { return sample_lemma2(rs, c, f, it); }},
          {"lemma3",
           [&](RandomStream& rs, std::uint64_t* it) { return sample_lemma3(rs, c, f, it); }}}) {
      const auto xs = draw(fn, n_ks, 2024);
      const KsResult ks = ks_test(xs, cdf);
      check(out, std::string("betaized.ks_") + name, ks.pvalue > kSignificance,
            fmt("D=%.5f p=%.5f", ks.statistic, ks.pvalue));
    }
  }
  {  // iteration budgets against envelope areas, plus the asymptotic windows
    const BetaizedParams p100{100.0, 100.0, 0.0};
    const BetaizedParams p1e4{10000.0, 10000.0, 0.0};
    const SandwichConstants c100 = sandwich_constants(p100);
    const SandwichConstants c1e4 = sandwich_constants(p1e4);
    const BetaizedDensity f100(p100), f1e4(p1e4);
    const auto rep2 = measure_iterations(
        "lemma2",
        [&](RandomStream& rs, std::uint64_t* it) { return sample_lemma2(rs, c100, f100, it); },
        n_iter, 5150);
    const auto rep3 = measure_iterations(
        "lemma3",
        [&](RandomStream& rs, std::uint64_t* it) { return sample_lemma3(rs, c1e4, f1e4, it); },
        n_iter, 5151);
    const bool ok = rep2.mean_iterations >= 20.0 && rep2.mean_iterations <= 30.0 &&
                    rep2.mean_iterations <=
                        lemma2_iteration_bound(c100) +
                            4.0 * lemma2_iteration_bound(c100) / std::sqrt(double(n_iter)) &&
                    rep3.mean_iterations >= 12.0 && rep3.mean_iterations <= 16.0;
    check(out, "betaized.iteration_budgets", ok,
          fmt("lemma2@100: %.2f in [20,30]; lemma3@1e4: %.2f in [12,16]", rep2.mean_iterations,
              rep3.mean_iterations));
  }
  {  // sampler moments vs closed form
    const BetaizedParams p{2.0, 3.0, 5.0};
    const SandwichConstants c = sandwich_constants(p);
    const BetaizedDensity f(p);
    const std::size_t n = opts.quick ? 50000 : 200000;
    const auto xs = draw(
        [&](RandomStream& rs, std::uint64_t* it) { return sample_lemma3(rs, c, f, it); }, n,
        60606);
    double mean = 0.0, m2 = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(n);
    for (double x : xs) m2 += (x - mean) * (x - mean);
    m2 /= static_cast<double>(n);
    const Moments want = moments(p);
    const double mean_tol = 4.0 * std::sqrt(want.variance / static_cast<double>(n));
    double m4 = 0.0;
    for (double x : xs) m4 += std::pow(x - mean, 4);
    m4 /= static_cast<double>(n);
    const double var_tol = 4.0 * std::sqrt(std::max(0.0, m4 - m2 * m2) / static_cast<double>(n));
    const bool ok = std::fabs(mean - want.mean) <= mean_tol &&
                    std::fabs(m2 - want.variance) <= var_tol;
    check(out, "betaized.sampler_moments", ok,
          fmt("mean %.4f (want %.4f), var %.4f", mean, want.mean, m2));
  }
  {  // cosine-representation cross-check of the complex-gamma kernel
    bool ok = true;
    RandomStream rs(808);
    for (const auto& [rho, x] : {std::pair{2.0, 1.0}, {1.0, 2.0}}) {
      const auto est = cos_representation_estimate(rs, rho, x, opts.quick ? 100000 : 400000);
      const double want = std::exp(ghs_log_density(rho, x));
      ok = ok && std::fabs(est.estimate - want) <= 4.0 * est.std_error;
    }
    check(out, "betaized.cos_representation", ok, "within 4 standard errors");
  }
  return out;
}

std::vector<CheckResult> validate_all(const ValidateOptions& opts) {
  std::vector<CheckResult> out = validate_specfun(opts);
  for (auto& c : validate_pearson4(opts)) out.push_back(std::move(c));
  for (auto& c : validate_betaized(opts)) out.push_back(std::move(c));

  const std::size_t n_ks = opts.quick ? 20000 : 100000;

  {  // GHS convolution identity, the strongest end-to-end kernel check
    WorstError w;
    for (const auto& [a, b] : {std::pair{1.0, 1.0}, {1.0, 2.0}, {2.0, 3.5}})
      for (double s : {0.0, 1.0, 5.0}) {
        const double conv = quadrature_integrate_line(
            [&, aa = a, bb = b, ss = s](double x) {
              return ghs_log_density(aa, x) + ghs_log_density(bb, ss - x);
            },
            0.5 * s, 1.0 + std::fabs(s));
        w.update(conv, std::exp(ghs_log_density(a + b, s)));
      }
    check(out, "ghs.convolution_identity", w.value <= 1e-6, fmt("max rel err %.2e", w.value));
  }
  {  // NEF-GHS normalization and quadrature moments
    WorstError w;
    bool mok = true;
    for (double rho : {0.5, 1.0, 2.0, 10.0})
      for (double lam : {0.0, 0.5, -0.5, 2.0, -2.0}) {
        const GhsParams g{rho, lam};
        const double scale = std::sqrt(rho * (1.0 + lam * lam));
        const double total = quadrature_integrate_line(
            [&](double x) { return nefghs_log_density(g, x); }, rho * lam, scale);
        w.update(total, 1.0);
        const double mean = quadrature_integrate_signed(
            [&](double x) { return x * std::exp(nefghs_log_density(g, x)); },
            rho * lam - 40.0 * scale, rho * lam + 40.0 * scale, {1e-9, 1e-9, 64, 400000});
        mok = mok && std::fabs(mean - nefghs_moments(g).mean) <= 1e-6 * std::max(1.0, scale);
      }
    check(out, "ghs.nefghs_normalization", w.value <= 1e-6, fmt("max |I-1| = %.2e", w.value));
    check(out, "ghs.nefghs_mean", mok, "quadrature mean = rho lambda");
  }
  {  // rng sanity: open interval, mean, sign balance
    RandomStream rs(11);
    double sum = 0.0;
    bool open = true;
    const std::size_t n = opts.quick ? 200000 : 1000000;
    for (std::size_t i = 0; i < n; ++i) {
      const double u = next_uniform(rs);
      open = open && u > 0.0 && u < 1.0;
      sum += u;
    }
    const double mean = sum / static_cast<double>(n);
    check(out, "rng.uniform_mean", open && std::fabs(mean - 0.5) <= 2.0 / std::sqrt(12.0 * n),
          fmt("mean %.6f", mean));
  }
  {  // gamma sampler distribution at shapes around the boost threshold
    bool ok = true;
    for (double shape : {0.5, 1.0, 2.5}) {
      auto xs = draw([&](RandomStream& rs, std::uint64_t*) { return sample_gamma(rs, shape); },
                     n_ks, 313);
      KsResult ks;
      if (shape < 1.0) {
        for (auto& x : xs) x = std::pow(x, shape);
        const double hi = std::pow(40.0 + 10.0 * shape, shape);
        ks = ks_test_quadrature(std::move(xs),
                                [&](double u) {
                                  return -std::pow(u, 1.0 / shape) - log_gamma_real(shape) -
                                         std::log(shape);
                                },
                                0.0, hi);
      } else {
        ks = ks_test_quadrature(std::move(xs),
                                [&](double x) {
                                  return (shape - 1.0) * std::log(x) - x - log_gamma_real(shape);
                                },
                                0.0, 50.0 + 10.0 * shape);
      }
      ok = ok && ks.pvalue > kSignificance;
    }
    check(out, "rng.gamma_ks", ok, "shapes {0.5, 1, 2.5}");
  }
  {  // student one-liners against closed-form CDFs
    auto t2 = draw([](RandomStream& rs, std::uint64_t*) { return sample_t2(rs); }, n_ks, 777);
    const KsResult ks2 =
        ks_test(t2, [](double x) { return 0.5 * (1.0 + x / std::sqrt(2.0 + x * x)); });
    auto cauchy =
        draw([](RandomStream& rs, std::uint64_t*) { return sample_cauchy(rs); }, n_ks, 778);
    const KsResult ksc = ks_test(cauchy, [](double x) { return 0.5 + std::atan(x) / kPi; });
    check(out, "student.one_liners_ks", ks2.pvalue > kSignificance && ksc.pvalue > kSignificance,
          fmt("t2 p=%.4f cauchy p=%.4f", ks2.pvalue, ksc.pvalue));
  }
  {  // conjugate bookkeeping identities
    bool ok = true;
    for (double ni : {1.0, 2.0, 5.0})
      for (double nsum : {4.0, 9.0})
        for (double ysum : {-3.0, 0.0, 7.0}) {
          const ConditionalMoments cm = conditional_moments(ni, nsum, ysum);
          const Moments bm = moments({ni, nsum - ni, ysum});
          ok = ok && std::fabs(cm.mean - bm.mean) <= 1e-12 * std::max(1.0, std::fabs(bm.mean)) &&
               std::fabs(cm.variance - bm.variance) <=
                   1e-12 * std::max(1.0, std::fabs(bm.variance));
        }
    const PriorSpec prior{3.0, 1.0};
    const PriorSpec post = posterior_update(prior, 7.0, 4.0);
    ok = ok && std::fabs(post.m0 - 7.0) < 1e-15 && std::fabs(post.mu0 - 10.0 / 7.0) < 1e-15;
    check(out, "conjugate.identities", ok, "conditional = betaized moments; update arithmetic");
  }
  return out;
}

}  // namespace rvg
