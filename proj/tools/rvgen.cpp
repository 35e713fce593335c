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

// Single binary exposing sample / density / moments / posterior / validate /
// bench over the library. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 success, 1 validation failure, 2 usage error.

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rvg/betaized.hpp"
#include "rvg/conjugate.hpp"
#include "rvg/ghs.hpp"
#include "rvg/oracle.hpp"
#include "rvg/pearson4.hpp"
#include "rvg/random.hpp"
#include "rvg/student.hpp"
#include "rvg/validate.hpp"

namespace {

using nlohmann::json;

// 17 significant digits: decimal text round-trips to the same double.
std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct SampleArgs {
  std::string dist;
  double a = 2.0, b = 2.0, s = 0.0;
  std::uint64_t n = 10;
  std::uint64_t seed = 0;
  std::string method = "auto";
  std::string format = "csv";
  unsigned jobs = 1;
};

rvg::InstrumentedSampler make_sampler(const SampleArgs& args) {
  using rvg::RandomStream;
  if (args.dist == "pearson4") {
    const rvg::Pearson4Params p{args.a, args.s};
    rvg::validate(p);
    if (args.method == "auto")
      return [p](RandomStream& rs, std::uint64_t* it) { return rvg::sample(rs, p, it); };
    if (args.method == "logconcave")
      return [p](RandomStream& rs, std::uint64_t* it) { return rvg::sample_logconcave(rs, p, it); };
    if (args.method == "gamma-free")
      return [p](RandomStream& rs, std::uint64_t* it) {
        return rvg::sample_logconcave_gamma_free(rs, p, it);
      };
    if (args.method == "student-reject")
      return [p](RandomStream& rs, std::uint64_t* it) {
        return rvg::sample_reject_student(rs, p, it);
      };
    if (args.method == "symmetrized")
      return [p](RandomStream& rs, std::uint64_t* it) { return rvg::sample_symmetrized(rs, p, it); };
    throw CLI::ValidationError("--method", "unknown pearson4 method " + args.method);
  }
  if (args.dist == "student-t") {
    const double a = args.a;
    if (!(a > 0.0)) throw CLI::ValidationError("--a", "student-t needs a > 0");
    return [a](RandomStream& rs, std::uint64_t* it) {
      if (it) ++*it;
      return rvg::sample_student_t(rs, a);
    };
  }
  if (args.dist == "betaized-mm") {
    const rvg::BetaizedParams p{args.a, args.b, args.s};
    rvg::validate(p);
    const rvg::SandwichConstants c = rvg::sandwich_constants(p);
    const rvg::BetaizedDensity f(p);
    if (args.method == "lemma2")
      return [c, f](RandomStream& rs, std::uint64_t* it) {
        return rvg::sample_lemma2(rs, c, f, it);
      };
    if (args.method == "auto" || args.method == "lemma3")
      return [c, f](RandomStream& rs, std::uint64_t* it) {
        return rvg::sample_lemma3(rs, c, f, it);
      };
    throw CLI::ValidationError("--method", "unknown betaized-mm method " + args.method);
  }
  throw CLI::ValidationError("--dist", "unknown distribution " + args.dist);
}

int run_sample(const SampleArgs& args) {
  const rvg::InstrumentedSampler sampler = make_sampler(args);
  std::vector<double> xs(args.n);
  std::uint64_t iterations = 0;

  if (args.jobs <= 1) {
    rvg::RandomStream stream(args.seed);
    for (auto& x : xs) x = sampler(stream, &iterations);
  } else {
    // worker w draws a contiguous block with seed splitmix64(seed XOR w)
    const unsigned jobs = args.jobs;
    std::vector<std::uint64_t> iters(jobs, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        const std::uint64_t lo = args.n * w / jobs, hi = args.n * (w + 1) / jobs;
        rvg::RandomStream stream(rvg::RandomStream::derive_worker_seed(args.seed, w));
        for (std::uint64_t i = lo; i < hi; ++i) xs[i] = sampler(stream, &iters[w]);
      });
    }
    for (auto& t : pool) t.join();
    for (auto v : iters) iterations += v;
  }

  std::ostringstream outbuf;
  if (args.format == "csv") {
    for (double x : xs) outbuf << num17(x) << "\n";
  } else if (args.format == "jsonl") {
    for (double x : xs) outbuf << "{\"x\": " << num17(x) << "}\n";
    json meta;
    meta["meta"] = {{"iterations", iterations},
                    {"n", args.n},
                    {"seed", args.seed},
                    {"method", args.method}};
    outbuf << meta.dump() << "\n";
  } else {
    throw CLI::ValidationError("--format", "unknown format " + args.format);
  }
  std::cout << outbuf.str();
  return 0;
}

struct DensityArgs {
  std::string dist;
  double a = 1.0, b = 1.0, s = 0.0, rho = 1.0, lambda = 0.0, x = 0.0;
};

int run_density(const DensityArgs& args) {
  double log_f;
  if (args.dist == "pearson4")
    log_f = rvg::log_density(rvg::Pearson4Params{args.a, args.s}, args.x);
  else if (args.dist == "ghs")
    log_f = rvg::ghs_log_density(args.rho, args.x);
  else if (args.dist == "nefghs")
    log_f = rvg::nefghs_log_density({args.rho, args.lambda}, args.x);
  else if (args.dist == "betaized-mm")
    log_f = rvg::log_density(rvg::BetaizedParams{args.a, args.b, args.s}, args.x);
  else
    throw CLI::ValidationError("--dist", "unknown distribution " + args.dist);
  std::cout << num17(std::exp(log_f)) << "\n";
  return 0;
}

int run_moments(const DensityArgs& args) {
  json out;
  if (args.dist == "nefghs") {
    const rvg::Moments m = rvg::nefghs_moments({args.rho, args.lambda});
    out = {{"mean", m.mean}, {"variance", m.variance}};
  } else if (args.dist == "betaized-mm") {
    const rvg::Moments m = rvg::moments(rvg::BetaizedParams{args.a, args.b, args.s});
    out = {{"mean", m.mean}, {"variance", m.variance}};
  } else if (args.dist == "pearson4") {
    // mean for a > 1, variance for a > 3/2
    const rvg::Pearson4Params p{args.a, args.s};
    rvg::validate(p);
    if (!(p.a > 1.5))
      throw CLI::ValidationError("--a", "pearson4 moments need a > 3/2");
    const double beta = p.s / (2.0 * (p.a - 1.0));
    out = {{"mean", beta}, {"variance", (beta * beta + 1.0) / (2.0 * p.a - 3.0)}};
  } else {
    throw CLI::ValidationError("--dist", "unknown distribution " + args.dist);
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_posterior(double m0, double mu0, double y_sum, double n_sum) {
  const rvg::PriorSpec post = rvg::posterior_update({m0, mu0}, y_sum, n_sum);
  const rvg::Pearson4Params p = rvg::prior_to_pearson(post);
  json out = {{"m1", post.m0}, {"mu1", post.mu0}, {"a", p.a}, {"s", p.s}};
  std::cout << out.dump() << "\n";
  return 0;
}

int run_validate(const std::string& suite, bool quick) {
  const rvg::ValidateOptions opts{quick};
  std::vector<rvg::CheckResult> checks;
  if (suite == "all")
    checks = rvg::validate_all(opts);
  else if (suite == "specfun")
    checks = rvg::validate_specfun(opts);
  else if (suite == "pearson4")
    checks = rvg::validate_pearson4(opts);
  else if (suite == "betaized")
    checks = rvg::validate_betaized(opts);
  else
    throw CLI::ValidationError("--suite", "unknown suite " + suite);

  std::size_t failed = 0;
  json items = json::array();
  for (const auto& c : checks) {
    items.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    if (!c.pass) ++failed;
  }
  json out = {{"suite", suite},
              {"quick", quick},
              {"checks", items},
              {"passed", checks.size() - failed},
              {"failed", failed}};
  std::cout << out.dump(2) << "\n";
  return failed == 0 ? 0 : 1;
}

struct BenchArgs {
  std::string dist;
  std::string grid_file;
  std::string method = "auto";
  std::string format = "csv";
  std::uint64_t n = 100000;
  std::uint64_t seed = 1;
};

int run_bench(const BenchArgs& args) {
  std::ifstream in(args.grid_file);
  if (!in) {
    std::cerr << "bench: cannot open grid file " << args.grid_file << "\n";
    return 2;
  }
  if (args.format == "csv") {
    if (args.dist == "pearson4")
      std::cout << "a,s,method,n,mean_iterations,bound\n";
    else
      std::cout << "a,b,s,method,n,mean_iterations,bound\n";
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    for (auto& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream row(line);
    if (args.dist == "pearson4") {
      rvg::Pearson4Params p{};
      if (!(row >> p.a >> p.s)) {
        std::cerr << "bench: bad grid row: " << line << "\n";
        return 2;
      }
      SampleArgs sargs;
      sargs.dist = "pearson4";
      sargs.a = p.a;
      sargs.s = p.s;
      sargs.method = args.method;
      const auto rep = rvg::measure_iterations(args.method, make_sampler(sargs), args.n, args.seed);
      const rvg::Pearson4Method m =
          args.method == "auto"            ? rvg::route(p)
          : args.method == "logconcave"    ? rvg::Pearson4Method::kGammaFree
          : args.method == "gamma-free"    ? rvg::Pearson4Method::kGammaFree
          : args.method == "student-reject" ? rvg::Pearson4Method::kStudentReject
                                            : rvg::Pearson4Method::kSymmetrized;
      double bound = rvg::theoretical_iteration_bound(m, p);
      if (args.method == "logconcave") bound = 4.0;
      if (args.format == "jsonl") {
        json j = {{"params", {{"a", p.a}, {"s", p.s}}},
                  {"method", args.method},
                  {"mean_iterations", rep.mean_iterations},
                  {"theoretical_bound", bound}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << num17(p.a) << "," << num17(p.s) << "," << args.method << "," << args.n << ","
                  << num17(rep.mean_iterations) << "," << num17(bound) << "\n";
      }
    } else if (args.dist == "betaized-mm") {
      rvg::BetaizedParams p{};
      if (!(row >> p.a >> p.b >> p.s)) {
        std::cerr << "bench: bad grid row: " << line << "\n";
        return 2;
      }
      SampleArgs sargs;
      sargs.dist = "betaized-mm";
      sargs.a = p.a;
      sargs.b = p.b;
      sargs.s = p.s;
      sargs.method = args.method == "auto" ? "lemma3" : args.method;
      const auto rep =
          rvg::measure_iterations(sargs.method, make_sampler(sargs), args.n, args.seed);
      const rvg::SandwichConstants c = rvg::sandwich_constants(p);
      const double bound = sargs.method == "lemma2" ? rvg::lemma2_iteration_bound(c)
                                                    : rvg::lemma3_iteration_bound(c);
      if (args.format == "jsonl") {
        json j = {{"params", {{"a", p.a}, {"b", p.b}, {"s", p.s}}},
                  {"method", sargs.method},
                  {"mean_iterations", rep.mean_iterations},
                  {"theoretical_bound", bound}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << num17(p.a) << "," << num17(p.b) << "," << num17(p.s) << "," << sargs.method
                  << "," << args.n << "," << num17(rep.mean_iterations) << "," << num17(bound)
                  << "\n";
      }
    } else {
      std::cerr << "bench: unknown distribution " << args.dist << "\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact random variate generators for the Pearson IV and betaized "
               "Meixner-Morris families"};
  app.require_subcommand(1);

  SampleArgs sample_args;
  CLI::App* sample = app.add_subcommand("sample", "draw variates");
  sample->add_option("--dist", sample_args.dist, "pearson4 | student-t | betaized-mm")
      ->required();
  sample->add_option("--a", sample_args.a, "shape a (or degrees of freedom)");
  sample->add_option("--b", sample_args.b, "shape b (betaized-mm)");
  sample->add_option("--s", sample_args.s, "skew / sum parameter");
  sample->add_option("--n", sample_args.n, "number of variates")->required();
  sample->add_option("--seed", sample_args.seed, "64-bit seed");
  sample->add_option("--method", sample_args.method,
                     "auto | logconcave | gamma-free | student-reject | symmetrized | lemma2 | "
                     "lemma3");
  sample->add_option("--format", sample_args.format, "csv | jsonl");
  sample->add_option("--jobs", sample_args.jobs, "parallel workers (derived per-worker seeds)");

  DensityArgs density_args;
  CLI::App* density = app.add_subcommand("density", "evaluate a density");
  density->add_option("--dist", density_args.dist, "pearson4 | ghs | nefghs | betaized-mm")
      ->required();
  density->add_option("--a", density_args.a);
  density->add_option("--b", density_args.b);
  density->add_option("--s", density_args.s);
  density->add_option("--rho", density_args.rho);
  density->add_option("--lambda", density_args.lambda);
  density->add_option("--x", density_args.x)->required();

  DensityArgs moment_args;
  CLI::App* momentsc = app.add_subcommand("moments", "closed-form mean and variance");
  momentsc->add_option("--dist", moment_args.dist, "pearson4 | nefghs | betaized-mm")->required();
  momentsc->add_option("--a", moment_args.a);
  momentsc->add_option("--b", moment_args.b);
  momentsc->add_option("--s", moment_args.s);
  momentsc->add_option("--rho", moment_args.rho);
  momentsc->add_option("--lambda", moment_args.lambda);

  double m0 = 2.0, mu0 = 0.0, y_sum = 0.0, n_sum = 1.0;
  CLI::App* posterior = app.add_subcommand("posterior", "conjugate update");
  posterior->add_option("--m0", m0, "prior sample size (>= 1)")->required();
  posterior->add_option("--mu0", mu0, "prior mean")->required();
  posterior->add_option("--y-sum", y_sum, "observed sum")->required();
  posterior->add_option("--n-sum", n_sum, "observed sample size (>= 1)")->required();

  std::string suite = "all";
  bool quick = false;
  CLI::App* validate = app.add_subcommand("validate", "statistical validation suite");
  validate->add_option("--suite", suite, "all | pearson4 | betaized | specfun");
  validate->add_flag("--quick", quick, "smaller sample sizes");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "mean iteration counts over a parameter grid");
  bench->add_option("--dist", bench_args.dist, "pearson4 | betaized-mm")->required();
  bench->add_option("--grid", bench_args.grid_file, "CSV of a,s (pearson4) or a,b,s rows")
      ->required();
  bench->add_option("--method", bench_args.method);
  bench->add_option("--n", bench_args.n, "draws per grid cell");
  bench->add_option("--seed", bench_args.seed);
  bench->add_option("--format", bench_args.format, "csv | jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits 0; any parse failure is a usage error
  }

  try {
    if (*sample) return run_sample(sample_args);
    if (*density) return run_density(density_args);
    if (*momentsc) return run_moments(moment_args);
    if (*posterior) return run_posterior(m0, mu0, y_sum, n_sum);
    if (*validate) return run_validate(suite, quick);
    if (*bench) return run_bench(bench_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
