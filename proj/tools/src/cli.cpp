// Copyright 2026 The gqld Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gqld_cli/cli.h"

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gqld/characterize.h"
#include "gqld/distribution.h"
#include "gqld/error.h"
#include "gqld/format.h"
#include "gqld/grid.h"
#include "gqld/ks.h"
#include "gqld/skew.h"
#include "gqld/validation.h"

namespace gqld::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::optional<double> alpha, beta, a, q, mu, theta, skew;
  std::optional<int> m;
  std::optional<double> from, to, step, prob;
  std::size_t n = 100'000;
  std::uint64_t seed = 0;
  std::string out;
  std::string outdir = ".";
  std::string suite = "all";
  std::string source = "inverse";
  std::string function;
};

using PointFunction = double (*)(const GqldParams&, double);

const std::map<std::string, PointFunction>& point_functions() {
  static const std::map<std::string, PointFunction> table = {
      {"pdf", &pdf},         {"logpdf", &log_pdf},  {"cdf", &cdf},
      {"survival", &survival}, {"hazard", &hazard}, {"cumhaz", &cumulative_hazard},
  };
  return table;
}

double require(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

GqldParams params_from(const Flags& f) {
  return GqldParams({.alpha = require(f.alpha, "--alpha"),
                     .beta = require(f.beta, "--beta"),
                     .a = f.a.value_or(1.0),
                     .q = require(f.q, "--q"),
                     .mu = f.mu.value_or(0.0),
                     .theta = f.theta.value_or(1.0)});
}

// Without --beta the base is the symmetric q-logistic (alpha defaults to 2).
SkewParams skew_from(const Flags& f) {
  const double skew = f.skew.value_or(0.0);
  if (f.beta) return SkewParams(params_from(f), skew);
  auto fields = GqldParams::symmetric(f.alpha.value_or(2.0), require(f.q, "--q")).fields();
  if (f.a) fields.a = *f.a;
  if (f.mu) fields.mu = *f.mu;
  if (f.theta) fields.theta = *f.theta;
  return SkewParams(GqldParams(fields), skew);
}

GridSpec grid_from(const Flags& f) {
  return GridSpec(require(f.from, "--from"), require(f.to, "--to"), require(f.step, "--step"));
}

// Writes to `path`, or to `fallback` when the path is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : path_(path), stream_(&fallback) {
    if (path.empty()) return;
    file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file_) throw IoError("cannot open " + path + " for writing");
    stream_ = &file_;
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed" + (path_.empty() ? "" : " for " + path_));
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_;
};

int cmd_eval(const Flags& f, std::ostream& out) {
  if (f.function.empty()) throw UsageError("eval needs a function name");
  const auto grid = grid_from(f);
  if (f.function == "charfn") {
    const auto p = params_from(f);
    Sink sink(f.out, out);
    auto& os = sink.stream();
    os << "t,re,im\n# " << p.fingerprint() << '\n';
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const ComplexValue z = char_fn(p, grid[i]);
      os << format_double(grid[i]) << ',' << format_double(z.real()) << ','
         << format_double(z.imag()) << '\n';
    }
    sink.finish();
    return kExitOk;
  }

  std::function<double(double)> g;
  std::string fingerprint;
  if (f.function == "skewpdf") {
    auto s = std::make_shared<SkewParams>(skew_from(f));
    fingerprint = s->base().fingerprint() + ";skew=" + format_double(s->skew());
    g = [s](double y) { return skew_pdf(*s, y); };
  } else {
    const auto fn = point_functions().at(f.function);
    const auto p = params_from(f);
    fingerprint = p.fingerprint();
    g = [fn, p](double y) { return fn(p, y); };
  }
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = g(grid[i]);

  Sink sink(f.out, out);
  auto& os = sink.stream();
  os << "x,value\n# " << fingerprint << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    os << format_double(grid[i]) << ',' << format_double(values[i]) << '\n';
  }
  sink.finish();
  return kExitOk;
}

struct Curve {
  std::string label;
  std::string fingerprint;
  std::function<double(double)> f;
};

void write_figure(const std::filesystem::path& path, const std::vector<std::string>& notes,
                  const GridSpec& grid, const std::vector<Curve>& curves) {
  Sink sink(path.string(), std::cout);
  auto& os = sink.stream();
  os << 'x';
  for (const auto& c : curves) os << ',' << c.label;
  os << '\n';
  for (const auto& note : notes) os << "# " << note << '\n';
  for (const auto& c : curves) os << "# " << c.label << ": " << c.fingerprint << '\n';
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    os << format_double(x);
    for (const auto& c : curves) os << ',' << format_double(c.f(x));
    os << '\n';
  }
  sink.finish();
}

std::string label_q(double q) { return "q=" + format_shortest(q); }

std::vector<Curve> base_curves(const std::vector<GqldParams>& family, PointFunction fn) {
  std::vector<Curve> curves;
  for (const auto& p : family) {
    curves.push_back({label_q(p.q()), p.fingerprint(), [p, fn](double y) { return fn(p, y); }});
  }
  return curves;
}

int cmd_figures(const Flags& f, std::ostream& out) {
  namespace fs = std::filesystem;
  const fs::path dir(f.outdir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  struct Location {
    double mu, theta, from, to, step;
  };
  const std::array<Location, 4> locations = {{{2.0, 2.05, -20.0, 30.0, 0.05},
                                              {8.0, 6.0, -50.0, 100.0, 0.1},
                                              {5.0, 5.0, -40.0, 80.0, 0.1},
                                              {-1.0, 3.0, -30.0, 45.0, 0.05}}};
  const std::array<double, 4> mode_qs = {1.5, 2.0, 2.5, 2.9};
  for (std::size_t k = 0; k < locations.size(); ++k) {
    const auto& loc = locations[k];
    std::vector<GqldParams> family;
    for (double q : mode_qs) {
      family.emplace_back(GqldParams::Fields{
          .alpha = 2.0, .beta = 4.0, .a = 1.0, .q = q, .mu = loc.mu, .theta = loc.theta});
    }
    const std::string name = "fig" + std::to_string(k + 1) + ".csv";
    write_figure(dir / name,
                 {"pdf, alpha=2 beta=4 a=1 mu=" + format_shortest(loc.mu) +
                      " theta=" + format_shortest(loc.theta),
                  "q=2.9 replaces q=3: at q=3, beta/(q-1) - alpha = 0 and the density "
                  "is not normalizable"},
                 GridSpec(loc.from, loc.to, loc.step), base_curves(family, &pdf));
    out << "wrote " << (dir / name).string() << '\n';
  }

  std::vector<GqldParams> ifr;
  for (double q : {1.5, 2.0, 2.5}) {
    ifr.emplace_back(GqldParams::Fields{
        .alpha = 1.0, .beta = 3.0, .a = 1.0, .q = q, .mu = 0.0, .theta = 1.0});
  }
  const GridSpec ifr_grid(-10.0, 10.0, 0.02);
  const std::array<std::pair<const char*, PointFunction>, 3> ifr_figs = {
      {{"survival", &survival}, {"cumulative hazard -ln(survival)", &cumulative_hazard},
       {"hazard", &hazard}}};
  for (std::size_t k = 0; k < ifr_figs.size(); ++k) {
    const std::string name = "fig" + std::to_string(k + 5) + ".csv";
    write_figure(dir / name,
                 {std::string(ifr_figs[k].first) + ", alpha=1 beta=3 a=1 mu=0 theta=1"},
                 ifr_grid, base_curves(ifr, ifr_figs[k].second));
    out << "wrote " << (dir / name).string() << '\n';
  }

  const auto base = GqldParams::symmetric(2.0, 2.0);
  const GridSpec skew_grid(-15.0, 15.0, 0.01);
  const std::array<std::array<double, 4>, 2> skew_sets = {{{0, 1, 5, 20}, {0, -1, -5, -20}}};
  for (std::size_t k = 0; k < skew_sets.size(); ++k) {
    std::vector<Curve> curves;
    for (double skew : skew_sets[k]) {
      auto s = std::make_shared<SkewParams>(base, skew);
      curves.push_back({"skew=" + format_shortest(skew),
                        base.fingerprint() + ";skew=" + format_double(skew),
                        [s](double y) { return skew_pdf(*s, y); }});
    }
    const std::string name = "fig" + std::to_string(k + 8) + ".csv";
    write_figure(dir / name, {"skew pdf over the symmetric base, alpha=2 q=2"}, skew_grid,
                 curves);
    out << "wrote " << (dir / name).string() << '\n';
  }
  return kExitOk;
}

int cmd_sample(const Flags& f, std::ostream& out) {
  SampleBatch batch;
  KsResult ks;
  if (f.source == "inverse") {
    const auto p = params_from(f);
    batch = sample(p, f.n, f.seed);
    ks = ks_statistic(batch, [&p](double y) { return cdf(p, y); });
  } else if (f.source == "thm1") {
    if (f.alpha && *f.alpha != 1.0) throw UsageError("--source thm1 requires --alpha 1");
    Flags g = f;
    g.alpha = 1.0;
    const auto p = params_from(g);
    batch = sample_exponential_transform(p, f.n, f.seed);
    ks = ks_statistic(batch, [&p](double y) { return cdf_alpha1(p, y); });
  } else if (f.source == "thm2") {
    if (!f.m) throw UsageError("missing required flag --m");
    const StudentTransform st{.m = *f.m,
                              .a = f.a.value_or(1.0),
                              .q = require(f.q, "--q"),
                              .mu = f.mu.value_or(0.0),
                              .theta = f.theta.value_or(1.0)};
    st.validate();
    const auto target = st.target();
    batch = sample_student_transform(st, f.n, f.seed);
    ks = ks_statistic(batch, [&target](double y) { return cdf(target, y); });
  } else {
    const auto s = skew_from(f);
    batch = skew_sample(s, f.n, f.seed);
    std::vector<double> sorted = batch.values;
    std::sort(sorted.begin(), sorted.end());
    ks = ks_from_sorted_cdf(skew_cdf_sorted(s, sorted));
  }
  if (!f.out.empty()) {
    Sink sink(f.out, out);
    for (double v : batch.values) sink.stream() << format_double(v) << '\n';
    sink.finish();
  }
  out << "ks=" << format_double(ks.statistic) << " p=" << format_double(ks.p_value) << '\n';
  return kExitOk;
}

int cmd_validate(const Flags& f, std::ostream& out) {
  const auto suite = validation::parse_suite(f.suite);
  if (!suite) throw UsageError("unknown suite " + f.suite);
  bool all_pass = true;
  for (const auto& r : validation::run(*suite, f.seed)) {
    out << r.check_name << " stat=" << format_double(r.statistic)
        << " thr=" << format_double(r.threshold) << (r.passed ? " PASS" : " FAIL") << '\n';
    all_pass = all_pass && r.passed;
  }
  return all_pass ? kExitOk : kExitValidationFailed;
}

int cmd_moments(const Flags& f, std::ostream& out) {
  const auto p = params_from(f);
  out << "mean=" << format_double(mean(p)) << '\n'
      << "variance=" << format_double(variance(p)) << '\n';
  return kExitOk;
}

int cmd_quantile(const Flags& f, std::ostream& out) {
  const auto p = params_from(f);
  out << format_double(quantile(p, require(f.prob, "--prob"))) << '\n';
  return kExitOk;
}

void add_param_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--alpha", f.alpha, "shape alpha > 0");
  cmd->add_option("--beta", f.beta, "shape beta > 0");
  cmd->add_option("--a", f.a, "scale a > 0 (default 1)");
  cmd->add_option("--q", f.q, "pathway parameter q > 1");
  cmd->add_option("--mu", f.mu, "location (default 0)");
  cmd->add_option("--theta", f.theta, "scale theta > 0 (default 1)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Generalized q-logistic distribution toolkit", "gqld"};
  app.set_help_flag("--help", "Print help");
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate a function on a grid as CSV");
  std::vector<std::string> names = {"charfn", "skewpdf"};
  for (const auto& [name, fn] : point_functions()) names.push_back(name);
  eval->add_option("function,--function", f.function, "function to evaluate")
      ->check(CLI::IsMember(names));
  add_param_flags(eval, f);
  eval->add_option("--skew", f.skew, "skew parameter for skewpdf");
  eval->add_option("--from", f.from, "grid start");
  eval->add_option("--to", f.to, "grid end");
  eval->add_option("--step", f.step, "grid step");
  eval->add_option("--out", f.out, "output file (default stdout)");

  auto* figures = app.add_subcommand("figures", "Write fig1.csv ... fig9.csv");
  figures->add_option("--outdir", f.outdir, "output directory");

  auto* sample_cmd = app.add_subcommand("sample", "Draw a sample and report its KS fit");
  sample_cmd->add_option("--source", f.source, "inverse, thm1, thm2 or skew")
      ->check(CLI::IsMember({"inverse", "thm1", "thm2", "skew"}));
  add_param_flags(sample_cmd, f);
  sample_cmd->add_option("--skew", f.skew, "skew parameter for --source skew");
  sample_cmd->add_option("--m", f.m, "degrees of freedom for --source thm2")
      ->check(CLI::PositiveNumber);
  sample_cmd->add_option("--n", f.n, "sample size")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--seed", f.seed, "generator seed");
  sample_cmd->add_option("--out", f.out, "file for the draws, one per line");

  auto* validate = app.add_subcommand("validate", "Run the validation batteries");
  validate->add_option("--suite", f.suite, "all, special, dist, skew or thm")
      ->check(CLI::IsMember({"all", "special", "dist", "skew", "thm"}));
  validate->add_option("--seed", f.seed, "generator seed");

  auto* moments = app.add_subcommand("moments", "Print mean and variance");
  add_param_flags(moments, f);

  auto* quantile_cmd = app.add_subcommand("quantile", "Print the quantile at --prob");
  add_param_flags(quantile_cmd, f);
  quantile_cmd->add_option("--prob", f.prob, "probability in (0, 1)");

  std::vector<const char*> argv = {"gqld"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(f, out);
    if (figures->parsed()) return cmd_figures(f, out);
    if (sample_cmd->parsed()) return cmd_sample(f, out);
    if (validate->parsed()) return cmd_validate(f, out);
    if (moments->parsed()) return cmd_moments(f, out);
    return cmd_quantile(f, out);
  } catch (const IoError& e) {
    err << "gqld: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "gqld: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace gqld::cli
