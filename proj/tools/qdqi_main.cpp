// Copyright 2026 The qdqi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qdqi/decoder.hpp"
#include "qdqi/dqi_builder.hpp"
#include "qdqi/instance_io.hpp"
#include "qdqi/quadsat_model.hpp"
#include "qdqi/spectral.hpp"
#include "qdqi/statevector.hpp"
#include "qdqi/verify.hpp"

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDecoder = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_state(const qdqi::SparseState& s, const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  qdqi::write_csv(s, out);
}

std::size_t syndrome_distance(const qdqi::QuadSatInstance& inst) {
  const auto code = inst.quadratic_part_zero() ? qdqi::linear_syndrome_code(inst, 0)
                                               : qdqi::quadratic_syndrome_code(inst, 0);
  return qdqi::dual_min_distance(code);
}

// ---- gen

struct GenArgs {
  bool opi = false, linsat = false, quadsat = false;
  std::uint32_t p = 5, r = 2;
  std::size_t n = 2, m = 0;
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_gen(const GenArgs& a) {
  const int modes = int(a.opi) + int(a.linsat) + int(a.quadsat);
  if (modes > 1) throw UsageError("choose one of --opi, --linsat, --quadsat");
  const qdqi::PrimeModulus mod(a.p);
  std::optional<qdqi::QuadSatInstance> inst;
  if (a.quadsat) {
    if (a.m == 0) throw UsageError("--quadsat needs -m");
    inst.emplace(qdqi::make_random_quadsat(mod, a.n, a.m, a.r, a.seed));
  } else if (a.linsat) {
    inst.emplace(qdqi::make_linsat_rs(mod, a.n, a.r, a.seed));
  } else {
    inst.emplace(qdqi::make_quadratic_opi(mod, a.n, a.r, a.seed));
  }
  const std::string text = qdqi::instance_to_json(*inst);
  if (a.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    out << text << '\n';
  }
  const std::size_t ell = std::min(qdqi::default_opi_ell(inst->n()), inst->m() - 1);
  std::ostream& info = a.out.empty() ? std::cerr : std::cout;
  info << "m=" << inst->m() << "\ndefault_ell=" << ell << "\ndual_distance=" << syndrome_distance(*inst) << '\n';
  return kExitPass;
}

// ---- build

struct BuildArgs {
  std::string instance, method = "direct", out = ".", weights;
  std::optional<std::size_t> ell;
  bool ceil_ell = false;
};

std::vector<double> parse_weights(const std::string& text) {
  std::vector<double> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad weight '" + item + "'");
    }
  }
  double norm = 0.0;
  for (double v : w) norm += v * v;
  if (w.empty() || std::abs(std::sqrt(norm) - 1.0) > 1e-9) throw UsageError("--weights must be a unit vector");
  return w;
}

void write_trace(const qdqi::PipelineTrace& trace, const fs::path& dir) {
  ojson steps = ojson::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& st = trace.steps[i];
    write_state(st.state, dir / ("step" + std::to_string(i + 1) + ".csv"));
    ojson regs = ojson::array();
    for (const auto& r : st.state.layout().registers()) regs.push_back({{"name", r.name}, {"digits", r.digits}});
    steps.push_back({{"step", i + 1},
                     {"name", st.name},
                     {"registers", regs},
                     {"terms", st.state.size()},
                     {"norm_sq", st.state.norm_sq()}});
  }
  ojson log = ojson::array();
  std::ofstream dlog(dir / "decoder.log");
  for (const auto& e : trace.decoder_log) {
    log.push_back({{"syndrome", e.syndrome}, {"decoded", e.decoded}, {"weight", e.weight}, {"elapsed", e.candidates}});
    dlog << "syndrome=" << qdqi::digits_to_string(e.syndrome) << " decoded=" << qdqi::digits_to_string(e.decoded)
         << " weight=" << e.weight << " elapsed=" << e.candidates << '\n';
  }
  ojson j;
  j["steps"] = steps;
  j["decoder_success"] = trace.decoder_success;
  j["postselection"] = ojson::array();
  j["decoder_log"] = log;
  std::ofstream(dir / "trace.json") << j.dump(2) << '\n';
}

int cmd_build(const BuildArgs& a) {
  const auto inst = qdqi::read_instance(a.instance);
  std::vector<double> w;
  if (!a.weights.empty()) {
    w = parse_weights(a.weights);
  } else {
    const std::size_t ell = a.ell ? *a.ell : std::min(qdqi::default_opi_ell(inst.n(), a.ceil_ell), inst.m() - 1);
    if (ell >= inst.m()) throw UsageError("--ell must be below m");
    w = qdqi::optimal_weights(inst, ell);
  }
  const fs::path dir(a.out);
  fs::create_directories(dir);

  qdqi::SparseState state(qdqi::RegisterLayout(inst.modulus(), {{"x", inst.n()}}));
  if (a.method == "direct") {
    state = qdqi::build_direct(inst, w);
  } else if (a.method == "qftform") {
    state = qdqi::build_qft_form(inst, w);
  } else if (a.method == "pipeline") {
    if (!inst.linear_part_zero()) {
      throw UsageError("pipeline needs b_i = 0 for every constraint; this instance has a linear part");
    }
    const auto trace = qdqi::run_pipeline(inst, w);
    write_trace(trace, dir);
    state = trace.final_state;
  } else {
    throw UsageError("unknown method '" + a.method + "'");
  }
  state = state.normalized();
  write_state(state, dir / "state.csv");

  const double expected = qdqi::expectation_satisfied(state, inst);
  std::cout << "ell=" << w.size() - 1 << '\n';
  std::cout << "terms=" << state.size() << '\n';
  std::cout << "norm=" << fmt17(std::sqrt(state.norm_sq())) << '\n';
  std::cout << "expected_satisfied=" << fmt17(expected) << '\n';
  std::cout << "expected_fraction=" << fmt17(expected / static_cast<double>(inst.m())) << '\n';
  std::cout << "formula_fraction="
            << fmt17(qdqi::expected_satisfied(w, inst.m(), inst.r(), inst.p()) / static_cast<double>(inst.m())) << '\n';
  if (a.method != "direct") {
    std::cout << "distance_to_direct=" << fmt17(qdqi::distance_up_to_phase_scale(qdqi::build_direct(inst, w), state))
              << '\n';
  }
  return kExitPass;
}

// ---- verify

struct VerifyArgs {
  std::string suite = "all", out;
  double tol = 1e-9;
};

int cmd_verify(const VerifyArgs& a) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  std::vector<int> ids;
  try {
    ids = qdqi::suite_criteria(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  qdqi::VerifyOptions opts;
  opts.tol = a.tol;
  ojson report;
  report["suite"] = a.suite;
  report["tolerance"] = a.tol;
  ojson crit = ojson::array();
  bool all = true;
  for (int id : ids) {
    const auto rep = qdqi::run_criterion(id, opts);
    ojson measured = ojson::object(), bounds = ojson::object();
    for (const auto& [k, v] : rep.measured) measured[k] = v;
    for (const auto& [k, v] : rep.bounds) bounds[k] = v;
    crit.push_back({{"id", rep.id},
                    {"title", rep.title},
                    {"passed", rep.passed},
                    {"measured", measured},
                    {"bounds", bounds},
                    {"detail", rep.detail}});
    all = all && rep.passed;
  }
  report["criteria"] = crit;
  report["passed"] = all;
  const std::string text = report.dump(2);
  if (a.out.empty()) {
    std::cout << text << '\n';
  } else {
    std::ofstream out(a.out);
    if (!out) throw UsageError("cannot write " + a.out);
    out << text << '\n';
  }
  return all ? kExitPass : kExitVerifyFailed;
}

// ---- semicircle

struct SemicircleArgs {
  std::vector<std::size_t> m{200};
  std::vector<std::size_t> ell{0, 5, 10, 20, 40};
  std::uint32_t r = 2, p = 5;
};

int cmd_semicircle(const SemicircleArgs& a) {
  const qdqi::PrimeModulus mod(a.p);
  if (a.r == 0 || a.r >= a.p) throw UsageError("-r must lie in 1..p-1");
  std::cout << "m,ell,r,p,lambda_max,expected_fraction,closed_form,gap\n";
  for (std::size_t m : a.m) {
    for (std::size_t ell : a.ell) {
      if (ell > m) continue;
      const auto eig = qdqi::max_eigpair(qdqi::build_A(m, ell, a.r, a.p));
      const double fraction = qdqi::expected_satisfied(eig.vector, m, a.r, a.p) / static_cast<double>(m);
      const double closed = qdqi::semicircle_closed_form(static_cast<double>(ell) / static_cast<double>(m),
                                                         static_cast<double>(a.r) / a.p);
      std::cout << m << ',' << ell << ',' << a.r << ',' << a.p << ',' << fmt17(eig.value) << ',' << fmt17(fraction)
                << ',' << fmt17(closed) << ',' << fmt17(std::abs(fraction - closed)) << '\n';
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qdqi: exact simulation and verification of decoded quantum interferometry on max-QUADSAT"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate an instance file");
  g->add_flag("--opi", gen.opi, "quadratic-OPI instance (default)");
  g->add_flag("--linsat", gen.linsat, "Reed-Solomon LINSAT instance (D = 0)");
  g->add_flag("--quadsat", gen.quadsat, "uniformly random max-QUADSAT instance");
  g->add_option("-p", gen.p, "odd prime")->capture_default_str();
  g->add_option("-n", gen.n, "number of variables")->capture_default_str();
  g->add_option("-r", gen.r, "preimage size")->capture_default_str();
  g->add_option("-m", gen.m, "number of constraints (--quadsat)");
  g->add_option("--seed", gen.seed, "generator seed")->capture_default_str();
  g->add_option("--out", gen.out, "output path (stdout if omitted)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "construct the DQI state");
  b->add_option("--instance", build.instance, "instance JSON")->required();
  b->add_option("--method", build.method, "direct | qftform | pipeline")
      ->check(CLI::IsMember({"direct", "qftform", "pipeline"}))
      ->capture_default_str();
  b->add_option("--ell", build.ell, "polynomial degree");
  b->add_flag("--ceil-ell", build.ceil_ell, "default ell = floor((n+1)/2) instead of floor(n/2)");
  b->add_option("--weights", build.weights, "comma-separated unit weight vector (overrides --ell)");
  b->add_option("--out", build.out, "output directory")->capture_default_str();

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "run verification suites");
  v->add_option("suite", ver.suite, "gauss | dqi | moments | uniformity | semicircle | primitives | all")
      ->capture_default_str();
  v->add_option("--tol", ver.tol, "amplitude tolerance")->capture_default_str();
  v->add_option("--out", ver.out, "report path (stdout if omitted)");

  SemicircleArgs sc;
  auto* s = app.add_subcommand("semicircle", "compare eigenvalue optima with the semicircle law");
  s->add_option("--m", sc.m, "constraint counts")->delimiter(',')->capture_default_str();
  s->add_option("--ell", sc.ell, "degrees")->delimiter(',')->capture_default_str();
  s->add_option("-r", sc.r, "preimage size")->capture_default_str();
  s->add_option("-p", sc.p, "odd prime")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*b) return cmd_build(build);
    if (*v) return cmd_verify(ver);
    if (*s) return cmd_semicircle(sc);
  } catch (const qdqi::DecoderError& e) {
    std::cerr << "decoder failure: " << e.what() << '\n';
    return kExitDecoder;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << " (raise QDQI_BUDGET)\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
