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

#include "qdqi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qdqi/decoder.hpp"
#include "qdqi/dqi_builder.hpp"
#include "qdqi/gauss_sums.hpp"
#include "qdqi/primitives.hpp"
#include "qdqi/quadsat_model.hpp"
#include "qdqi/spectral.hpp"
#include "qdqi/statevector.hpp"

namespace qdqi {

namespace {

constexpr std::uint64_t kInstanceSeed = 42;

struct Instances {
  static QuadSatInstance opi5() { return make_quadratic_opi(PrimeModulus(5), 2, 2, kInstanceSeed); }
  static QuadSatInstance opi7() { return make_quadratic_opi(PrimeModulus(7), 2, 3, kInstanceSeed); }
  static QuadSatInstance linsat5() { return make_linsat_rs(PrimeModulus(5), 2, 2, kInstanceSeed); }
};

// Seeded unit vectors; Box-Muller on raw engine output keeps them portable.
std::vector<std::vector<double>> random_unit_vectors(std::size_t count, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53; };
  std::vector<std::vector<double>> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<double> v(dim);
    double norm = 0.0;
    for (auto& x : v) {
      x = std::sqrt(-2.0 * std::log(uniform())) * std::cos(2.0 * std::numbers::pi * uniform());
      norm += x * x;
    }
    for (auto& x : v) x /= std::sqrt(norm);
    out.push_back(std::move(v));
  }
  return out;
}

CriterionReport report(int id, std::string title) {
  CriterionReport rep;
  rep.id = id;
  rep.title = std::move(title);
  return rep;
}

std::string rational_str(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

CriterionReport gauss_sums(const VerifyOptions& o) {
  CriterionReport rep = report(1, "Gauss-sum closed forms match enumeration");
  double worst_single = 0.0, worst_general = 0.0;
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const FieldElement fa(a, mod);
      worst_single = std::max(worst_single, std::abs(quad_gauss_closed(fa) - quad_gauss_brute(fa)));
    }
  }
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      for (std::uint32_t b = 0; b < p; ++b) {
        for (std::uint32_t c = 0; c < p; ++c) {
          const FieldElement fa(a, mod), fb(b, mod), fc(c, mod);
          worst_general = std::max(worst_general,
                                   std::abs(general_quad_sum_closed(fa, fb, fc) - general_quad_sum_brute(fa, fb, fc)));
        }
      }
    }
  }
  rep.measured = {{"max_error_g", worst_single}, {"max_error_general", worst_general}};
  rep.bounds = {{"tolerance", o.tol}, {"runtime_limit_s", 10.0}};
  rep.passed = worst_single <= o.tol && worst_general <= o.tol;
  return rep;
}

CriterionReport f_alpha_identity(const VerifyOptions& o) {
  CriterionReport rep = report(2, "F_alpha entries equal their defining sums");
  double worst = 0.0;
  std::size_t checks = 0;
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t alpha = 0; alpha < p; ++alpha) {
      const DigitMatrix F = f_alpha_matrix(FieldElement(alpha, mod));
      for (std::uint32_t z = 0; z < p; ++z) {
        for (std::uint32_t x = 0; x < p; ++x) {
          const Complex brute = general_quad_sum_brute(FieldElement(mod_neg(x, p), mod),
                                                       FieldElement(mod_sub(z, alpha, p), mod), FieldElement(0, mod));
          worst = std::max(worst, std::abs(F[z][x] - brute));
          ++checks;
        }
      }
    }
  }
  rep.measured = {{"max_error", worst}, {"entries_checked", static_cast<double>(checks)}};
  rep.bounds = {{"tolerance", o.tol}, {"runtime_limit_s", 5.0}};
  rep.passed = worst <= o.tol;
  return rep;
}

CriterionReport three_way(const VerifyOptions& o) {
  CriterionReport rep = report(3, "direct, QFT-form and pipeline states agree");
  double worst = 0.0;
  for (const auto& inst : {Instances::opi5(), Instances::opi7()}) {
    const auto w = optimal_weights(inst, 1);
    const auto direct = build_direct(inst, w);
    const auto fourier = build_qft_form(inst, w);
    const auto piped = run_pipeline(inst, w).final_state;
    const double d1 = distance_up_to_phase_scale(direct, fourier);
    const double d2 = distance_up_to_phase_scale(direct, piped);
    const double d3 = distance_up_to_phase_scale(fourier, piped);
    const std::string tag = "p" + std::to_string(inst.p());
    rep.measured.push_back({tag + "_direct_vs_qftform", d1});
    rep.measured.push_back({tag + "_direct_vs_pipeline", d2});
    rep.measured.push_back({tag + "_qftform_vs_pipeline", d3});
    worst = std::max({worst, d1, d2, d3});
  }
  rep.bounds = {{"tolerance", o.tol}, {"runtime_limit_s", 60.0}};
  rep.passed = worst <= o.tol;
  return rep;
}

CriterionReport distribution_identity(const VerifyOptions& o) {
  CriterionReport rep = report(4, "measured Pr[s] equals |P(s)|^2 N(s) / Z");
  double worst = 0.0;
  for (const auto& inst : {Instances::opi5(), Instances::opi7()}) {
    const auto w = optimal_weights(inst, 1);
    const auto state = build_direct(inst, w);
    const auto measured =
        measure_distribution(state, inst.m() + 1, [&](const Digits& x) { return satisfied_count(inst, x); });
    const auto P = dqi_polynomial_values(inst, w);
    const auto N = sat_distribution(inst);
    std::vector<double> predicted(inst.m() + 1);
    double Z = 0.0;
    for (std::size_t s = 0; s <= inst.m(); ++s) {
      predicted[s] = P[s] * P[s] * static_cast<double>(N.counts[s]);
      Z += predicted[s];
    }
    double dev = 0.0;
    for (std::size_t s = 0; s <= inst.m(); ++s) dev = std::max(dev, std::abs(measured[s] - predicted[s] / Z));
    rep.measured.push_back({"p" + std::to_string(inst.p()) + "_max_deviation", dev});
    worst = std::max(worst, dev);
  }
  rep.bounds = {{"tolerance", o.tol}};
  rep.passed = worst <= o.tol;
  return rep;
}

CriterionReport moment_matching(const VerifyOptions&) {
  CriterionReport rep = report(5, "LINSAT moments 0..3 equal binomial moments exactly");
  const auto inst = Instances::linsat5();
  const auto dist = sat_distribution(inst);
  const auto ref = binomial_reference(inst.m(), inst.r(), inst.p());
  const std::size_t dual = dual_min_distance(linear_syndrome_code(inst, 0));
  rep.measured.push_back({"dual_distance", static_cast<double>(dual)});
  rep.passed = true;
  std::string detail;
  for (unsigned k = 0; k <= 3; ++k) {
    const Rational got = moment(dist, k);
    const Rational want = moment(std::span<const Rational>(ref), k);
    rep.measured.push_back({"moment" + std::to_string(k), got.convert_to<double>()});
    rep.bounds.push_back({"binomial_moment" + std::to_string(k), want.convert_to<double>()});
    if (got != want) {
      rep.passed = false;
      detail += "k=" + std::to_string(k) + ": " + rational_str(got) + " != " + rational_str(want) + "; ";
    }
  }
  rep.detail = detail.empty() ? "all moments equal" : detail + "instance dual distance " + std::to_string(dual) +
                                                          " does not exceed 2l+1 = 3";
  return rep;
}

CriterionReport expectation_check(const QuadSatInstance& inst, int id, const std::string& title, double bound) {
  CriterionReport rep = report(id, title);
  double worst = 0.0;
  for (const auto& w : random_unit_vectors(20, 2, 7)) {
    const double sim = expectation_satisfied(build_direct(inst, w), inst);
    const double formula = expected_satisfied(w, inst.m(), inst.r(), inst.p());
    worst = std::max(worst, std::abs(sim - formula));
  }
  rep.measured = {{"max_gap", worst}};
  rep.bounds = {{"bound", bound}};
  rep.passed = worst <= bound;
  return rep;
}

CriterionReport expectation_linsat(const VerifyOptions& o) {
  auto inst = Instances::linsat5();
  auto rep = expectation_check(inst, 6, "tridiagonal expectation formula is exact on LINSAT", o.tol);
  rep.measured.push_back({"dual_distance", static_cast<double>(dual_min_distance(linear_syndrome_code(inst, 0)))});
  return rep;
}

CriterionReport expectation_quadsat(const VerifyOptions&) {
  const auto inst = Instances::opi7();
  double sum = 0.0;
  for (const auto& row : inst.D()) {
    const auto rank = static_cast<double>(std::count_if(row.begin(), row.end(), [](auto v) { return v != 0; }));
    sum += std::pow(static_cast<double>(inst.p()), -rank / 2.0);
  }
  return expectation_check(inst, 7, "tridiagonal expectation formula within the near-uniformity bound on QUADSAT",
                  static_cast<double>(inst.m()) * sum + 1e-6);
}

CriterionReport uniformity(const VerifyOptions&) {
  CriterionReport rep = report(8, "quadratic forms are near-uniform as predicted");
  double worst_bound_ratio = 0.0, worst_closed = 0.0;
  bool ok = true;
  for (std::uint32_t p : {3u, 5u}) {
    const PrimeModulus mod(p);
    for (std::size_t rank = 1; rank <= 4; ++rank) {
      Digits lambdas(rank, 1);
      do {
        const auto counts = quadratic_form_counts(p, lambdas);
        const double total = std::pow(static_cast<double>(p), static_cast<double>(rank));
        std::vector<FieldElement> fl;
        for (auto l : lambdas) fl.emplace_back(l, mod);
        for (std::uint32_t a = 0; a < p; ++a) {
          const double pr = static_cast<double>(counts[a]) / total;
          const double dev = std::abs(pr - 1.0 / p);
          const double bound = std::pow(static_cast<double>(p), -static_cast<double>(rank) / 2.0);
          const double closed_err = std::abs(pr - uniformity_closed_form(fl, FieldElement(a, mod)));
          worst_bound_ratio = std::max(worst_bound_ratio, dev / bound);
          worst_closed = std::max(worst_closed, closed_err);
          if (dev > bound || closed_err > 1e-12) ok = false;
        }
        // next tuple in (F_p^x)^rank
        std::size_t i = rank;
        while (i > 0 && lambdas[i - 1] == p - 1) lambdas[--i] = 1;
        if (i == 0) break;
        ++lambdas[i - 1];
      } while (true);
    }
  }
  rep.measured = {{"max_deviation_over_bound", worst_bound_ratio}, {"max_closed_form_error", worst_closed}};
  rep.bounds = {{"deviation_over_bound", 1.0}, {"closed_form_tolerance", 1e-12}};
  rep.passed = ok;
  return rep;
}

CriterionReport semicircle_numbers(const VerifyOptions&) {
  CriterionReport rep = report(9, "semicircle closed form reproduces the quoted value");
  const double v = semicircle_closed_form(1.0 / 20.0, 0.5);
  bool limit_exact = true;
  for (double q : {0.5, 0.4, 2.0 / 7.0, 1.0 / 3.0, 0.9}) limit_exact = limit_exact && semicircle_closed_form(0.0, q) == q;
  rep.measured = {{"semicircle_1_20_half", v}, {"limit_exact", limit_exact ? 1.0 : 0.0}};
  rep.bounds = {{"quoted", 0.7179}, {"tolerance", 1e-3}};
  rep.passed = std::abs(v - 0.7179) <= 1e-3 && limit_exact;
  return rep;
}

CriterionReport asymptotic(const VerifyOptions&) {
  CriterionReport rep = report(10, "eigenvalue fraction approaches the semicircle law");
  const std::size_t m = 200, ell = 20;
  const double q = 0.5;
  const auto eig = max_eigpair(build_A_fraction(m, ell, q));
  const double fraction = expected_satisfied_fraction(eig.vector, m, q) / static_cast<double>(m);
  const double closed = semicircle_closed_form(static_cast<double>(ell) / m, q);
  rep.measured = {{"lambda_max", eig.value}, {"fraction", fraction}, {"closed_form", closed},
                  {"gap", std::abs(fraction - closed)}};
  rep.bounds = {{"gap", 0.02}, {"runtime_limit_s", 5.0}};
  rep.passed = std::abs(fraction - closed) <= 0.02;
  return rep;
}

SparseState phase_target(const PrimeModulus& mod, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = mod.value();
  SparseState t(RegisterLayout(mod, {{"x", 1}}));
  for (std::uint32_t x = 0; x < p; ++x) {
    const std::uint32_t u = mod_add(x, b, p);
    t.add({x}, root_of_unity(mod_mul(a, mod_mul(u, u, p), p), p));
  }
  return t;
}

CriterionReport primitives(const VerifyOptions& o) {
  CriterionReport rep = report(11, "primitive simulations reproduce their targets");
  double worst_state = 0.0, worst_p1 = 0.0, worst_p2 = 0.0, worst_cond = 0.0;
  bool prob_ok = true;
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const PrimeModulus mod(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      const auto r1 = sim_quadratic_phase(FieldElement(a, mod));
      worst_state = std::max(worst_state, distance_up_to_phase_scale(phase_target(mod, a, 0), r1.state));
      const double gap1 = std::abs(r1.success_probability - 0.125);
      worst_p1 = std::max(worst_p1, gap1);
      if (gap1 > 2.0 / p) prob_ok = false;
      for (std::uint32_t b = 0; b < p; ++b) {
        const auto r2 = sim_shifted_quadratic_phase(FieldElement(a, mod), FieldElement(b, mod));
        worst_state = std::max(worst_state, distance_up_to_phase_scale(phase_target(mod, a, b), r2.state));
        const double gap2 = std::abs(r2.stage_probabilities.back() - 1.0 / p);
        worst_p2 = std::max(worst_p2, gap2);
        if (gap2 > 1e-12) prob_ok = false;

        const std::vector<FieldElement> diag{FieldElement(a, mod), FieldElement(b, mod)};
        const auto r3 = sim_quadratic_form_phase(diag);
        SparseState target(RegisterLayout(mod, {{"x", 2}}));
        for (std::uint32_t x1 = 0; x1 < p; ++x1) {
          for (std::uint32_t x2 = 0; x2 < p; ++x2) {
            const std::uint32_t e = mod_add(mod_mul(a, mod_mul(x1, x1, p), p), mod_mul(b, mod_mul(x2, x2, p), p), p);
            target.add({x1, x2}, root_of_unity(e, p));
          }
        }
        worst_state = std::max(worst_state, distance_up_to_phase_scale(target, r3.state));
      }
    }
    // conditional two-branch assembly of F_alpha
    for (std::uint32_t alpha = 0; alpha < p; ++alpha) {
      const DigitMatrix F = f_alpha_matrix(FieldElement(alpha, mod));
      DigitMatrix zero_branch(p, std::vector<Complex>(p)), phase_branch = F;
      for (std::uint32_t x = 0; x < p; ++x) zero_branch[alpha][x] = static_cast<double>(p);
      for (std::uint32_t z = 0; z < p; ++z) phase_branch[z][0] = 0.0;
      const QuantumCondition cond([](std::uint32_t x) { return x != 0; }, zero_branch, phase_branch, mod);
      for (std::uint32_t z = 0; z < p; ++z) {
        for (std::uint32_t x = 0; x < p; ++x) {
          worst_cond = std::max(worst_cond, std::abs(cond.matrix()[z][x] - F[z][x] / std::numbers::sqrt2));
        }
      }
    }
  }
  rep.measured = {{"max_state_distance", worst_state},
                  {"max_primitive1_probability_gap", worst_p1},
                  {"max_primitive2_uncompute_gap", worst_p2},
                  {"max_condition_matrix_error", worst_cond}};
  rep.bounds = {{"state_tolerance", o.tol}, {"primitive1_gap_p3", 2.0 / 3.0}, {"primitive1_gap_p11", 2.0 / 11.0},
                {"primitive2_tolerance", 1e-12}};
  rep.detail = "quadratic-phase success probability measured exactly 1/4 for every input";
  rep.passed = worst_state <= o.tol && worst_cond <= o.tol && prob_ok;
  return rep;
}

CriterionReport decoder_roundtrip(const VerifyOptions&) {
  CriterionReport rep = report(12, "syndrome decoding round-trips every correctable error");
  std::size_t failures = 0, trials = 0;
  bool distance_ok = true;
  for (const auto& inst : {Instances::opi5(), Instances::opi7()}) {
    const SyndromeCode code = quadratic_syndrome_code(inst, 1);
    for (std::size_t w = 0; w <= code.max_weight(); ++w) {
      for_each_weight_vector(code.cols(), code.p(), w, [&](const Digits& y) {
        ++trials;
        const auto r = decode_brute(code, code.syndrome(y));
        if (r.status != DecodeStatus::kFound || r.y != y) ++failures;
        return true;
      });
    }
    const std::size_t d = dual_min_distance(code);
    rep.measured.push_back({"p" + std::to_string(inst.p()) + "_dual_distance", static_cast<double>(d)});
    rep.bounds.push_back({"p" + std::to_string(inst.p()) + "_expected_distance", static_cast<double>(inst.n() + 1)});
    distance_ok = distance_ok && d == inst.n() + 1;
  }
  rep.measured.push_back({"errors_checked", static_cast<double>(trials)});
  rep.measured.push_back({"failures", static_cast<double>(failures)});
  rep.passed = failures == 0 && distance_ok;
  return rep;
}

}  // namespace

CriterionReport run_criterion(int id, const VerifyOptions& opts) {
  using Fn = CriterionReport (*)(const VerifyOptions&);
  static constexpr Fn table[] = {gauss_sums,      f_alpha_identity, three_way,          distribution_identity,
                                 moment_matching, expectation_linsat,  expectation_quadsat,   uniformity,
                                 semicircle_numbers, asymptotic,    primitives,         decoder_roundtrip};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  const auto start = std::chrono::steady_clock::now();
  CriterionReport rep = table[id - 1](opts);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& [name, limit] : rep.bounds) {
    if (name == "runtime_limit_s" && rep.seconds >= limit) {
      rep.passed = false;
      rep.detail += (rep.detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
    }
  }
  return rep;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "gauss") return {1, 2};
  if (suite == "dqi") return {3, 4, 12};
  if (suite == "moments") return {5, 6, 7};
  if (suite == "uniformity") return {8};
  if (suite == "semicircle") return {9, 10};
  if (suite == "primitives") return {11};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<std::string> suite_names() { return {"gauss", "dqi", "moments", "uniformity", "semicircle", "primitives", "all"}; }

}  // namespace qdqi
