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

#include <benchmark/benchmark.h>

#include "qdqi/decoder.hpp"
#include "qdqi/dqi_builder.hpp"
#include "qdqi/spectral.hpp"

namespace {

using namespace qdqi;

void BM_qft(benchmark::State& st) {
  const auto p = static_cast<std::uint32_t>(st.range(0));
  SparseState s(RegisterLayout(PrimeModulus(p), {{"x", 3}}));
  Digits x(3, 0);
  do {
    s.add(x, 1.0);
  } while (next_digits(x, p));
  for (auto _ : st) benchmark::DoNotOptimize(qft(s, "x"));
}
BENCHMARK(BM_qft)->Arg(5)->Arg(11);

void BM_build_direct(benchmark::State& st) {
  const auto inst = make_quadratic_opi(PrimeModulus(11), static_cast<std::size_t>(st.range(0)), 5, 42);
  const auto w = optimal_weights(inst, default_opi_ell(inst.n()));
  for (auto _ : st) benchmark::DoNotOptimize(build_direct(inst, w));
}
BENCHMARK(BM_build_direct)->Arg(2)->Arg(3)->Arg(4);

void BM_build_qft_form(benchmark::State& st) {
  const auto inst = make_quadratic_opi(PrimeModulus(11), static_cast<std::size_t>(st.range(0)), 5, 42);
  const auto w = optimal_weights(inst, default_opi_ell(inst.n()));
  for (auto _ : st) benchmark::DoNotOptimize(build_qft_form(inst, w));
}
BENCHMARK(BM_build_qft_form)->Arg(2)->Arg(3);

void BM_pipeline(benchmark::State& st) {
  const auto inst = make_quadratic_opi(PrimeModulus(7), static_cast<std::size_t>(st.range(0)), 3, 42);
  const auto w = optimal_weights(inst, default_opi_ell(inst.n()));
  for (auto _ : st) benchmark::DoNotOptimize(run_pipeline(inst, w));
}
BENCHMARK(BM_pipeline)->Arg(2)->Arg(4);

void BM_max_eigpair(benchmark::State& st) {
  const auto A = build_A_fraction(static_cast<std::size_t>(st.range(0)), static_cast<std::size_t>(st.range(0)) / 10, 0.5);
  for (auto _ : st) benchmark::DoNotOptimize(max_eigpair(A));
}
BENCHMARK(BM_max_eigpair)->Arg(200)->Arg(2000)->Arg(20000);

void BM_decode(benchmark::State& st) {
  const auto inst = make_quadratic_opi(PrimeModulus(17), 4, 8, 42);
  const auto code = quadratic_syndrome_code(inst, 2);
  Digits y(inst.m(), 0);
  y[3] = 5;
  y[11] = 2;
  const Digits s = code.syndrome(y);
  for (auto _ : st) benchmark::DoNotOptimize(decode_brute(code, s));
}
BENCHMARK(BM_decode);

}  // namespace

BENCHMARK_MAIN();
