// Copyright 2026 The lddqec Authors
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

#include <random>

#include "../tests/corpus.h"
#include "lddqec/fidelity.h"
#include "lddqec/montecarlo.h"
#include "lddqec/sweep.h"

using namespace lddqec;
using namespace lddqec::testing;

namespace {

void BM_commutes(benchmark::State &state) {
    std::mt19937_64 rng(1);
    std::vector<PauliOperator> ps;
    for (int i = 0; i < 1024; i++) {
        ps.emplace_back(64, rng(), rng());
    }
    size_t i = 0, acc = 0;
    for (auto _ : state) {
        acc += anticommutes_unchecked(ps[i & 1023], ps[(i + 1) & 1023]);
        i++;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(BM_commutes);

void BM_enumerate_steane(benchmark::State &state) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    DecouplingGroup g = steane_standard_group();
    PauliEnumerator en(c, &d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(en.count(g, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(en.total()));
}
BENCHMARK(BM_enumerate_steane);

void BM_enumerate_code13(benchmark::State &state) {
    StabilizerCode c = code13();
    DecoderMap d = reconstruct_code13_decoder(c);
    DecouplingGroup g = code13_group();
    PauliEnumerator en(c, &d);
    for (auto _ : state) {
        benchmark::DoNotOptimize(en.count(g, static_cast<unsigned>(state.range(0))));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(en.total()));
}
BENCHMARK(BM_enumerate_code13)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_min_weight_decoder_code13(benchmark::State &state) {
    StabilizerCode c = code13();
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_weight_decoder(c, TieBreak::kSupportFromRight));
    }
}
BENCHMARK(BM_min_weight_decoder_code13)->Unit(benchmark::kMillisecond);

void BM_evaluate_hybrid(benchmark::State &state) {
    StabilizerCode c = code13();
    WepTable t = compute_weps(c, reconstruct_code13_decoder(c), code13_group(), 0);
    NoiseParams<double> np{1e-3, 0.01, 0.01, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(t, Strategy::kHybrid, np));
    }
}
BENCHMARK(BM_evaluate_hybrid);

void BM_scan_steane(benchmark::State &state) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    auto cands = dressing_candidates(c);
    cands.resize(static_cast<size_t>(state.range(0)));
    NoiseParams<double> np{1e-4, 0.01, 0.01, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(scan_ldd(c, d, cands, np, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_scan_steane)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_mc_hybrid_code13(benchmark::State &state) {
    StabilizerCode c = code13();
    DecoderMap d = reconstruct_code13_decoder(c);
    DecouplingGroup g = code13_group();
    McConfig cfg;
    cfg.shots = 100000;
    cfg.strategy = Strategy::kHybrid;
    cfg.params = {0.05, 0.1, 0.05, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate(cfg, c, &d, g));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.shots));
}
BENCHMARK(BM_mc_hybrid_code13)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
