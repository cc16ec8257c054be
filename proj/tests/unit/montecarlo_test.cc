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

#include "lddqec/montecarlo.h"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "../corpus.h"

using namespace lddqec;
using namespace lddqec::testing;

TEST(montecarlo, rejection_sampler_chi_square) {
    const size_t n = 2;
    const double p = 0.3, p_dd = 0.2;
    DecouplingGroup g(GeneratorSet(n, {parse_pauli("XZ")}));
    std::array<double, 16> prob{};
    double norm = 0;
    for (uint64_t i = 0; i < 16; i++) {
        PauliOperator e(n, i & 3, i >> 2);
        double w = static_cast<double>(e.weight());
        prob[i] = std::pow(p / 3, w) * std::pow(1 - p, 2 - w) * (g.suppresses(e) ? p_dd : 1.0);
        norm += prob[i];
    }
    std::array<uint64_t, 16> hist{};
    std::mt19937_64 rng(42);
    const uint64_t draws = 1'000'000;
    for (uint64_t t = 0; t < draws; t++) {
        PauliOperator e = sample_error(rng, n, p, &g, p_dd);
        hist[e.x_mask() | (e.z_mask() << 2)]++;
    }
    double chi2 = 0;
    for (size_t i = 0; i < 16; i++) {
        double expect = draws * prob[i] / norm;
        chi2 += (hist[i] - expect) * (hist[i] - expect) / expect;
    }
    // 15 degrees of freedom, significance 1e-3.
    EXPECT_LT(chi2, 37.697);
}

TEST(montecarlo, seed_determinism) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    DecouplingGroup g = steane_standard_group();
    McConfig cfg;
    cfg.shots = 20000;
    cfg.seed = 123;
    cfg.strategy = Strategy::kQedHybrid;
    cfg.params = {0.1, 0.3, 0.1, 0.05};
    cfg.threads = 3;
    McEstimate a = estimate(cfg, c, &d, g);
    McEstimate b = estimate(cfg, c, &d, g);
    EXPECT_EQ(a.faults, b.faults);
    EXPECT_EQ(a.shots_accepted, b.shots_accepted);
    EXPECT_EQ(mc_csv_row(cfg, a), mc_csv_row(cfg, b));
    EXPECT_EQ(a.shots, 20000u);
    cfg.seed = 124;
    McEstimate e = estimate(cfg, c, &d, g);
    EXPECT_TRUE(e.faults != a.faults || e.shots_accepted != a.shots_accepted);
}

TEST(montecarlo, agrees_with_closed_forms_at_moderate_shots) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    DecouplingGroup g = steane_standard_group();
    WepTable qec = compute_weps(c, d, g, 1), qed = compute_qed_weps(c, g, 1);
    for (Strategy s : all_strategies()) {
        McConfig cfg;
        cfg.shots = 200000;
        cfg.seed = 9;
        cfg.strategy = s;
        cfg.params = {0.12, 0.2, 0.1, 0.1};
        McEstimate e = estimate(cfg, c, &d, g);
        auto r = evaluate(is_qed(s) ? qed : qec, s, cfg.params);
        EXPECT_LE(std::abs(e.f_hat - r.fidelity), 4 * e.f_stderr) << strategy_name(s);
        EXPECT_GT(e.faults, 0u) << strategy_name(s);
        if (r.acceptance) {
            EXPECT_LE(std::abs(e.pa_hat - *r.acceptance), 4 * e.pa_stderr + 1e-15) << strategy_name(s);
        }
    }
}

TEST(montecarlo, errors) {
    StabilizerCode c = steane_code();
    DecouplingGroup g = steane_standard_group();
    std::mt19937_64 rng(1);
    McConfig cfg;
    cfg.strategy = Strategy::kHybrid;
    cfg.params = {0.1, 0.5, 0, 0};
    EXPECT_THROW(estimate(cfg, c, nullptr, g), std::invalid_argument);
    cfg.shots = 0;
    DecoderMap d = steane_decoder(c);
    EXPECT_THROW(estimate(cfg, c, &d, g), std::invalid_argument);
    EXPECT_THROW(sample_error(rng, 2, 1.0, nullptr, 1.0), std::domain_error);
    DecouplingGroup small(GeneratorSet(2, {parse_pauli("XX")}));
    EXPECT_THROW(run_cycle(rng, c, &d, small, Strategy::kHybrid, cfg.params), std::invalid_argument);
    // Identity has probability 1e-12 and everything else is rejected.
    DecouplingGroup full = logical_group(trivial_code(1));
    EXPECT_THROW(sample_error(rng, 1, 1 - 1e-12, &full, 0.0), SamplingStalled);
}

TEST(montecarlo, csv_renders_missing_estimates) {
    McConfig cfg;
    cfg.strategy = Strategy::kQedOnly;
    McEstimate e;
    e.no_accepted = true;
    e.f_hat = e.f_stderr = std::nan("");
    std::string row = mc_csv_row(cfg, e);
    EXPECT_EQ(row.rfind("qed_only,", 0), 0u);
    EXPECT_NE(row.find(",nan,nan,"), std::string::npos) << row;
    EXPECT_EQ(mc_csv_header(), "strategy,p,p_dd,p_qec,p_qed,shots,seed,f_hat,f_stderr,pa_hat,pa_stderr");
}
