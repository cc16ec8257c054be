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

#include "lddqec/fidelity.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "../corpus.h"

using namespace lddqec;
using namespace lddqec::testing;

namespace {

struct Tables {
    WepTable qec;
    WepTable qed;
};

// Steane, the 13-qubit code and a few random codes with random groups.
const std::vector<Tables> &corpus_tables() {
    static const std::vector<Tables> tables = [] {
        std::vector<Tables> out;
        StabilizerCode s = steane_code();
        DecoderMap sd = steane_decoder(s);
        for (const char *f : {"ldd_standard_7.dd", "ldd_2084.dd", "ldd_665.dd"}) {
            DecouplingGroup g = load_dd(data_path(f));
            out.push_back({compute_weps(s, sd, g, 1), compute_qed_weps(s, g, 1)});
        }
        StabilizerCode c = code13();
        DecoderMap cd = reconstruct_code13_decoder(c);
        out.push_back({compute_weps(c, cd, code13_group(), 0), compute_qed_weps(c, code13_group(), 0)});
        std::mt19937_64 rng(17);
        for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{5, 1}, {6, 2}, {4, 1}}) {
            StabilizerCode r = random_stabilizer_code(n, k, rng);
            GeneratorSet gens(n, {PauliOperator(n, rng() & ((1u << n) - 1), rng() & ((1u << n) - 1)),
                                  PauliOperator(n, 0, 1)});
            DecouplingGroup g(gens);
            out.push_back({compute_weps(r, min_weight_decoder(r), g, 1), compute_qed_weps(r, g, 1)});
        }
        return out;
    }();
    return tables;
}

Rational rand_unit(std::mt19937_64 &rng, bool allow_one = true) {
    Rational r(static_cast<long>(rng() % 1001), allow_one ? 1000 : 1001);
    r.canonicalize();
    return r;
}

Rational p_of_z(const Rational &z) { return Rational(3 * z / (1 + 3 * z)); }

}  // namespace

TEST(fidelity, zero_noise_is_perfect) {
    for (const Tables &t : corpus_tables()) {
        for (Strategy s : all_strategies()) {
            NoiseParams<Rational> np{Rational(0), Rational(1, 3), Rational(1, 5), Rational(0)};
            auto r = evaluate(is_qed(s) ? t.qed : t.qec, s, np);
            EXPECT_EQ(r.fidelity, Rational(1)) << strategy_name(s);
            if (r.acceptance) {
                EXPECT_EQ(*r.acceptance, Rational(1));
            }
        }
    }
}

TEST(fidelity, double_matches_exact_and_stays_in_unit_interval) {
    std::mt19937_64 rng(2);
    for (const Tables &t : corpus_tables()) {
        for (int trial = 0; trial < 40; trial++) {
            NoiseParams<Rational> pr{Rational(static_cast<long>(rng() % 999), 1000), rand_unit(rng), rand_unit(rng),
                                     rand_unit(rng)};
            pr.p.canonicalize();
            NoiseParams<double> pd{pr.p.get_d(), pr.p_dd.get_d(), pr.p_qec.get_d(), pr.p_qed.get_d()};
            for (Strategy s : all_strategies()) {
                const WepTable &tb = is_qed(s) ? t.qed : t.qec;
                auto e = evaluate(tb, s, pr);
                auto d = evaluate(tb, s, pd);
                EXPECT_GE(e.fidelity, 0);
                EXPECT_LE(e.fidelity, 1);
                EXPECT_NEAR(d.fidelity, e.fidelity.get_d(), 1e-12) << strategy_name(s);
                if (e.acceptance) {
                    EXPECT_GE(*e.acceptance, 0);
                    EXPECT_LE(*e.acceptance, 1);
                    EXPECT_NEAR(*d.acceptance, e.acceptance->get_d(), 1e-12);
                }
            }
        }
    }
}

TEST(fidelity, qec_branch_sum_equals_compact_form) {
    std::mt19937_64 rng(3);
    for (const Tables &t : corpus_tables()) {
        for (int trial = 0; trial < 20; trial++) {
            NoiseParams<Rational> np{Rational(static_cast<long>(rng() % 500), 1000), Rational(1), rand_unit(rng),
                                     Rational(0)};
            np.p.canonicalize();
            EXPECT_EQ(qec_infidelity_by_branches(t.qec, np), 1 - f_qec(t.qec, np));
        }
    }
}

TEST(fidelity, dd_general_matches_closed_form_on_trivial_codes) {
    for (size_t k = 1; k <= 3; k++) {
        StabilizerCode c = trivial_code(k);
        WepTable t = compute_weps(c, min_weight_decoder(c), logical_group(c), 1);
        for (const Rational &p : {Rational(1, 100), Rational(1, 3)}) {
            NoiseParams<Rational> np{p, Rational(1, 7), Rational(0), Rational(0)};
            EXPECT_EQ(f_dd_general(t, np), f_dd_closed(p, np.p_dd, k));
            EXPECT_EQ(evaluate(t, Strategy::kDdPhys, np).fidelity, f_dd_closed(p, np.p_dd, k));
        }
    }
}

TEST(fidelity, hyb_vs_qec_criterion_matches_direct_comparison) {
    std::mt19937_64 rng(4);
    size_t n = 0;
    for (int trial = 0; trial < 1000; trial++) {
        const Tables &t = corpus_tables()[rng() % corpus_tables().size()];
        Rational z(static_cast<long>(1 + rng() % 1000), 2000);
        z.canonicalize();
        Rational pdd = rand_unit(rng, false);
        NoiseParams<Rational> np{p_of_z(z), pdd, Rational(0), Rational(0)};
        bool direct = f_hybrid(t.qec, np) > f_qec(t.qec, np);
        auto crit = hyb_vs_qec_criterion(t.qec, z);
        EXPECT_EQ(direct, crit.hybrid_wins);
        if (crit.hybrid_wins) {
            // Still ahead for a tiny recovery failure probability.
            NoiseParams<Rational> nr{np.p, pdd, parse_rational("1e-6"), Rational(0)};
            EXPECT_GT(f_hybrid(t.qec, nr), f_qec(t.qec, nr));
        }
        n++;
    }
    EXPECT_EQ(n, 1000u);
}

TEST(fidelity, qed_criterion_matches_direct_comparison) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; trial++) {
        const Tables &t = corpus_tables()[rng() % 4];  // k = 1 corpus codes
        Rational z(static_cast<long>(1 + rng() % 1000), 2000);
        z.canonicalize();
        NoiseParams<Rational> np{p_of_z(z), rand_unit(rng, false), Rational(0), Rational(0)};
        auto h = qed_hybrid(t.qed, np);
        auto d = qed_only(t.qed, np);
        QedCriterion c = qed_criterion(t.qed, z);
        EXPECT_EQ(c.fidelity_ok, h.fidelity >= d.fidelity);
        EXPECT_EQ(c.fidelity_strict, h.fidelity > d.fidelity);
        EXPECT_EQ(c.partial_order_ok, dominates(h.fidelity, *h.acceptance, d.fidelity, *d.acceptance, 1));
    }
}

TEST(fidelity, dominance_is_antisymmetric_up_to_ties) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 1000; trial++) {
        Rational f1 = rand_unit(rng), f2 = rand_unit(rng), a1 = rand_unit(rng), a2 = rand_unit(rng);
        if (trial % 3 == 0) {
            f2 = f1;
        }
        if (dominates(f1, a1, f2, a2, 1) && dominates(f2, a2, f1, a1, 1)) {
            EXPECT_EQ(f1, f2);
            EXPECT_EQ(a1 * (f1 - Rational(1, 4)), a2 * (f2 - Rational(1, 4)));
        }
    }
}

TEST(fidelity, reductions) {
    const Tables &t = corpus_tables()[3];
    NoiseParams<Rational> np{Rational(1, 50), Rational(1), Rational(1, 3), Rational(1, 9)};
    EXPECT_EQ(f_hybrid(t.qec, np), f_qec(t.qec, np));
    np.p_dd = Rational(1, 10);
    np.p_qec = Rational(1);
    EXPECT_EQ(f_hybrid(t.qec, np), f_ldd(t.qec, np));
    EXPECT_EQ(qed_ldd_only(t.qed, np).fidelity, f_ldd(t.qec, np));
    EXPECT_EQ(*qed_ldd_only(t.qed, np).acceptance, Rational(1));
}

TEST(fidelity, errors) {
    const Tables &t = corpus_tables()[0];
    NoiseParams<double> np{0.01, 0.5, 0.1, 0.0};
    EXPECT_THROW(evaluate(t.qed, Strategy::kHybrid, np), std::invalid_argument);
    EXPECT_THROW(evaluate(t.qec, Strategy::kQedOnly, np), std::invalid_argument);
    EXPECT_THROW(check_domain(NoiseParams<double>{1.0, 0.5, 0, 0}), std::domain_error);
    EXPECT_THROW(check_domain(NoiseParams<double>{0.1, 1.5, 0, 0}), std::domain_error);
    EXPECT_THROW(check_domain(NoiseParams<double>{0.1, 0.5, -0.1, 0}), std::domain_error);
    EXPECT_THROW(parse_strategy("hybird"), std::invalid_argument);
    EXPECT_EQ(parse_strategy("qed_hybrid"), Strategy::kQedHybrid);
    EXPECT_THROW(hyb_vs_qec_criterion(t.qec, Rational(0)), std::domain_error);
    EXPECT_THROW(f_dd_closed(1.0, 0.5, 1), std::domain_error);
}

TEST(fidelity, relative_advantage) {
    EXPECT_DOUBLE_EQ(relative_advantage(1e-3, 1e-5).value, 2.0);
    EXPECT_FALSE(relative_advantage(1e-3, 1e-5).degenerate);
    EXPECT_LT(relative_advantage(1e-5, 1e-3).value, 0);
    RelativeAdvantage d = relative_advantage(1e-3, 0.0);
    EXPECT_TRUE(d.degenerate);
    EXPECT_TRUE(std::isinf(d.value) && d.value > 0);
    EXPECT_TRUE(std::isnan(relative_advantage(0.0, 0.0).value));
}

TEST(fidelity, dual_series_of_closed_forms) {
    // First-order coefficient in z of QEC-only infidelity is zero for a distance-3 code.
    const Tables &t = corpus_tables()[0];
    auto cf = closed_form<Rational>(t.qec, Strategy::kQecOnly, Rational(1), Rational(0), Rational(0));
    auto s = series_divide(cf.infid_num, cf.infid_den, 3);
    EXPECT_EQ(s[0], 0);
    EXPECT_EQ(s[1], 0);
    EXPECT_EQ(s[2], 147);
}
