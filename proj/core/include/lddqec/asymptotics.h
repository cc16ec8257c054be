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

#ifndef LDDQEC_ASYMPTOTICS_H
#define LDDQEC_ASYMPTOTICS_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lddqec/code.h"
#include "lddqec/fidelity.h"
#include "lddqec/rational.h"
#include "lddqec/wep.h"

namespace lddqec {

/// The inputs contradict each other (e.g. a table that cannot come from any code).
struct InconsistentInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QecAsymptotics {
    size_t alpha = 0;      // min weight of an uncorrectable error
    uint64_t a_count = 0;  // number of uncorrectable errors of weight alpha
    Rational b_qec;        // order-1 coefficient of C - 4^-k D
};

/// Reads alpha and a from notC. Throws InconsistentInput if notC is all zero.
QecAsymptotics qec_asymptotics(const WepTable &t);

struct SuppressedAsymptotics {
    size_t beta = 0;
    uint64_t b_count = 0;
};

/// Reads beta and B from S-notC. Throws InconsistentInput if S-notC is all zero.
SuppressedAsymptotics suppressed_asymptotics(const WepTable &t);

/// Weight-1 census of one code and group.
struct WeightOneCounts {
    uint64_t stabilizers = 0;                    // zero syndrome, trivial logical
    uint64_t zero_syndrome = 0;                  // zero syndrome
    uint64_t unsuppressed_not_stabilizer = 0;    // commutes with G, not a stabilizer
    uint64_t unsuppressed_nonzero_syndrome = 0;  // commutes with G, nonzero syndrome
};

WeightOneCounts weight_one_counts(const StabilizerCode &code, const DecouplingGroup &dd);

struct LddCoeffs {
    Rational a;  // order-1 coefficient of 1 - F_LDD at p_dd = 0
    Rational b;  // same at p_dd = 1
};

/// Computed by direct weight-1 enumeration. When the code has no weight-1 logical the
/// (1 - 4^-k)-factored forms are checked and a std::logic_error is thrown on mismatch.
LddCoeffs ldd_linear_coeffs(const StabilizerCode &code, const DecouplingGroup &dd);

struct SuppressionCriteria {
    size_t alpha = 0;
    size_t beta = 0;
    bool equal_weights = false;  // beta == alpha
    bool dressable = false;      // beta > alpha and a weight-alpha uncorrectable is detected
    std::optional<size_t> distance;  // empty for k = 0
    bool distance_bound_applicable = false;  // distance >= 2
    bool distance_bound_holds = false;       // alpha <= ceil(d/2), weight-alpha uncorrectables all detected
    bool logical_group_applicable = false;   // group equals the logical group and beta > alpha
    bool logical_group_holds = false;        // some weight-alpha uncorrectable has a nonzero syndrome
    bool any_weight_alpha_detected = false;
    bool all_weight_alpha_detected = false;
};

SuppressionCriteria suppression_criteria(const StabilizerCode &code, const DecoderMap &decoder,
                                         const DecouplingGroup &dd, const WepTable &wep);

struct Dressing {
    DecouplingGroup group;
    size_t generator_index = 0;
    PauliOperator error;       // the weight-alpha uncorrectable error that becomes suppressed
    PauliOperator stabilizer;  // the stabilizer multiplied into the generator
    size_t beta_after = 0;     // recomputed from a fresh enumeration
};

/// Replaces one generator g by gS so that a weight-alpha uncorrectable error becomes
/// suppressed. Returns nullopt iff every weight-alpha uncorrectable error has zero
/// syndrome. Throws std::invalid_argument if beta <= alpha already.
std::optional<Dressing> find_dressing(const StabilizerCode &code, const DecoderMap &decoder,
                                      const DecouplingGroup &dd, const WepTable &wep, unsigned threads = 0);

/// Exact z-series coefficients 0..order of a strategy's infidelity. order <= n.
std::vector<Rational> series_infidelity(const WepTable &t, Strategy s, const Rational &p_dd, const Rational &p_qec,
                                        size_t order, const Rational &p_qed = Rational(0));

/// Series coefficients as c0 + c1 * p_dd, recovered from p_dd in {0, 1}; affine is
/// false if some coefficient misses at p_dd = 1/2.
struct AffineSeries {
    std::vector<Rational> intercept;
    std::vector<Rational> slope;
    bool affine = true;
};

AffineSeries series_affine_in_p_dd(const WepTable &t, Strategy s, const Rational &p_qec, size_t order);

struct QedAsymptotics {
    size_t d = 0;
    uint64_t qed_a = 0;
    Rational linear_coeff;     // coefficient of p_qed z in 1 - F_QED
    Rational reject_constant;  // coefficient of p_qed in 1 - P_A
    Rational reject_linear;    // coefficient of z in 1 - P_A
};

/// From a QED table. Throws std::invalid_argument if d < 2.
QedAsymptotics qed_asymptotics(const WepTable &qed);

/// The same four coefficients read off the exact QED-only closed form, expanded to first
/// order in p_qed.
struct QedSeriesTerms {
    Rational leading;  // z^d coefficient at p_qed = 0
    Rational linear_coeff;
    Rational reject_constant;
    Rational reject_linear;
};

QedSeriesTerms qed_series_terms(const WepTable &qed, size_t d);

/// Result of scanning p downward for F_hyb > F_QEC at p_qec = 0.
struct ThresholdSearch {
    bool certified = false;  // the advantage holds at the smallest grid point
    double p0 = 0.0;         // advantage verified on every grid point below p0
    size_t grid_points = 0;
    bool holds_everywhere = false;  // no violation up to p_max
};

/// Log grid in z from z_min up to p_max, then bisection on the first violation. Every
/// comparison is exact.
ThresholdSearch find_advantage_threshold(const WepTable &t, const Rational &p_dd, double z_min = 1e-8,
                                         double p_max = 0.5);

struct AsymptoticsReport {
    size_t n = 0;
    size_t k = 0;
    QecAsymptotics qec;
    SuppressedAsymptotics suppressed;
    LddCoeffs ldd;
    WeightOneCounts weight_one;
    SuppressionCriteria criteria;
    std::optional<QedAsymptotics> qed;  // empty when d < 2
};

AsymptoticsReport build_asymptotics_report(const StabilizerCode &code, const DecoderMap &decoder,
                                           const DecouplingGroup &dd, unsigned threads = 0);

std::string asymptotics_to_json(const AsymptoticsReport &r);

}  // namespace lddqec

#endif  // LDDQEC_ASYMPTOTICS_H
