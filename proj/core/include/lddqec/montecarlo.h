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

#ifndef LDDQEC_MONTECARLO_H
#define LDDQEC_MONTECARLO_H

#include <cstdint>
#include <random>
#include <string>

#include "lddqec/code.h"
#include "lddqec/fidelity.h"

namespace lddqec {

/// Hard cap on rejection-sampling attempts for one error draw.
inline constexpr uint64_t kMaxRejections = 1'000'000;

/// The rejection loop hit kMaxRejections.
struct SamplingStalled : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// One error from the DD-rescaled depolarizing model: i.i.d. qubit draws, then rejection
/// of suppressed errors with probability 1 - p_dd. dd == nullptr means no decoupling.
PauliOperator sample_error(std::mt19937_64 &rng, size_t n, double p, const DecouplingGroup *dd, double p_dd);

struct CycleOutcome {
    bool accepted = true;
    bool logical_fault = false;
};

/// One encode, wait, decode (or detect) cycle. decoder may be null for the QED strategies
/// and for dd_phys. dd_phys ignores code and decoder and runs k bare qubits under the full
/// Pauli group.
CycleOutcome run_cycle(std::mt19937_64 &rng, const StabilizerCode &code, const DecoderMap *decoder,
                       const DecouplingGroup &dd, Strategy strategy, const NoiseParams<double> &params);

struct McConfig {
    uint64_t shots = 1;
    uint64_t seed = 0;
    Strategy strategy = Strategy::kHybrid;
    NoiseParams<double> params;
    /// Worker streams. Results are reproducible for a fixed (seed, threads) pair.
    unsigned threads = 1;
};

struct McEstimate {
    double f_hat = 0.0;
    double f_stderr = 0.0;
    double pa_hat = 1.0;
    double pa_stderr = 0.0;
    bool has_acceptance = false;
    uint64_t shots = 0;
    uint64_t shots_accepted = 0;
    uint64_t faults = 0;
    /// No shot was accepted; f_hat and f_stderr are NaN.
    bool no_accepted = false;
};

/// Worker w seeds its std::mt19937_64 with std::seed_seq{seed low 32 bits, seed high
/// 32 bits, w} and runs shots / threads shots (the first shots % threads workers run one
/// more). Tallies are summed.
McEstimate estimate(const McConfig &config, const StabilizerCode &code, const DecoderMap *decoder,
                    const DecouplingGroup &dd);

std::string mc_csv_header();
std::string mc_csv_row(const McConfig &config, const McEstimate &e);

}  // namespace lddqec

#endif  // LDDQEC_MONTECARLO_H
