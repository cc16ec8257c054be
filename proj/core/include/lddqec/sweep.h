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

#ifndef LDDQEC_SWEEP_H
#define LDDQEC_SWEEP_H

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lddqec/code.h"
#include "lddqec/fidelity.h"
#include "lddqec/wep.h"

namespace lddqec {

enum class Spacing { kLinear, kLog };

/// One grid axis. Linear axes include both endpoints; log axes need min > 0.
struct Axis {
    double min = 0.0;
    double max = 0.0;
    size_t points = 1;
    Spacing spacing = Spacing::kLinear;
};

/// Throws std::invalid_argument for points < 2 (unless min == max with one point) or a
/// non-positive log bound.
std::vector<double> axis_values(const Axis &axis);

/// Parses "v", "min:max:points" or "min:max:points:log". Values may be decimals or a/b.
Axis parse_axis(std::string_view text);

/// Exact rationals for the grid points. Linear axes are computed from the decimal
/// endpoints exactly; log points are the exact values of the doubles.
std::vector<Rational> axis_values_exact(const Axis &axis, std::string_view min_text, std::string_view max_text);

/// "strategy,p,p_dd,p_qec,p_qed,F,P_A".
std::string fidelity_csv_header();
std::string fidelity_csv_row(const FidelityReport<double> &r, const NoiseParams<double> &params);
std::string fidelity_csv_row(const FidelityReport<Rational> &r, const NoiseParams<Rational> &params);

enum class Comparator { kDd, kLdd, kQec };

std::string_view comparator_name(Comparator c);
/// Accepts dd, ldd, qec. Throws std::invalid_argument otherwise (including "hybrid").
Comparator parse_comparator(std::string_view name);
Strategy comparator_strategy(Comparator c);

struct SweepPoint {
    double p = 0.0;
    double p_dd = 0.0;
    double p_qec = 0.0;
    RelativeAdvantage r;
};

/// R = log10(eps_comp / eps_hyb) over the Cartesian (p_dd, p_qec) grid at fixed p,
/// p_dd outermost.
std::vector<SweepPoint> sweep_relative_advantage(const WepTable &t, double p, const std::vector<double> &p_dd,
                                                 const std::vector<double> &p_qec, Comparator comparator);

/// "p,p_dd,p_qec,comparator,R,degenerate". Degenerate rows render R as inf, -inf or nan.
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepPoint &pt, Comparator comparator);

/// A candidate decoupling group for a scan.
struct ScanCandidate {
    uint64_t index = 0;
    DecouplingGroup group;
};

/// All k = 1 dressings <X_L s1, Z_L s2> over stabilizer elements s1, s2. Element i of the
/// stabilizer group is the product of the generators selected by the bits of i, and the
/// candidate index is i1 * 2^(n-k) + i2. Throws std::invalid_argument for k != 1.
std::vector<ScanCandidate> dressing_candidates(const StabilizerCode &code);

/// Reads one candidate per line as whitespace-separated Pauli strings; '#' comments allowed.
std::vector<ScanCandidate> read_candidates(std::istream &in, size_t n, const std::string &source);

/// Canonical identifier: generator strings joined by single spaces.
std::string group_id(const DecouplingGroup &g);

struct ScanEntry {
    uint64_t index = 0;
    std::string generators;
    double objective = 0.0;  // 1 - F_hyb
    bool tie = false;        // within relative kTieTolerance of the best objective
};

inline constexpr double kTieTolerance = 1e-12;

/// Ranked ascending by objective, ties broken by candidate index.
std::vector<ScanEntry> scan_ldd(const StabilizerCode &code, const DecoderMap &decoder,
                                const std::vector<ScanCandidate> &candidates, const NoiseParams<double> &params,
                                unsigned threads = 0);

/// "rank,index,generators,objective,tie".
std::string scan_csv_header();
std::string scan_csv_row(size_t rank, const ScanEntry &e);

}  // namespace lddqec

#endif  // LDDQEC_SWEEP_H
