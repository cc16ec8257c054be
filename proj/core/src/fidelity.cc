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

#include <cmath>
#include <limits>

namespace lddqec {

namespace {

constexpr Strategy kAll[] = {Strategy::kDdPhys,  Strategy::kQecOnly,   Strategy::kLddOnly,    Strategy::kHybrid,
                             Strategy::kQedOnly, Strategy::kQedHybrid, Strategy::kQedLddOnly};

template <typename T>
void check_domain_impl(const NoiseParams<T> &params) {
    auto unit = [](const T &v, bool open_top) { return v >= T(0) && (open_top ? v < T(1) : v <= T(1)); };
    if (!unit(params.p, true)) {
        throw std::domain_error("p must lie in [0, 1)");
    }
    if (!unit(params.p_dd, false)) {
        throw std::domain_error("p_dd must lie in [0, 1]");
    }
    if (!unit(params.p_qec, false)) {
        throw std::domain_error("p_qec must lie in [0, 1]");
    }
    if (!unit(params.p_qed, false)) {
        throw std::domain_error("p_qed must lie in [0, 1]");
    }
}

}  // namespace

std::string_view strategy_name(Strategy s) {
    switch (s) {
        case Strategy::kDdPhys:
            return "dd_phys";
        case Strategy::kQecOnly:
            return "qec_only";
        case Strategy::kLddOnly:
            return "ldd_only";
        case Strategy::kHybrid:
            return "hybrid";
        case Strategy::kQedOnly:
            return "qed_only";
        case Strategy::kQedHybrid:
            return "qed_hybrid";
        case Strategy::kQedLddOnly:
            return "qed_ldd_only";
    }
    return "?";
}

Strategy parse_strategy(std::string_view name) {
    for (Strategy s : kAll) {
        if (strategy_name(s) == name) {
            return s;
        }
    }
    std::string known;
    for (Strategy s : kAll) {
        known += (known.empty() ? "" : ", ") + std::string(strategy_name(s));
    }
    throw std::invalid_argument("unknown strategy '" + std::string(name) + "' (known: " + known + ")");
}

bool is_qed(Strategy s) {
    return s == Strategy::kQedOnly || s == Strategy::kQedHybrid || s == Strategy::kQedLddOnly;
}

Setting required_setting(Strategy s) { return is_qed(s) ? Setting::kQed : Setting::kQec; }

std::span<const Strategy> all_strategies() { return kAll; }

void check_domain(const NoiseParams<double> &params) { check_domain_impl(params); }
void check_domain(const NoiseParams<Rational> &params) { check_domain_impl(params); }

RelativeAdvantage relative_advantage(double eps_comp, double eps_hyb) {
    RelativeAdvantage r;
    if (eps_comp > 0 && eps_hyb > 0) {
        r.value = std::log10(eps_comp) - std::log10(eps_hyb);
        return r;
    }
    r.degenerate = true;
    if (eps_comp > 0) {
        r.value = std::numeric_limits<double>::infinity();
    } else if (eps_hyb > 0) {
        r.value = -std::numeric_limits<double>::infinity();
    } else {
        r.value = std::numeric_limits<double>::quiet_NaN();
    }
    return r;
}

}  // namespace lddqec
