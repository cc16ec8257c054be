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

#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

namespace lddqec {

namespace {

// Calls f(q, letter) for every non-identity qubit of one i.i.d. draw. letter: 1=X, 2=Y, 3=Z.
template <typename F>
void draw_letters(std::mt19937_64 &rng, size_t n, double p, F &&f) {
    const double scale = p > 0 ? 3.0 / p : 0.0;
    for (size_t q = 0; q < n; q++) {
        double u = uniform01(rng);
        if (u < p) {
            f(q, 1 + std::min(2, static_cast<int>(u * scale)));
        }
    }
}

bool uses_dd(Strategy s) {
    return s != Strategy::kQecOnly && s != Strategy::kQedOnly;
}

// Precomputed per-qubit tables for the sampling loop.
class Kernel {
   public:
    Kernel(const StabilizerCode &code, const DecoderMap *decoder, const DecouplingGroup &dd, Strategy s,
           const NoiseParams<double> &params)
        : strategy_(s), p_(params.p), p_dd_(params.p_dd), p_qec_(params.p_qec), p_qed_(params.p_qed) {
        check_domain(params);
        const StabilizerCode *c = &code;
        const DecouplingGroup *g = uses_dd(s) ? &dd : nullptr;
        if (s == Strategy::kDdPhys) {
            bare_ = trivial_code(code.k);
            bare_dd_ = logical_group(bare_);
            c = &bare_;
            g = &bare_dd_;
            decoder = nullptr;
        } else if (!is_qed(s) && decoder == nullptr) {
            throw std::invalid_argument("strategy " + std::string(strategy_name(s)) + " needs a decoder");
        }
        if (s == Strategy::kLddOnly || s == Strategy::kQedLddOnly || s == Strategy::kDdPhys) {
            p_qec_ = 1.0;
        }
        if (s == Strategy::kQecOnly || s == Strategy::kQedOnly) {
            p_dd_ = 1.0;
        }
        if (g && g->num_qubits() != c->n) {
            throw std::invalid_argument("decoupling group acts on " + std::to_string(g->num_qubits()) +
                                        " qubits, code has " + std::to_string(c->n));
        }
        n_ = c->n;
        r_ = c->num_checks();
        label_bits_ = 2 * c->k;
        if (r_ + label_bits_ > 64) {
            throw std::invalid_argument("Monte Carlo needs n + k <= 64");
        }
        reclab_.assign(size_t{1} << r_, 0);
        if (decoder && (s == Strategy::kQecOnly || s == Strategy::kHybrid)) {
            for (Syndrome sy = 0; sy < reclab_.size(); sy++) {
                reclab_[sy] = logical_label(*c, (*decoder)[sy]);
            }
        }
        word_.assign(n_, {0, 0, 0, 0});
        dd_word_.assign(n_, {0, 0, 0, 0});
        for (size_t q = 0; q < n_; q++) {
            uint64_t bit = uint64_t{1} << q;
            for (int l = 1; l < 4; l++) {
                PauliOperator e(n_, (l == 1 || l == 2) ? bit : 0, (l == 2 || l == 3) ? bit : 0);
                word_[q][l] = syndrome(*c, e) | (logical_label(*c, e) << r_);
                if (g) {
                    for (size_t i = 0; i < g->generators().size(); i++) {
                        if (anticommutes_unchecked(e, g->generators()[i])) {
                            dd_word_[q][l] |= uint64_t{1} << i;
                        }
                    }
                }
            }
        }
        if (g && g->generators().size() > 64) {
            throw std::invalid_argument("Monte Carlo supports at most 64 decoupling generators");
        }
    }

    CycleOutcome run(std::mt19937_64 &rng) const {
        uint64_t w = 0;
        for (uint64_t attempt = 0;; attempt++) {
            if (attempt == kMaxRejections) {
                throw SamplingStalled("rejection sampling exceeded " + std::to_string(kMaxRejections) + " attempts");
            }
            w = 0;
            uint64_t d = 0;
            draw_letters(rng, n_, p_, [&](size_t q, int l) {
                w ^= word_[q][l];
                d ^= dd_word_[q][l];
            });
            if (d == 0 || p_dd_ >= 1.0 || uniform01(rng) < p_dd_) {
                break;
            }
        }
        const uint64_t sig = w & ((uint64_t{1} << r_) - 1);
        const uint64_t lab = (w >> r_) & ((label_bits_ == 64 ? 0 : (uint64_t{1} << label_bits_)) - 1);
        CycleOutcome out;
        if (strategy_ == Strategy::kQedOnly || strategy_ == Strategy::kQedHybrid) {
            uint64_t reported = sig;
            if (p_qed_ > 0 && uniform01(rng) < p_qed_) {
                reported = random_bits(rng, r_);
            }
            out.accepted = reported == 0;
            if (out.accepted) {
                out.logical_fault = sig == 0 ? lab != 0 : random_bits(rng, label_bits_) != 0;
            }
            return out;
        }
        if (sig == 0) {
            out.logical_fault = lab != 0;
        } else if (p_qec_ >= 1.0 || (p_qec_ > 0 && uniform01(rng) < p_qec_)) {
            out.logical_fault = random_bits(rng, label_bits_) != 0;
        } else {
            out.logical_fault = lab != reclab_[sig];
        }
        return out;
    }

   private:
    static uint64_t random_bits(std::mt19937_64 &rng, size_t bits) {
        if (bits == 0) {
            return 0;
        }
        uint64_t v = rng();
        return bits >= 64 ? v : v & ((uint64_t{1} << bits) - 1);
    }

    Strategy strategy_;
    double p_, p_dd_, p_qec_, p_qed_;
    size_t n_ = 0, r_ = 0, label_bits_ = 0;
    StabilizerCode bare_;
    DecouplingGroup bare_dd_;
    std::vector<uint64_t> reclab_;
    std::vector<std::array<uint64_t, 4>> word_;
    std::vector<std::array<uint64_t, 4>> dd_word_;
};

struct Tally {
    uint64_t shots = 0;
    uint64_t accepted = 0;
    uint64_t faults = 0;
};

}  // namespace

PauliOperator sample_error(std::mt19937_64 &rng, size_t n, double p, const DecouplingGroup *dd, double p_dd) {
    if (!(p >= 0 && p < 1) || !(p_dd >= 0 && p_dd <= 1)) {
        throw std::domain_error("sample_error: need p in [0,1) and p_dd in [0,1]");
    }
    if (dd && dd->num_qubits() != n) {
        throw std::invalid_argument("sample_error: group size mismatch");
    }
    for (uint64_t attempt = 0; attempt < kMaxRejections; attempt++) {
        uint64_t x = 0, z = 0;
        draw_letters(rng, n, p, [&](size_t q, int l) {
            uint64_t bit = uint64_t{1} << q;
            x |= (l == 1 || l == 2) ? bit : 0;
            z |= (l == 2 || l == 3) ? bit : 0;
        });
        PauliOperator e(n, x, z);
        if (!dd || p_dd >= 1.0 || !dd->suppresses(e) || uniform01(rng) < p_dd) {
            return e;
        }
    }
    throw SamplingStalled("rejection sampling exceeded " + std::to_string(kMaxRejections) + " attempts");
}

CycleOutcome run_cycle(std::mt19937_64 &rng, const StabilizerCode &code, const DecoderMap *decoder,
                       const DecouplingGroup &dd, Strategy strategy, const NoiseParams<double> &params) {
    return Kernel(code, decoder, dd, strategy, params).run(rng);
}

McEstimate estimate(const McConfig &config, const StabilizerCode &code, const DecoderMap *decoder,
                    const DecouplingGroup &dd) {
    if (config.shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const Kernel kernel(code, decoder, dd, config.strategy, config.params);
    unsigned threads = std::max(1u, config.threads);
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, config.shots));
    std::vector<Tally> tallies(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto work = [&](unsigned t) {
        try {
            std::seed_seq seq{static_cast<uint32_t>(config.seed), static_cast<uint32_t>(config.seed >> 32), t};
            std::mt19937_64 rng(seq);
            uint64_t count = config.shots / threads + (t < config.shots % threads ? 1 : 0);
            Tally &tl = tallies[t];
            for (uint64_t i = 0; i < count; i++) {
                CycleOutcome o = kernel.run(rng);
                tl.accepted += o.accepted;
                tl.faults += o.accepted && o.logical_fault;
            }
            tl.shots = count;
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &th : pool) {
            th.join();
        }
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    McEstimate out;
    for (const Tally &t : tallies) {
        out.shots += t.shots;
        out.shots_accepted += t.accepted;
        out.faults += t.faults;
    }
    out.has_acceptance = is_qed(config.strategy);
    double n = static_cast<double>(out.shots);
    out.pa_hat = static_cast<double>(out.shots_accepted) / n;
    out.pa_stderr = std::sqrt(out.pa_hat * (1 - out.pa_hat) / n);
    if (out.shots_accepted == 0) {
        out.no_accepted = true;
        out.f_hat = std::numeric_limits<double>::quiet_NaN();
        out.f_stderr = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    double a = static_cast<double>(out.shots_accepted);
    out.f_hat = 1.0 - static_cast<double>(out.faults) / a;
    out.f_stderr = std::sqrt(out.f_hat * (1 - out.f_hat) / a);
    return out;
}

std::string mc_csv_header() { return "strategy,p,p_dd,p_qec,p_qed,shots,seed,f_hat,f_stderr,pa_hat,pa_stderr"; }

std::string mc_csv_row(const McConfig &config, const McEstimate &e) {
    std::ostringstream os;
    const auto &pr = config.params;
    os << strategy_name(config.strategy) << ',' << format_double(pr.p) << ',' << format_double(pr.p_dd) << ','
       << format_double(pr.p_qec) << ',' << format_double(pr.p_qed) << ',' << e.shots << ',' << config.seed << ','
       << format_double(e.f_hat) << ',' << format_double(e.f_stderr) << ',' << format_double(e.pa_hat) << ','
       << format_double(e.pa_stderr);
    return os.str();
}

}  // namespace lddqec
