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

#ifndef LDDQEC_CODE_H
#define LDDQEC_CODE_H

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "lddqec/pauli.h"

namespace lddqec {

/// Largest n accepted by the exhaustive 4^n routines.
inline constexpr size_t kEnumerationBudgetQubits = 16;

/// Thrown when an exhaustive enumeration would exceed the qubit budget.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An [[n,k]] stabilizer code. The stabilizer list order fixes the syndrome bit order.
struct StabilizerCode {
    size_t n = 0;
    size_t k = 0;
    GeneratorSet stabilizers;
    GeneratorSet logical_x;
    GeneratorSet logical_z;

    size_t num_checks() const { return n - k; }
};

/// Syndrome as a bitmask: bit i is set iff the error anticommutes with stabilizers[i].
using Syndrome = uint64_t;

/// Renders a syndrome with bit 0 leftmost, e.g. "100000".
std::string format_syndrome(Syndrome s, size_t width);

/// Inverse of format_syndrome. Throws std::invalid_argument on bad characters or width.
Syndrome parse_syndrome(std::string_view text, size_t width);

/// Lists every violated code invariant. Empty means the code is valid.
std::vector<std::string> validate_code(const StabilizerCode &code);

/// Throws std::invalid_argument carrying the first violation, if any.
void require_valid(const StabilizerCode &code);

Syndrome syndrome(const StabilizerCode &code, const PauliOperator &e);

/// Bit 2i: anticommutes with logical_x[i]. Bit 2i+1: anticommutes with logical_z[i].
uint64_t logical_label(const StabilizerCode &code, const PauliOperator &e);

/// The canonical code with n = k and no stabilizers (logicals X_i, Z_i).
StabilizerCode trivial_code(size_t k);

/// A complete syndrome -> recovery table.
class DecoderMap {
   public:
    DecoderMap() = default;
    /// Table index is the syndrome bitmask. Structural checks only; use
    /// validate_decoder for the code-dependent invariants.
    explicit DecoderMap(std::vector<PauliOperator> table);

    size_t size() const { return table_.size(); }
    const PauliOperator &operator[](Syndrome s) const { return table_[s]; }
    std::span<const PauliOperator> table() const { return table_; }

    /// Replaces table[syndrome(e)] with e.
    void override_entry(const StabilizerCode &code, const PauliOperator &e);

   private:
    std::vector<PauliOperator> table_;
};

/// Violations of D(0) = I, syn(D(s)) = s and totality, one message per offending syndrome.
std::vector<std::string> validate_decoder(const StabilizerCode &code, const DecoderMap &decoder);

/// Tie-break among minimum-weight recoveries of one syndrome.
enum class TieBreak {
    /// Smallest string under I < X < Y < Z, compared left to right.
    kLexicographic,
    /// Qubits are numbered from the right end of the string. Smallest sorted support
    /// tuple first, then smallest letters (X < Y < Z) read in that numbering.
    kSupportFromRight,
};

/// Minimum-weight recovery per syndrome. Throws BudgetExceeded if some syndrome is
/// unreachable within the qubit budget (cannot happen for a valid code).
DecoderMap min_weight_decoder(const StabilizerCode &code, TieBreak tie_break = TieBreak::kLexicographic);

/// A decoupling group given by its generators.
class DecouplingGroup {
   public:
    DecouplingGroup() = default;
    /// Throws std::invalid_argument if empty or all generators are the identity.
    explicit DecouplingGroup(GeneratorSet generators);

    size_t num_qubits() const { return gens_.num_qubits(); }
    const GeneratorSet &generators() const { return gens_; }

    /// True iff e anticommutes with at least one generator.
    bool suppresses(const PauliOperator &e) const;

   private:
    GeneratorSet gens_;
};

/// Returns a copy with generators[index] replaced by generators[index] * s.
DecouplingGroup dress_generator(const DecouplingGroup &dd, size_t index, const PauliOperator &s);

/// The group generated by all logical X and Z operators of the code.
DecouplingGroup logical_group(const StabilizerCode &code);

struct Classification {
    bool is_stabilizer = false;
    bool is_zero_syndrome = false;
    bool is_correctable = false;
    bool is_suppressed = false;
    uint64_t logical_label = 0;
};

Classification classify(const StabilizerCode &code, const DecoderMap &decoder, const DecouplingGroup &dd,
                        const PauliOperator &e);

/// Minimum weight over zero-syndrome Paulis with a nonzero logical label.
/// Throws std::invalid_argument for k = 0.
size_t code_distance(const StabilizerCode &code);

/// Searches orderings of code.stabilizers under which every (syndrome, recovery) row
/// satisfies syn(recovery) = syndrome. Returns the permuted code, or nullopt.
/// Intended for small generator counts (the search is factorial).
std::optional<StabilizerCode> resolve_stabilizer_order(
    const StabilizerCode &code, std::span<const std::pair<Syndrome, PauliOperator>> rows);

/// Random valid [[n,k]] code built from a random symplectic basis. Deterministic in rng.
StabilizerCode random_stabilizer_code(size_t n, size_t k, std::mt19937_64 &rng);

}  // namespace lddqec

#endif  // LDDQEC_CODE_H
