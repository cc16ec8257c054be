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

#ifndef LDDQEC_WEP_H
#define LDDQEC_WEP_H

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lddqec/code.h"
#include "lddqec/poly.h"

namespace lddqec {

enum class Setting { kQec, kQed };

std::string_view setting_name(Setting s);

/// Tag names in serialization order.
std::span<const std::string_view> qec_tags();
std::span<const std::string_view> qed_tags();

/// Exact weight enumerator coefficients, one vector of n+1 counts per tag.
struct WepTable {
    size_t n = 0;
    size_t k = 0;
    Setting setting = Setting::kQec;
    std::map<std::string, std::vector<uint64_t>, std::less<>> coeffs;

    /// Throws std::out_of_range naming the tag if absent.
    const std::vector<uint64_t> &at(std::string_view tag) const;
    bool has(std::string_view tag) const { return coeffs.find(tag) != coeffs.end(); }

    friend bool operator==(const WepTable &, const WepTable &) = default;
};

/// Error class of a Pauli with respect to a code and decoder.
enum ErrorClass : unsigned {
    kStabilizer = 0,     // zero syndrome, trivial logical
    kLogical = 1,        // zero syndrome, nontrivial logical
    kCorrected = 2,      // nonzero syndrome, decoder restores the logical class
    kUncorrectable = 3,  // nonzero syndrome, decoder leaves a logical error
};

/// Weight histograms of the eight (class, suppressed) categories. Category index is
/// class + 4 * suppressed. In the QED setting kCorrected holds every detected error and
/// kUncorrectable stays empty.
struct CategoryCounts {
    size_t n = 0;
    std::array<std::vector<uint64_t>, 8> by_category;

    explicit CategoryCounts(size_t n_ = 0);
    uint64_t &at(unsigned category, size_t weight) { return by_category[category][weight]; }
    CategoryCounts &operator+=(const CategoryCounts &other);
    friend bool operator==(const CategoryCounts &, const CategoryCounts &) = default;
};

/// Precomputed code and decoder tables for repeated enumerations against different
/// decoupling groups.
///
/// The 4^n Paulis are indexed with one base-4 digit per qubit (0=I, 1=X, 2=Y, 3=Z,
/// qubit 0 least significant). Each qubit letter contributes a packed word holding its
/// syndrome bits, logical label bits and decoupling-generator anticommutation bits, so a
/// Pauli's full classification is the XOR of a low-half and a high-half table entry.
class PauliEnumerator {
   public:
    /// decoder == nullptr selects the QED setting (no recovery).
    PauliEnumerator(const StabilizerCode &code, const DecoderMap *decoder);

    const StabilizerCode &code() const { return code_; }
    Setting setting() const { return setting_; }

    /// Counts all 4^n Paulis. threads == 0 uses the hardware concurrency. The result does
    /// not depend on the thread count.
    CategoryCounts count(const DecouplingGroup &dd, unsigned threads = 0) const;

    /// Counts the index range [begin, end) of the enumeration order.
    CategoryCounts count_range(const DecouplingGroup &dd, uint64_t begin, uint64_t end) const;

    uint64_t total() const { return uint64_t{1} << (2 * code_.n); }

   private:
    StabilizerCode code_;
    Setting setting_;
    // Expected logical label of an error with this syndrome for it to count as corrected.
    std::vector<uint32_t> recovery_label_;
    std::array<std::vector<uint64_t>, 4> letter_word_;  // [letter][qubit]: syndrome | label << r
};

WepTable make_table(size_t k, Setting setting, const CategoryCounts &counts);

/// QEC-setting table for all 20 tags. Throws BudgetExceeded for n > 16.
WepTable compute_weps(const StabilizerCode &code, const DecoderMap &decoder, const DecouplingGroup &dd,
                      unsigned threads = 0);

/// QED-setting table for all 18 tags. Throws BudgetExceeded for n > 16.
WepTable compute_qed_weps(const StabilizerCode &code, const DecouplingGroup &dd, unsigned threads = 0);

/// Lists violated linear identities among the tags. Empty means consistent.
std::vector<std::string> check_wep_identities(const WepTable &table);

/// Horner evaluation of sum_w coeffs[w] z^w.
template <typename T>
T eval_wep(std::span<const uint64_t> coeffs, const T &z) {
    return eval_poly(Poly<T>::from_counts(coeffs), z);
}

/// z = p / (3 - 3p).
template <typename T>
T z_of_p(const T &p) {
    return T(p / (T(3) - T(3) * p));
}

std::string wep_to_json(const WepTable &table);
/// Throws std::invalid_argument on malformed input.
WepTable wep_from_json(std::string_view text);

}  // namespace lddqec

#endif  // LDDQEC_WEP_H
