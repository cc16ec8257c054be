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

#ifndef LDDQEC_PAULI_H
#define LDDQEC_PAULI_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lddqec {

/// Largest qubit count representable by a PauliOperator (one machine word per mask).
inline constexpr size_t kMaxQubits = 64;

/// A phase-stripped n-qubit Pauli operator in the binary symplectic representation.
///
/// Qubit q is bit q of both masks. The per-qubit letter is
/// (x=0,z=0)->I, (1,0)->X, (1,1)->Y, (0,1)->Z. Bits at positions >= n are always zero.
/// There is no phase anywhere: products are componentwise XOR.
class PauliOperator {
   public:
    PauliOperator() = default;

    /// Identity on n qubits.
    explicit PauliOperator(size_t n);

    /// Builds an operator from raw masks. Throws std::invalid_argument if n is out of
    /// range or a mask has bits beyond n.
    PauliOperator(size_t n, uint64_t x_mask, uint64_t z_mask);

    static PauliOperator identity(size_t n) { return PauliOperator(n); }

    size_t num_qubits() const { return n_; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }

    size_t weight() const { return static_cast<size_t>(std::popcount(x_ | z_)); }
    bool is_identity() const { return (x_ | z_) == 0; }

    /// Letter on qubit q: one of 'I', 'X', 'Y', 'Z'.
    char letter(size_t q) const;

    bool operator==(const PauliOperator &other) const = default;

    /// Multiplication in the phase-stripped group.
    PauliOperator &operator*=(const PauliOperator &rhs);

   private:
    size_t n_ = 0;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs);

/// Parses a string of I/X/Y/Z letters (case-insensitive). The leftmost letter is qubit 0.
/// Throws std::invalid_argument on an empty string, an illegal character (the message
/// names the offset), or more than kMaxQubits letters.
PauliOperator parse_pauli(std::string_view text);

/// Canonical uppercase rendering; inverse of parse_pauli.
std::string format_pauli(const PauliOperator &p);

/// Componentwise product. Throws std::invalid_argument on mismatched qubit counts.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// True iff the symplectic form vanishes:
/// popcount(p.x & q.z) + popcount(p.z & q.x) is even.
/// Throws std::invalid_argument on mismatched qubit counts.
bool commutes(const PauliOperator &p, const PauliOperator &q);

/// Same as !commutes but without the size check, for hot loops over validated data.
inline bool anticommutes_unchecked(const PauliOperator &p, const PauliOperator &q) {
    return (std::popcount((p.x_mask() & q.z_mask()) ^ (p.z_mask() & q.x_mask())) & 1) != 0;
}

/// An ordered list of Paulis sharing one qubit count.
class GeneratorSet {
   public:
    GeneratorSet() = default;
    explicit GeneratorSet(size_t n) : n_(n) {}
    /// Throws std::invalid_argument if the members disagree on qubit count.
    GeneratorSet(size_t n, std::vector<PauliOperator> members);

    size_t num_qubits() const { return n_; }
    size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const PauliOperator &operator[](size_t i) const { return members_[i]; }
    std::span<const PauliOperator> members() const { return members_; }
    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    void push_back(const PauliOperator &p);

   private:
    size_t n_ = 0;
    std::vector<PauliOperator> members_;
};

/// F2 rank of the generators as vectors in the 2n-dimensional symplectic space.
size_t rank(const GeneratorSet &gens);

/// True iff p is a product of some subset of gens (phase ignored).
/// Throws std::invalid_argument on mismatched qubit counts.
bool in_span(const PauliOperator &p, const GeneratorSet &gens);

/// Reduced row echelon basis over F2 with lowest-index pivots, usable for repeated
/// membership queries and for expressing members as generator combinations.
class F2Basis {
   public:
    explicit F2Basis(const GeneratorSet &gens);

    size_t rank() const { return rows_.size(); }

    /// Returns true iff p is in the span. If combination is non-null it receives a
    /// bitmask over the original generator indices whose product equals p.
    bool reduce(const PauliOperator &p, uint64_t *combination = nullptr) const;

   private:
    struct Row {
        uint64_t x;
        uint64_t z;
        uint64_t combo;
        size_t pivot;  // [0, n) for x bits, [n, 2n) for z bits.
    };
    size_t n_;
    std::vector<Row> rows_;
};

/// Product of the members selected by the bits of mask (bit i selects gens[i]).
PauliOperator product_of(const GeneratorSet &gens, uint64_t mask);

/// Calls f(x_mask, z_mask) for every Pauli of exactly weight w on n qubits. Supports are
/// visited in increasing-integer order of Gosper's hack; letters X, Y, Z per position.
template <typename F>
void for_each_pauli_of_weight(size_t n, size_t w, F &&f) {
    if (w > n) {
        return;
    }
    if (w == 0) {
        f(uint64_t{0}, uint64_t{0});
        return;
    }
    uint64_t limit = n >= 64 ? 0 : uint64_t{1} << n;
    uint64_t support = (uint64_t{1} << w) - 1;
    std::vector<uint64_t> bits(w);
    while (true) {
        uint64_t tmp = support;
        for (size_t i = 0; i < w; i++) {
            bits[i] = tmp & -tmp;
            tmp &= tmp - 1;
        }
        // Letters per position: 0=X, 1=Y, 2=Z, counted in base 3.
        size_t combos = 1;
        for (size_t i = 0; i < w; i++) {
            combos *= 3;
        }
        for (size_t c = 0; c < combos; c++) {
            uint64_t x = 0;
            uint64_t z = 0;
            size_t t = c;
            for (size_t i = 0; i < w; i++) {
                size_t l = t % 3;
                t /= 3;
                if (l != 2) {
                    x |= bits[i];
                }
                if (l != 0) {
                    z |= bits[i];
                }
            }
            f(x, z);
        }
        // Gosper's hack: next subset of the same size.
        uint64_t c = support & -support;
        uint64_t r = support + c;
        if (r == 0 || (limit != 0 && r >= limit)) {
            break;
        }
        support = (((r ^ support) >> 2) / c) | r;
        if (limit != 0 && support >= limit) {
            break;
        }
    }
}

/// Position of p in the 4^n enumeration order: one base-4 digit per qubit
/// (0=I, 1=X, 2=Y, 3=Z), qubit 0 least significant.
inline uint64_t enumeration_index(const PauliOperator &p) {
    uint64_t idx = 0;
    for (size_t q = p.num_qubits(); q-- > 0;) {
        uint64_t xb = (p.x_mask() >> q) & 1;
        uint64_t zb = (p.z_mask() >> q) & 1;
        idx = (idx << 2) | (xb ? (zb ? 2 : 1) : (zb ? 3 : 0));
    }
    return idx;
}

}  // namespace lddqec

#endif  // LDDQEC_PAULI_H
