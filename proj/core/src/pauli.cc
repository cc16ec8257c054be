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

#include "lddqec/pauli.h"

#include <stdexcept>

namespace lddqec {

namespace {

uint64_t mask_for(size_t n) { return n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1; }

void require_same_size(const PauliOperator &p, const PauliOperator &q, const char *what) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(std::string(what) + ": qubit count mismatch (" +
                                    std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(q.num_qubits()) + ")");
    }
}

}  // namespace

PauliOperator::PauliOperator(size_t n) : PauliOperator(n, 0, 0) {}

PauliOperator::PauliOperator(size_t n, uint64_t x_mask, uint64_t z_mask) : n_(n), x_(x_mask), z_(z_mask) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("PauliOperator: at most 64 qubits are supported, got " + std::to_string(n));
    }
    uint64_t m = mask_for(n);
    if ((x_mask & ~m) != 0 || (z_mask & ~m) != 0) {
        throw std::invalid_argument("PauliOperator: mask has bits beyond qubit count " + std::to_string(n));
    }
}

char PauliOperator::letter(size_t q) const {
    unsigned x = (x_ >> q) & 1;
    unsigned z = (z_ >> q) & 1;
    return "IXZY"[x | (z << 1)];
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &rhs) {
    require_same_size(*this, rhs, "multiply");
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

PauliOperator operator*(PauliOperator lhs, const PauliOperator &rhs) {
    lhs *= rhs;
    return lhs;
}

PauliOperator parse_pauli(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("parse_pauli: empty Pauli string");
    }
    if (text.size() > kMaxQubits) {
        throw std::invalid_argument("parse_pauli: more than 64 qubits in '" + std::string(text) + "'");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < text.size(); q++) {
        uint64_t bit = uint64_t{1} << q;
        switch (text[q]) {
            case 'I':
            case 'i':
                break;
            case 'X':
            case 'x':
                x |= bit;
                break;
            case 'Y':
            case 'y':
                x |= bit;
                z |= bit;
                break;
            case 'Z':
            case 'z':
                z |= bit;
                break;
            default:
                throw std::invalid_argument("parse_pauli: illegal character '" + std::string(1, text[q]) +
                                            "' at offset " + std::to_string(q) + " in '" + std::string(text) + "'");
        }
    }
    return PauliOperator(text.size(), x, z);
}

std::string format_pauli(const PauliOperator &p) {
    std::string out(p.num_qubits(), 'I');
    for (size_t q = 0; q < p.num_qubits(); q++) {
        out[q] = p.letter(q);
    }
    return out;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) { return p * q; }

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q, "commutes");
    return !anticommutes_unchecked(p, q);
}

GeneratorSet::GeneratorSet(size_t n, std::vector<PauliOperator> members) : n_(n), members_(std::move(members)) {
    for (const auto &m : members_) {
        if (m.num_qubits() != n_) {
            throw std::invalid_argument("GeneratorSet: member '" + format_pauli(m) + "' is not on " +
                                        std::to_string(n_) + " qubits");
        }
    }
}

void GeneratorSet::push_back(const PauliOperator &p) {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("GeneratorSet: member '" + format_pauli(p) + "' is not on " +
                                    std::to_string(n_) + " qubits");
    }
    members_.push_back(p);
}

namespace {

bool bit_at(uint64_t x, uint64_t z, size_t n, size_t pos) {
    return pos < n ? ((x >> pos) & 1) : ((z >> (pos - n)) & 1);
}

}  // namespace

F2Basis::F2Basis(const GeneratorSet &gens) : n_(gens.num_qubits()) {
    if (gens.size() > 64) {
        throw std::invalid_argument("F2Basis: at most 64 generators are supported");
    }
    for (size_t i = 0; i < gens.size(); i++) {
        uint64_t x = gens[i].x_mask();
        uint64_t z = gens[i].z_mask();
        uint64_t combo = uint64_t{1} << i;
        for (const auto &row : rows_) {
            if (bit_at(x, z, n_, row.pivot)) {
                x ^= row.x;
                z ^= row.z;
                combo ^= row.combo;
            }
        }
        if ((x | z) == 0) {
            continue;
        }
        size_t pivot = x != 0 ? static_cast<size_t>(std::countr_zero(x))
                              : n_ + static_cast<size_t>(std::countr_zero(z));
        // Keep the basis fully reduced so reduce() is a single pass.
        for (auto &row : rows_) {
            if (bit_at(row.x, row.z, n_, pivot)) {
                row.x ^= x;
                row.z ^= z;
                row.combo ^= combo;
            }
        }
        rows_.push_back({x, z, combo, pivot});
    }
}

bool F2Basis::reduce(const PauliOperator &p, uint64_t *combination) const {
    if (p.num_qubits() != n_) {
        throw std::invalid_argument("in_span: qubit count mismatch (" + std::to_string(p.num_qubits()) + " vs " +
                                    std::to_string(n_) + ")");
    }
    uint64_t x = p.x_mask();
    uint64_t z = p.z_mask();
    uint64_t combo = 0;
    for (const auto &row : rows_) {
        if (bit_at(x, z, n_, row.pivot)) {
            x ^= row.x;
            z ^= row.z;
            combo ^= row.combo;
        }
    }
    if (combination != nullptr) {
        *combination = combo;
    }
    return (x | z) == 0;
}

size_t rank(const GeneratorSet &gens) { return F2Basis(gens).rank(); }

bool in_span(const PauliOperator &p, const GeneratorSet &gens) { return F2Basis(gens).reduce(p); }

PauliOperator product_of(const GeneratorSet &gens, uint64_t mask) {
    PauliOperator out(gens.num_qubits());
    for (size_t i = 0; i < gens.size() && i < 64; i++) {
        if ((mask >> i) & 1) {
            out *= gens[i];
        }
    }
    return out;
}

}  // namespace lddqec
