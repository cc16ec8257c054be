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

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace lddqec;

TEST(pauli, parse_format_roundtrip) {
    for (const char *s : {"I", "X", "Y", "Z", "XIZY", "IIIYYYYZIXYXY"}) {
        EXPECT_EQ(format_pauli(parse_pauli(s)), s);
    }
    EXPECT_EQ(format_pauli(parse_pauli("xyz")), "XYZ");
    PauliOperator p = parse_pauli("XYZI");
    EXPECT_EQ(p.x_mask(), 0b0011u);
    EXPECT_EQ(p.z_mask(), 0b0110u);
    EXPECT_EQ(p.letter(0), 'X');
    EXPECT_EQ(p.letter(3), 'I');
    EXPECT_EQ(p.weight(), 3u);
}

TEST(pauli, parse_errors) {
    EXPECT_THROW(parse_pauli(""), std::invalid_argument);
    EXPECT_THROW(parse_pauli(std::string(65, 'X')), std::invalid_argument);
    try {
        parse_pauli("XXQ");
        FAIL();
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find('2'), std::string::npos) << e.what();
    }
    EXPECT_THROW(PauliOperator(2, 0b100, 0), std::invalid_argument);
    EXPECT_THROW(PauliOperator(65), std::invalid_argument);
}

TEST(pauli, multiply_and_commute) {
    EXPECT_EQ(multiply(parse_pauli("X"), parse_pauli("Z")), parse_pauli("Y"));
    EXPECT_EQ(multiply(parse_pauli("XY"), parse_pauli("XY")), parse_pauli("II"));
    EXPECT_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
    EXPECT_TRUE(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
    EXPECT_TRUE(commutes(parse_pauli("XYZ"), parse_pauli("III")));
    EXPECT_THROW(multiply(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
    EXPECT_THROW(commutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST(pauli, commutation_matches_letter_rule) {
    // Two single-qubit letters anticommute iff both are non-identity and different.
    std::mt19937_64 rng(1);
    for (int t = 0; t < 500; t++) {
        size_t n = 1 + rng() % 9;
        uint64_t m = (uint64_t{1} << n) - 1;
        PauliOperator a(n, rng() & m, rng() & m), b(n, rng() & m, rng() & m);
        int anti = 0;
        for (size_t q = 0; q < n; q++) {
            char x = a.letter(q), y = b.letter(q);
            anti += x != 'I' && y != 'I' && x != y;
        }
        EXPECT_EQ(commutes(a, b), anti % 2 == 0);
        EXPECT_EQ(anticommutes_unchecked(a, b), anti % 2 == 1);
        EXPECT_EQ(multiply(a, b), multiply(b, a));
    }
}

TEST(pauli, rank_and_span) {
    GeneratorSet g(3, {parse_pauli("XXI"), parse_pauli("IXX"), parse_pauli("XIX")});
    EXPECT_EQ(rank(g), 2u);
    EXPECT_TRUE(in_span(parse_pauli("XIX"), g));
    EXPECT_TRUE(in_span(parse_pauli("III"), g));
    EXPECT_FALSE(in_span(parse_pauli("XII"), g));
    F2Basis basis(g);
    uint64_t combo = 0;
    ASSERT_TRUE(basis.reduce(parse_pauli("XIX"), &combo));
    EXPECT_EQ(product_of(g, combo), parse_pauli("XIX"));
    EXPECT_THROW(GeneratorSet(2, {parse_pauli("X")}), std::invalid_argument);
}

TEST(pauli, weight_iteration_visits_each_once) {
    for (size_t n = 1; n <= 6; n++) {
        size_t total = 0;
        for (size_t w = 0; w <= n; w++) {
            std::set<std::pair<uint64_t, uint64_t>> seen;
            for_each_pauli_of_weight(n, w, [&](uint64_t x, uint64_t z) {
                EXPECT_EQ(PauliOperator(n, x, z).weight(), w);
                seen.insert({x, z});
            });
            total += seen.size();
        }
        EXPECT_EQ(total, size_t{1} << (2 * n));
    }
}

TEST(pauli, enumeration_index_digits) {
    EXPECT_EQ(enumeration_index(parse_pauli("III")), 0u);
    EXPECT_EQ(enumeration_index(parse_pauli("XII")), 1u);
    EXPECT_EQ(enumeration_index(parse_pauli("YII")), 2u);
    EXPECT_EQ(enumeration_index(parse_pauli("ZII")), 3u);
    EXPECT_EQ(enumeration_index(parse_pauli("IXI")), 4u);
    EXPECT_EQ(enumeration_index(parse_pauli("ZZZ")), 63u);
}
