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

#include "lddqec/code.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "../corpus.h"
#include "lddqec/code_io.h"

using namespace lddqec;
using namespace lddqec::testing;

TEST(code, corpus_codes_are_valid) {
    EXPECT_TRUE(validate_code(steane_code()).empty());
    EXPECT_TRUE(validate_code(code13()).empty());
    for (size_t k = 1; k <= 3; k++) {
        EXPECT_TRUE(validate_code(trivial_code(k)).empty());
    }
}

TEST(code, violations_are_reported) {
    StabilizerCode bad;
    bad.n = 1;
    bad.k = 0;
    bad.stabilizers = GeneratorSet(1, {parse_pauli("X"), parse_pauli("Z")});
    bad.logical_x = GeneratorSet(1);
    bad.logical_z = GeneratorSet(1);
    EXPECT_FALSE(validate_code(bad).empty());
    EXPECT_THROW(require_valid(bad), std::invalid_argument);

    StabilizerCode c = steane_code();
    c.logical_z = GeneratorSet(7, {parse_pauli("ZIIIIII")});
    EXPECT_FALSE(validate_code(c).empty());
}

TEST(code, steane_syndromes) {
    StabilizerCode c = steane_code();
    EXPECT_EQ(format_syndrome(syndrome(c, parse_pauli("XIIIIII")), 6), "100000");
    EXPECT_EQ(format_syndrome(syndrome(c, parse_pauli("ZIIIIII")), 6), "000100");
    EXPECT_EQ(syndrome(c, parse_pauli("IIIIIII")), 0u);
    EXPECT_EQ(parse_syndrome("100000", 6), 1u);
    EXPECT_THROW(parse_syndrome("10", 6), std::invalid_argument);
    EXPECT_THROW(parse_syndrome("10000x", 6), std::invalid_argument);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; t++) {
        PauliOperator e(7, rng() & 127, rng() & 127);
        PauliOperator s = product_of(c.stabilizers, rng() & 63);
        EXPECT_EQ(syndrome(c, e), syndrome(c, multiply(e, s)));
    }
}

TEST(code, logical_labels) {
    StabilizerCode c = steane_code();
    EXPECT_EQ(logical_label(c, c.logical_x[0]), 0b10u);
    EXPECT_EQ(logical_label(c, c.logical_z[0]), 0b01u);
    for (const PauliOperator &s : c.stabilizers) {
        EXPECT_EQ(logical_label(c, s), 0u);
    }
}

TEST(code, steane_decoder_file_is_valid) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    EXPECT_EQ(d.size(), 64u);
    EXPECT_TRUE(validate_decoder(c, d).empty());
}

TEST(code, min_weight_decoder_is_valid_and_minimal) {
    StabilizerCode c = steane_code();
    for (TieBreak tb : {TieBreak::kLexicographic, TieBreak::kSupportFromRight}) {
        DecoderMap d = min_weight_decoder(c, tb);
        EXPECT_TRUE(validate_decoder(c, d).empty());
        for (Syndrome s = 1; s < 64; s++) {
            EXPECT_LE(d[s].weight(), 2u);
        }
    }
}

TEST(code, code13_decoder_file_matches_reconstruction) {
    StabilizerCode c = code13();
    DecoderMap shipped = load_decoder(data_path("code13.dec"), c);
    DecoderMap rebuilt = reconstruct_code13_decoder(c);
    ASSERT_EQ(shipped.size(), rebuilt.size());
    for (Syndrome s = 0; s < shipped.size(); s++) {
        ASSERT_EQ(shipped[s], rebuilt[s]) << format_syndrome(s, 12);
    }
    // The six overridden errors are corrected.
    DecouplingGroup g = code13_group();
    for (const char *e : {"IXZIIIIIIIIII", "IZXIIIIIIIIII", "ZIXIIIIIIIIII", "XIZIIIIIIIIII", "XZIIIIIIIIIII",
                          "ZXIIIIIIIIIII"}) {
        EXPECT_TRUE(classify(c, rebuilt, g, parse_pauli(e)).is_correctable) << e;
    }
}

TEST(code, classification_examples) {
    StabilizerCode c = code13();
    DecoderMap d = reconstruct_code13_decoder(c);
    DecouplingGroup g = code13_group();
    Classification id = classify(c, d, g, PauliOperator(13));
    EXPECT_TRUE(id.is_stabilizer && id.is_correctable && !id.is_suppressed);
    Classification zzz = classify(c, d, g, parse_pauli("ZZZIIIIIIIIII"));
    EXPECT_TRUE(zzz.is_suppressed);
    EXPECT_FALSE(zzz.is_correctable);
    // Zero syndrome with a trivial label is exactly the stabilizer group.
    StabilizerCode s = steane_code();
    DecoderMap sd = steane_decoder(s);
    DecouplingGroup sg = steane_standard_group();
    for (uint64_t x = 0; x < 128; x++) {
        for (uint64_t z = 0; z < 128; z += 7) {
            PauliOperator e(7, x, z);
            Classification cl = classify(s, sd, sg, e);
            EXPECT_EQ(cl.is_stabilizer, in_span(e, s.stabilizers));
            EXPECT_EQ(cl.is_stabilizer, cl.is_zero_syndrome && cl.logical_label == 0);
        }
    }
}

TEST(code, distance) {
    EXPECT_EQ(code_distance(steane_code()), 3u);
    EXPECT_EQ(code_distance(code13()), 3u);
    EXPECT_EQ(code_distance(trivial_code(2)), 1u);
}

TEST(code, decoupling_group_basics) {
    EXPECT_THROW(DecouplingGroup(GeneratorSet(2)), std::invalid_argument);
    EXPECT_THROW(DecouplingGroup(GeneratorSet(2, {parse_pauli("II")})), std::invalid_argument);
    DecouplingGroup g(GeneratorSet(2, {parse_pauli("XX")}));
    EXPECT_TRUE(g.suppresses(parse_pauli("ZI")));
    EXPECT_FALSE(g.suppresses(parse_pauli("ZZ")));
    DecouplingGroup l = logical_group(steane_code());
    EXPECT_EQ(format_pauli(l.generators()[0]), "XXXXXXX");
    DecouplingGroup dressed = dress_generator(l, 0, parse_pauli("XIXIXIX"));
    EXPECT_EQ(format_pauli(dressed.generators()[0]), "IXIXIXI");
}

TEST(code, resolve_stabilizer_order_recovers_steane) {
    StabilizerCode c = steane_code();
    DecoderMap d = steane_decoder(c);
    std::vector<std::pair<Syndrome, PauliOperator>> rows;
    for (Syndrome s = 0; s < d.size(); s++) {
        rows.emplace_back(s, d[s]);
    }
    StabilizerCode scrambled = c;
    std::vector<PauliOperator> gens(c.stabilizers.begin(), c.stabilizers.end());
    std::reverse(gens.begin(), gens.end());
    std::swap(gens[1], gens[4]);
    scrambled.stabilizers = GeneratorSet(7, gens);
    auto resolved = resolve_stabilizer_order(scrambled, rows);
    ASSERT_TRUE(resolved.has_value());
    for (size_t i = 0; i < 6; i++) {
        EXPECT_EQ(resolved->stabilizers[i], c.stabilizers[i]);
    }
}

TEST(code, random_codes_are_valid_and_deterministic) {
    for (auto [n, k] : std::vector<std::pair<size_t, size_t>>{{5, 1}, {6, 2}, {4, 2}, {3, 3}}) {
        std::mt19937_64 a(9), b(9);
        StabilizerCode x = random_stabilizer_code(n, k, a);
        StabilizerCode y = random_stabilizer_code(n, k, b);
        EXPECT_TRUE(validate_code(x).empty());
        ASSERT_EQ(x.stabilizers.size(), y.stabilizers.size());
        for (size_t i = 0; i < x.stabilizers.size(); i++) {
            EXPECT_EQ(x.stabilizers[i], y.stabilizers[i]);
        }
    }
}

TEST(code_io, roundtrip) {
    StabilizerCode c = steane_code();
    std::stringstream ss;
    write_code(ss, c);
    StabilizerCode back = read_code(ss);
    EXPECT_EQ(back.n, 7u);
    for (size_t i = 0; i < 6; i++) {
        EXPECT_EQ(back.stabilizers[i], c.stabilizers[i]);
    }
    std::stringstream ds;
    write_decoder(ds, c, steane_decoder(c));
    DecoderMap d = read_decoder(ds, c);
    EXPECT_EQ(d[1], steane_decoder(c)[1]);
    std::stringstream gs;
    write_dd(gs, steane_standard_group());
    EXPECT_EQ(read_dd(gs).generators()[1], parse_pauli("ZZZZZZZ"));
}

TEST(code_io, errors_name_source_and_line) {
    std::istringstream bad("n 2\nk 1\nstabilizer XQ\nlogical_x XI\nlogical_z ZI\n");
    try {
        read_code(bad, "bad.code");
        FAIL();
    } catch (const ParseError &e) {
        std::string msg = e.what();
        EXPECT_NE(msg.find("bad.code:3"), std::string::npos) << msg;
    }
    std::istringstream anti("n 1\nk 0\nstabilizer X\nstabilizer Z\n");
    EXPECT_THROW(read_code(anti), ParseError);
    std::istringstream missing("k 1\n");
    EXPECT_THROW(read_code(missing), ParseError);
    EXPECT_THROW(load_code("/nonexistent/file.code"), FileMissing);

    StabilizerCode c = steane_code();
    std::istringstream partial("000000 IIIIIII\n");
    EXPECT_THROW(read_decoder(partial, c), ParseError);
    std::istringstream wrong("000000 XIIIIII\n");
    EXPECT_THROW(read_decoder(wrong, c), ParseError);
    std::istringstream empty("# nothing\n");
    EXPECT_THROW(read_dd(empty), ParseError);
}
