// Copyright 2026 The hqec Authors
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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "hqec/f2.h"
#include "hqec/rng.h"

using namespace hqec;

namespace {

ClassicalCode code_of(std::initializer_list<std::string_view> rows) {
    std::vector<std::string_view> v(rows);
    return ClassicalCode::from_rows(BitMatrix::from_strings(v));
}

std::set<std::string> as_strings(const std::vector<BitVec>& words) {
    std::set<std::string> out;
    for (const auto& w : words) {
        out.insert(w.str());
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ClassicalCode random_code(Rng& rng, std::size_t n, std::size_t rows) {
    std::vector<BitVec> r;
    for (std::size_t i = 0; i < rows; ++i) {
        BitVec v(n);
        for (std::size_t j = 0; j < n; ++j) {
            v.set(j, rng.bit());
        }
        r.push_back(v);
    }
    return ClassicalCode::from_rows(BitMatrix(r));
}

const ClassicalCode& steane_c1() {
    static const ClassicalCode c = code_of({"1000011", "0100101", "0010110", "0001111"});
    return c;
}

const ClassicalCode& steane_c2() {
    static const ClassicalCode c = code_of({"0001111", "0110011", "1010101"});
    return c;
}

BitMatrix rm15_matrix() {
    return BitMatrix::parse(read_file(std::string(HQEC_TEST_DATA_DIR) + "/rm15.txt"));
}

}  // namespace

TEST(bit_matrix, parse_with_comments) {
    BitMatrix m = BitMatrix::parse("# header\n101\n\n 0 1 1  # trailing\n");
    ASSERT_EQ(m.rows(), 2u);
    EXPECT_EQ(m.cols(), 3u);
    EXPECT_EQ(m.row(1).str(), "011");
    EXPECT_EQ(m.transpose().str(), "10\n01\n11\n");
    EXPECT_EQ(m.rank(), 2u);
}

TEST(bit_matrix, parse_errors) {
    EXPECT_THROW(BitMatrix::parse("101\n01\n"), ParseError);
    EXPECT_THROW(BitMatrix::parse("1012\n"), ParseError);
    try {
        BitMatrix::parse("11\n1x\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    }
}

TEST(bit_matrix, steane_columns_transpose_to_rows) {
    BitMatrix columns = BitMatrix::parse("1000\n0100\n0010\n0001\n0111\n1011\n1101\n");
    BitMatrix rows = columns.transpose();
    EXPECT_EQ(rows.str(), "1000011\n0100101\n0010110\n0001111\n");
}

TEST(classical_code, steane_c1_dimension) {
    EXPECT_EQ(steane_c1().length(), 7u);
    EXPECT_EQ(steane_c1().dimension(), 4u);
    EXPECT_EQ(steane_c1().enumerate_codewords().size(), 16u);
}

TEST(classical_code, zero_row) {
    ClassicalCode c = code_of({"0000000"});
    EXPECT_EQ(c.dimension(), 0u);
    auto words = c.enumerate_codewords();
    ASSERT_EQ(words.size(), 1u);
    EXPECT_EQ(words[0].str(), "0000000");
}

TEST(classical_code, dependent_rows) {
    EXPECT_EQ(code_of({"110", "011", "101"}).dimension(), 2u);
}

TEST(classical_code, empty_matrix_rejected) {
    EXPECT_THROW(ClassicalCode::from_rows(BitMatrix()), std::invalid_argument);
}

TEST(classical_code, contains) {
    EXPECT_TRUE(steane_c1().contains(BitVec::ones(7)));
    EXPECT_TRUE(steane_c2().contains(BitVec(7)));
    ClassicalCode c = code_of({"1000", "0100", "0010"});
    EXPECT_FALSE(c.contains(BitVec::from_string("1111")));
    EXPECT_EQ(c.enumerate_codewords().size(), 8u);
    EXPECT_THROW(c.contains(BitVec(5)), std::invalid_argument);
}

TEST(classical_code, enumerate_steane_c2) {
    auto words = as_strings(steane_c2().enumerate_codewords());
    std::set<std::string> expected{
        "0000000", "1010101", "0110011", "1100110", "0001111", "1011010", "0111100", "1101001"};
    EXPECT_EQ(words, expected);
}

TEST(classical_code, enumerate_small) {
    EXPECT_EQ(as_strings(code_of({"11"}).enumerate_codewords()), (std::set<std::string>{"00", "11"}));
}

TEST(classical_code, enumerate_order_follows_basis) {
    ClassicalCode c = code_of({"100", "010"});
    auto words = c.enumerate_codewords();
    ASSERT_EQ(words.size(), 4u);
    EXPECT_EQ(words[0].str(), "000");
    EXPECT_EQ(words[1].str(), "100");
    EXPECT_EQ(words[2].str(), "010");
    EXPECT_EQ(words[3].str(), "110");
}

TEST(classical_code, enumeration_guard) {
    std::vector<BitVec> rows;
    for (std::size_t i = 0; i < 21; ++i) {
        BitVec v(21);
        v.set(i, true);
        rows.push_back(v);
    }
    ClassicalCode big = ClassicalCode::from_rows(BitMatrix(rows));
    EXPECT_THROW(big.enumerate_codewords(), std::length_error);
    EXPECT_THROW(big.all_even_weight(), std::length_error);
}

TEST(classical_code, all_even_weight) {
    EXPECT_TRUE(steane_c2().all_even_weight());
    EXPECT_TRUE(code_of({"000"}).all_even_weight());
    EXPECT_FALSE(code_of({"111"}).all_even_weight());
    for (const auto& w : steane_c2().enumerate_codewords()) {
        EXPECT_EQ(w.popcount() % 2, 0u);
    }
}

TEST(classical_code, dual_and_subcode) {
    EXPECT_TRUE(steane_c2().is_subcode_of(steane_c1()));
    EXPECT_FALSE(steane_c1().is_subcode_of(steane_c2()));
    ClassicalCode dual = steane_c1().dual();
    EXPECT_EQ(dual.dimension(), 3u);
    for (const auto& d : dual.enumerate_codewords()) {
        for (const auto& c : steane_c1().enumerate_codewords()) {
            EXPECT_FALSE(d.dot(c));
        }
    }
}

TEST(classical_code, xor_closure_property) {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 2 + rng.next_u64() % 12;
        ClassicalCode c = random_code(rng, n, 1 + rng.next_u64() % 8);
        auto words = c.enumerate_codewords();
        EXPECT_EQ(words.size(), std::size_t{1} << c.dimension());
        EXPECT_EQ(as_strings(words).size(), words.size());
        for (const auto& a : words) {
            for (const auto& b : words) {
                EXPECT_TRUE(c.contains(a ^ b));
            }
        }
    }
}

TEST(classical_code, even_weight_iff_ones_in_dual) {
    Rng rng(103);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + rng.next_u64() % 10;
        ClassicalCode c = random_code(rng, n, 1 + rng.next_u64() % 5);
        BitVec ones = BitVec::ones(n);
        bool orthogonal = std::all_of(
            c.generators().begin(), c.generators().end(), [&](const BitVec& g) { return !g.dot(ones); });
        EXPECT_EQ(c.all_even_weight(), orthogonal);
        EXPECT_EQ(c.all_even_weight(), c.dual().contains(ones));
        bool enumerated = true;
        for (const auto& w : c.enumerate_codewords()) {
            enumerated &= w.popcount() % 2 == 0;
        }
        EXPECT_EQ(c.all_even_weight(), enumerated);
    }
}

TEST(triorthogonality, rm15_matrix_overlaps) {
    BitMatrix g = rm15_matrix();
    ASSERT_EQ(g.rows(), 5u);
    ASSERT_EQ(g.cols(), 15u);
    TriorthogonalityReport r = triorthogonality_check(g);
    EXPECT_TRUE(r.pairwise_ok);
    EXPECT_TRUE(r.triple_ok);
    EXPECT_TRUE(r.violating_index_sets.empty());
    EXPECT_EQ(r.odd_rows, (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.even_rows, (std::vector<std::size_t>{1, 2, 3, 4}));
    for (std::size_t i = 1; i < 5; ++i) {
        EXPECT_EQ(r.pair_overlaps[0][i], 8u);
        for (std::size_t j = i + 1; j < 5; ++j) {
            EXPECT_EQ(r.pair_overlaps[i][j], 4u);
        }
    }
    ASSERT_EQ(r.triple_overlaps.size(), 10u);
    for (const auto& t : r.triple_overlaps) {
        EXPECT_EQ(t.overlap, t.i == 0 ? 4u : 2u);
    }
}

TEST(triorthogonality, single_even_row) {
    TriorthogonalityReport r = triorthogonality_check(BitMatrix::parse("1100\n"));
    EXPECT_TRUE(r.pairwise_ok);
    EXPECT_TRUE(r.triple_ok);
    EXPECT_EQ(r.even_rows.size(), 1u);
}

TEST(triorthogonality, odd_pair) {
    TriorthogonalityReport r = triorthogonality_check(BitMatrix::parse("110\n011\n"));
    EXPECT_FALSE(r.pairwise_ok);
    ASSERT_EQ(r.violating_index_sets.size(), 1u);
    EXPECT_EQ(r.violating_index_sets[0], (std::vector<std::size_t>{0, 1}));
}

TEST(triorthogonality, odd_triple) {
    TriorthogonalityReport r = triorthogonality_check(BitMatrix::parse("1110\n1101\n1011\n"));
    EXPECT_TRUE(r.pairwise_ok);
    EXPECT_FALSE(r.triple_ok);
}

TEST(coset_state, steane_zero) {
    SparseState s = coset_state(steane_c2(), BitVec(7));
    EXPECT_EQ(s.size(), 8u);
    for (const auto& [key, amp] : s.terms()) {
        EXPECT_NEAR(std::abs(amp - 1.0 / std::sqrt(8.0)), 0.0, 1e-15);
    }
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
}

TEST(coset_state, trivial_code) {
    SparseState s = coset_state(code_of({"000"}), BitVec::from_string("101"));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_NEAR(std::abs(s.amplitude(SparseState::bits_to_key("101")) - 1.0), 0.0, 1e-15);
}

TEST(coset_state, steane_one) {
    SparseState s = coset_state(steane_c2(), BitVec::ones(7));
    std::set<std::string> expected{
        "1111111", "0101010", "1001100", "0011001", "1110000", "0100101", "1000011", "0010110"};
    std::set<std::string> got;
    for (const auto& [key, amp] : s.terms()) {
        got.insert(SparseState::key_to_bits(key, 7));
    }
    EXPECT_EQ(got, expected);
}

TEST(weight_mod, rm15_classes) {
    BitMatrix g = rm15_matrix();
    std::vector<BitVec> g0(g.row_list().begin() + 1, g.row_list().end());
    auto span = ClassicalCode::from_rows(BitMatrix(g0)).enumerate_codewords();
    ASSERT_EQ(span.size(), 16u);
    EXPECT_EQ(weight_mod(span, 8), (std::set<std::size_t>{0}));
    std::vector<BitVec> coset;
    for (const auto& w : span) {
        coset.push_back(w ^ g.row(0));
    }
    EXPECT_EQ(weight_mod(coset, 8), (std::set<std::size_t>{7}));
}

TEST(weight_mod, zero_word) {
    std::vector<BitVec> words{BitVec(5)};
    for (std::size_t m = 2; m < 10; ++m) {
        EXPECT_EQ(weight_mod(words, m), (std::set<std::size_t>{0}));
    }
    EXPECT_THROW(weight_mod(words, 1), std::invalid_argument);
}

TEST(null_space, orthogonal_and_complete) {
    Rng rng(107);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng.next_u64() % 12;
        ClassicalCode c = random_code(rng, n, 1 + rng.next_u64() % 6);
        auto ns = null_space(c.generators(), n);
        EXPECT_EQ(ns.size() + c.dimension(), n);
        for (const auto& v : ns) {
            for (const auto& g : c.generators()) {
                EXPECT_FALSE(v.dot(g));
            }
        }
    }
}
