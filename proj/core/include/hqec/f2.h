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

#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hqec/bitvec.h"
#include "hqec/sparse.h"

namespace hqec {

/// Largest dimension for which codewords may be enumerated (2^20 words).
inline constexpr std::size_t kMaxEnumerationDimension = 20;

/// Dense binary matrix stored as a list of row vectors.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    /// All rows must share one length; throws std::invalid_argument otherwise.
    explicit BitMatrix(std::vector<BitVec> rows);

    /// One row of '0'/'1' per line. Blank lines and '#' comments are skipped.
    static BitMatrix parse(std::string_view text);
    static BitMatrix from_strings(std::span<const std::string_view> rows);

    std::size_t rows() const noexcept {
        return rows_.size();
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    const BitVec& row(std::size_t i) const {
        return rows_[i];
    }
    const std::vector<BitVec>& row_list() const noexcept {
        return rows_;
    }

    BitMatrix transpose() const;
    std::size_t rank() const;
    std::string str() const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

/// Binary linear code given by the row space of a generator matrix.
///
/// The generators are kept in reduced row-echelon form, so dependent input
/// rows disappear and `dimension()` is the rank.
class ClassicalCode {
   public:
    /// Throws std::invalid_argument for a matrix with zero columns.
    static ClassicalCode from_rows(const BitMatrix& rows);

    std::size_t length() const noexcept {
        return n_;
    }
    std::size_t dimension() const noexcept {
        return basis_.size();
    }
    /// Reduced row-echelon basis.
    const std::vector<BitVec>& generators() const noexcept {
        return basis_;
    }
    bool contains(const BitVec& word) const;

    /// All 2^k codewords. Word number c is the XOR of basis rows selected by
    /// the bits of c, so the order is fixed by the basis coefficients.
    std::vector<BitVec> enumerate_codewords() const;
    bool all_even_weight() const;
    /// The dual code C⊥.
    ClassicalCode dual() const;
    bool is_subcode_of(const ClassicalCode& other) const;

   private:
    std::size_t n_ = 0;
    std::vector<BitVec> basis_;
    std::vector<std::size_t> pivots_;
};

/// Reduces `rows` in place to reduced row-echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows);

/// Nonzero vectors spanning {v : v·r = 0 for every r in rows}.
std::vector<BitVec> null_space(const std::vector<BitVec>& rows, std::size_t n);

struct TriorthogonalityReport {
    bool pairwise_ok = true;
    bool triple_ok = true;
    /// Index pairs and triples (0-based) whose overlap is odd.
    std::vector<std::vector<std::size_t>> violating_index_sets;
    std::vector<std::size_t> odd_rows;
    std::vector<std::size_t> even_rows;
    /// pair_overlaps[i][j] = |r_i ∧ r_j| (diagonal holds row weights).
    std::vector<std::vector<std::size_t>> pair_overlaps;
    struct Triple {
        std::size_t i, j, k;
        std::size_t overlap;
    };
    std::vector<Triple> triple_overlaps;
};

TriorthogonalityReport triorthogonality_check(const BitMatrix& g);

/// (1/√|C2|) Σ_{y ∈ C2} |x ⊕ y⟩.
SparseState coset_state(const ClassicalCode& c2, const BitVec& x);

/// {w(c) mod m} over the given words. Throws for m < 2.
std::set<std::size_t> weight_mod(std::span<const BitVec> words, std::size_t m);

}  // namespace hqec
