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

#include "hqec/f2.h"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hqec/pauli.h"

namespace hqec {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

BitMatrix::BitMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
    if (!rows_.empty()) {
        cols_ = rows_.front().size();
    }
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].size() != cols_) {
            throw std::invalid_argument(
                "matrix row " + std::to_string(i + 1) + " has " + std::to_string(rows_[i].size()) +
                " entries, expected " + std::to_string(cols_));
        }
    }
}

BitMatrix BitMatrix::parse(std::string_view text) {
    std::vector<BitVec> rows;
    std::size_t line_no = 0;
    std::size_t cols = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        std::string cleaned;
        for (char c : line) {
            if (c == ' ' || c == '\t' || c == '\r') {
                continue;
            }
            if (c != '0' && c != '1') {
                throw ParseError(
                    "matrix line " + std::to_string(line_no) + " has invalid character '" + std::string(1, c) + "'");
            }
            cleaned.push_back(c);
        }
        if (cleaned.empty()) {
            continue;
        }
        if (!rows.empty() && cleaned.size() != cols) {
            throw ParseError(
                "matrix line " + std::to_string(line_no) + " has " + std::to_string(cleaned.size()) +
                " entries, expected " + std::to_string(cols));
        }
        cols = cleaned.size();
        rows.push_back(BitVec::from_string(cleaned));
    }
    return BitMatrix(std::move(rows));
}

BitMatrix BitMatrix::from_strings(std::span<const std::string_view> rows) {
    std::vector<BitVec> out;
    for (auto r : rows) {
        out.push_back(BitVec::from_string(r));
    }
    return BitMatrix(std::move(out));
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rows_[i].get(j)) {
                t.rows_[j].set(i, true);
            }
        }
    }
    return t;
}

std::size_t BitMatrix::rank() const {
    std::vector<BitVec> copy = rows_;
    return row_reduce(copy).size();
}

std::string BitMatrix::str() const {
    std::string out;
    for (const auto& r : rows_) {
        out += r.str();
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> row_reduce(std::vector<BitVec>& rows) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    std::size_t n = rows.front().size();
    std::size_t r = 0;
    for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
        std::size_t found = r;
        while (found < rows.size() && !rows[found].get(col)) {
            ++found;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[r], rows[found]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i].get(col)) {
                rows[i] ^= rows[r];
            }
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

std::vector<BitVec> null_space(const std::vector<BitVec>& rows, std::size_t n) {
    std::vector<BitVec> reduced = rows;
    auto pivots = row_reduce(reduced);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVec> out;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        BitVec v(n);
        v.set(free, true);
        for (std::size_t r = 0; r < reduced.size(); ++r) {
            if (reduced[r].get(free)) {
                v.set(pivots[r], true);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

ClassicalCode ClassicalCode::from_rows(const BitMatrix& rows) {
    if (rows.cols() == 0) {
        throw std::invalid_argument("classical code needs a generator matrix with at least one column");
    }
    ClassicalCode code;
    code.n_ = rows.cols();
    code.basis_ = rows.row_list();
    code.pivots_ = row_reduce(code.basis_);
    return code;
}

bool ClassicalCode::contains(const BitVec& word) const {
    if (word.size() != n_) {
        throw std::invalid_argument(
            "word of length " + std::to_string(word.size()) + " tested against a length-" + std::to_string(n_) +
            " code");
    }
    BitVec rest = word;
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        if (rest.get(pivots_[r])) {
            rest ^= basis_[r];
        }
    }
    return !rest.any();
}

std::vector<BitVec> ClassicalCode::enumerate_codewords() const {
    if (dimension() > kMaxEnumerationDimension) {
        throw std::length_error(
            "refusing to enumerate a code of dimension " + std::to_string(dimension()) + " (limit " +
            std::to_string(kMaxEnumerationDimension) + ")");
    }
    std::size_t count = std::size_t{1} << dimension();
    std::vector<BitVec> words;
    words.reserve(count);
    for (std::size_t c = 0; c < count; ++c) {
        BitVec w(n_);
        for (std::size_t r = 0; r < basis_.size(); ++r) {
            if ((c >> r) & 1) {
                w ^= basis_[r];
            }
        }
        words.push_back(std::move(w));
    }
    return words;
}

bool ClassicalCode::all_even_weight() const {
    if (dimension() > kMaxEnumerationDimension) {
        throw std::length_error("code dimension exceeds the enumeration limit");
    }
    for (const auto& g : basis_) {
        if (g.popcount() & 1) {
            return false;
        }
    }
    return true;
}

ClassicalCode ClassicalCode::dual() const {
    auto rows = null_space(basis_, n_);
    if (rows.empty()) {
        return from_rows(BitMatrix(1, n_));
    }
    return from_rows(BitMatrix(std::move(rows)));
}

bool ClassicalCode::is_subcode_of(const ClassicalCode& other) const {
    if (other.n_ != n_) {
        return false;
    }
    for (const auto& g : basis_) {
        if (!other.contains(g)) {
            return false;
        }
    }
    return true;
}

TriorthogonalityReport triorthogonality_check(const BitMatrix& g) {
    TriorthogonalityReport report;
    std::size_t m = g.rows();
    report.pair_overlaps.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            report.pair_overlaps[i][j] = g.row(i).and_count(g.row(j));
        }
        (report.pair_overlaps[i][i] & 1 ? report.odd_rows : report.even_rows).push_back(i);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (report.pair_overlaps[i][j] & 1) {
                report.pairwise_ok = false;
                report.violating_index_sets.push_back({i, j});
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            BitVec ij = g.row(i) & g.row(j);
            for (std::size_t k = j + 1; k < m; ++k) {
                std::size_t overlap = ij.and_count(g.row(k));
                report.triple_overlaps.push_back({i, j, k, overlap});
                if (overlap & 1) {
                    report.triple_ok = false;
                    report.violating_index_sets.push_back({i, j, k});
                }
            }
        }
    }
    return report;
}

SparseState coset_state(const ClassicalCode& c2, const BitVec& x) {
    if (x.size() != c2.length()) {
        throw std::invalid_argument("coset shift length does not match the code length");
    }
    if (c2.length() > kMaxStateQubits) {
        throw std::invalid_argument("coset state exceeds the sparse register cap");
    }
    auto words = c2.enumerate_codewords();
    Amplitude amp = 1.0 / std::sqrt(static_cast<double>(words.size()));
    SparseState::Terms terms;
    for (const auto& w : words) {
        terms.emplace((w ^ x).low_word(), amp);
    }
    return SparseState::from_terms(c2.length(), std::move(terms));
}

std::set<std::size_t> weight_mod(std::span<const BitVec> words, std::size_t m) {
    if (m < 2) {
        throw std::invalid_argument("weight modulus must be at least 2");
    }
    std::set<std::size_t> out;
    for (const auto& w : words) {
        out.insert(w.popcount() % m);
    }
    return out;
}

}  // namespace hqec
