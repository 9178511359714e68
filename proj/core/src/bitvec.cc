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

#include "hqec/bitvec.h"

#include <stdexcept>

namespace hqec {

BitVec::BitVec(std::size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec result(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c == '1') {
            result.set(i, true);
        } else if (c != '0') {
            throw std::invalid_argument(
                "bit string '" + std::string(bits) + "' has invalid character '" + std::string(1, c) +
                "' at position " + std::to_string(i + 1));
        }
    }
    return result;
}

BitVec BitVec::ones(std::size_t num_bits) {
    BitVec result(num_bits);
    for (auto& w : result.words_) {
        w = ~std::uint64_t{0};
    }
    if (num_bits & 63) {
        result.words_.back() &= (std::uint64_t{1} << (num_bits & 63)) - 1;
    }
    return result;
}

std::size_t BitVec::popcount() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::any() const noexcept {
    for (auto w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

void BitVec::check_same_size(const BitVec& other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument(
            "bit vector length mismatch: " + std::to_string(num_bits_) + " vs " + std::to_string(other.num_bits_));
    }
}

std::size_t BitVec::and_count(const BitVec& other) const {
    check_same_size(other);
    std::size_t total = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        total += std::popcount(words_[k] & other.words_[k]);
    }
    return total;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    check_same_size(other);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

std::string BitVec::str() const {
    std::string out(num_bits_, '0');
    for (std::size_t i = 0; i < num_bits_; ++i) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec& other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < num_bits_; ++i) {
        bool a = get(i);
        bool b = other.get(i);
        if (a != b) {
            return a ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

}  // namespace hqec
