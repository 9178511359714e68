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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hqec {

/// Fixed-length bit vector packed into 64-bit words.
///
/// Bit `i` (0-based) lives in word `i / 64` at position `i % 64`. Text forms
/// list bit 0 first, so "1100" has bits 0 and 1 set. Bits past `size()` in the
/// last word are always zero; every mutating operation preserves that.
class BitVec {
   public:
    BitVec() = default;
    explicit BitVec(std::size_t num_bits);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument.
    static BitVec from_string(std::string_view bits);
    static BitVec ones(std::size_t num_bits);

    std::size_t size() const noexcept {
        return num_bits_;
    }
    bool get(std::size_t i) const noexcept {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(std::size_t i, bool value) noexcept {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept {
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    std::size_t popcount() const noexcept;
    bool any() const noexcept;

    /// Number of positions set in both vectors.
    std::size_t and_count(const BitVec& other) const;
    /// Binary inner product over F2.
    bool dot(const BitVec& other) const {
        return and_count(other) & 1;
    }

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    BitVec& operator|=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) {
        return a ^= b;
    }
    friend BitVec operator&(BitVec a, const BitVec& b) {
        return a &= b;
    }
    friend BitVec operator|(BitVec a, const BitVec& b) {
        return a |= b;
    }

    std::span<const std::uint64_t> words() const noexcept {
        return words_;
    }
    std::span<std::uint64_t> words() noexcept {
        return words_;
    }

    /// Low 64 bits as an integer (bit 0 is the least significant bit).
    std::uint64_t low_word() const noexcept {
        return words_.empty() ? 0 : words_[0];
    }

    std::string str() const;

    bool operator==(const BitVec& other) const = default;
    /// Orders by length, then by the text form.
    std::strong_ordering operator<=>(const BitVec& other) const;

   private:
    void check_same_size(const BitVec& other) const;

    std::size_t num_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace hqec
