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
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hqec/bitvec.h"

namespace hqec {

/// Thrown when text input (Pauli strings, bit matrices, code files, circuits)
/// cannot be parsed. The message names the offending input and position.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Largest supported qubit count for a Pauli operator.
inline constexpr std::size_t kMaxPauliQubits = 1024;

enum class PauliKind { X, Z };

/// An n-qubit Pauli operator i^phase * X^x * Z^z in binary symplectic form.
///
/// The X part acts after the Z part, so Y = iXZ is stored as x=1, z=1,
/// phase=1. Values are immutable after construction apart from assignment.
class PauliOperator {
   public:
    /// Identity on `n` qubits.
    explicit PauliOperator(std::size_t n);
    /// Throws std::invalid_argument when x and z differ in length.
    PauliOperator(BitVec x_bits, BitVec z_bits, unsigned phase = 0);

    /// Parses "[sign]PAULIS" where sign is one of "", "+", "-", "i", "-i"
    /// and PAULIS is a non-empty run of I, X, Y, Z (also '_' for I).
    static PauliOperator parse(std::string_view text);
    /// X^{⊗n} or Z^{⊗n}.
    static PauliOperator transversal(PauliKind kind, std::size_t n);
    /// Single-qubit Pauli ('X', 'Y' or 'Z') on 1-based `qubit`.
    static PauliOperator single(std::size_t n, std::size_t qubit, char pauli);
    /// X(support) or Z(support).
    static PauliOperator from_support(PauliKind kind, const BitVec& support);

    std::size_t num_qubits() const noexcept {
        return x_.size();
    }
    const BitVec& x_bits() const noexcept {
        return x_;
    }
    const BitVec& z_bits() const noexcept {
        return z_;
    }
    unsigned phase() const noexcept {
        return phase_;
    }

    /// Number of qubits acted on non-trivially.
    std::size_t weight() const;
    bool is_identity() const;
    /// Equal up to phase.
    bool same_support_and_type(const PauliOperator& other) const {
        return x_ == other.x_ && z_ == other.z_;
    }
    /// Number of Y factors.
    std::size_t y_count() const {
        return x_.and_count(z_);
    }
    /// Hermitian iff its square is +I.
    bool is_hermitian() const;
    /// Character 'I', 'X', 'Y' or 'Z' for 1-based `qubit`.
    char pauli_at(std::size_t qubit) const;

    bool commutes(const PauliOperator& other) const;

    PauliOperator with_phase(unsigned phase) const {
        return PauliOperator(x_, z_, phase);
    }

    /// Inverse of parse: sign prefix followed by I/X/Y/Z characters.
    std::string str() const;

    friend PauliOperator operator*(const PauliOperator& p, const PauliOperator& q);
    bool operator==(const PauliOperator& other) const = default;

   private:
    BitVec x_;
    BitVec z_;
    unsigned phase_ = 0;
};

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);
/// p^{-1}, which differs from p by at most a sign.
PauliOperator inverse(const PauliOperator& p);
bool commutes(const PauliOperator& p, const PauliOperator& q);
std::size_t weight(const PauliOperator& p);
PauliOperator transversal_pauli(PauliKind kind, std::size_t n);
inline PauliOperator parse_pauli(std::string_view text) {
    return PauliOperator::parse(text);
}

/// Human label for X^{⊗n} / Z^{⊗n}.
std::string transversal_label(PauliKind kind, std::size_t n);

}  // namespace hqec
