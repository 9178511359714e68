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

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hqec/pauli.h"
#include "hqec/rng.h"

namespace hqec {

using Amplitude = std::complex<double>;

/// Amplitudes with magnitude below this are dropped.
inline constexpr double kPruneThreshold = 1e-12;
/// Default comparison tolerance for norms and fidelities.
inline constexpr double kStateTolerance = 1e-10;
/// Basis strings are packed into one machine word.
inline constexpr std::size_t kMaxStateQubits = 64;
/// Upper bound on stored terms for products of states.
inline constexpr std::size_t kMaxStateTerms = std::size_t{1} << 22;

/// Sparse state vector: map from computational basis string to amplitude.
///
/// Qubit q (1-based) is bit q-1 of the key. In text, qubit 1 is the leftmost
/// character. A zero-qubit state is the scalar 1 (the "vacuum"), which is the
/// unit for `tensor`. A state with no terms is the zero vector.
class SparseState {
   public:
    using Terms = std::map<std::uint64_t, Amplitude>;

    /// Zero-qubit vacuum with amplitude 1.
    SparseState();

    static SparseState basis(std::size_t n, std::uint64_t key);
    /// Basis state from text such as "0110".
    static SparseState from_bits(std::string_view bits);
    /// The zero vector on n qubits.
    static SparseState zero(std::size_t n);
    /// Builds a state from explicit terms, pruning tiny amplitudes.
    static SparseState from_terms(std::size_t n, Terms terms);

    std::size_t num_qubits() const noexcept {
        return n_;
    }
    std::size_t size() const noexcept {
        return terms_.size();
    }
    bool is_zero() const noexcept {
        return terms_.empty();
    }
    const Terms& terms() const noexcept {
        return terms_;
    }

    Amplitude amplitude(std::uint64_t key) const;
    double norm_squared() const;
    /// Throws std::domain_error for the zero vector.
    SparseState normalized() const;
    SparseState scaled(Amplitude factor) const;

    /// this + factor * other; throws on qubit-count mismatch.
    SparseState plus(const SparseState& other, Amplitude factor = 1.0) const;

    /// Lines "bitstring re im", sorted by bitstring, 17 significant digits.
    std::string dump() const;

    static std::string key_to_bits(std::uint64_t key, std::size_t n);
    static std::uint64_t bits_to_key(std::string_view bits);

   private:
    SparseState(std::size_t n, Terms terms);
    void prune();

    std::size_t n_ = 0;
    Terms terms_;
};

/// A named 2x2 unitary, stored row-major: {m00, m01, m10, m11}.
struct SingleQubitGate {
    std::string label;
    std::array<Amplitude, 4> matrix;

    static SingleQubitGate I();
    static SingleQubitGate X();
    static SingleQubitGate Z();
    static SingleQubitGate H();
    static SingleQubitGate S();
    static SingleQubitGate Sdg();
    static SingleQubitGate T();
    static SingleQubitGate Tdg();
    /// diag(1, phase).
    static SingleQubitGate phase(std::string label, Amplitude phase);
    /// Throws std::invalid_argument if the matrix is not unitary within 1e-12.
    static SingleQubitGate custom(std::string label, std::array<Amplitude, 4> matrix);

    SingleQubitGate adjoint() const;
    /// this * other (apply `other` first).
    SingleQubitGate compose(const SingleQubitGate& other) const;
    /// this^k for k >= 0.
    SingleQubitGate power(unsigned k) const;
    bool is_diagonal() const;
    bool is_unitary(double tol = 1e-12) const;
};

SparseState apply_single(const SparseState& state, const SingleQubitGate& gate, std::size_t qubit);
SparseState apply_cnot(const SparseState& state, std::size_t control, std::size_t target);
SparseState apply_pauli(const SparseState& state, const PauliOperator& p);
/// Multiplies the amplitude of |b> by prod_q phases[q-1]^{b_q}.
SparseState apply_diagonal(const SparseState& state, std::span<const Amplitude> phase_per_one);
/// Same phase on every qubit.
SparseState apply_transversal_diagonal(const SparseState& state, Amplitude phase_per_one);
SparseState swap_qubits(const SparseState& state, std::size_t i, std::size_t j);
/// Product state: `a` on qubits 1..na, `b` on na+1..na+nb.
SparseState tensor(const SparseState& a, const SparseState& b);

/// <a|b>.
Amplitude inner_product(const SparseState& a, const SparseState& b);
/// |<a|b>|; equals 1 when the states agree up to global phase.
double fidelity_up_to_phase(const SparseState& a, const SparseState& b);

struct Projection {
    /// Renormalized projection (the zero vector when `is_zero`).
    SparseState state;
    /// Squared norm of the projection before renormalization.
    double weight = 0;
    bool is_zero = true;
    /// <basis_i|state>.
    std::vector<Amplitude> coefficients;
};

/// Projects onto the span of an orthonormal list. Throws
/// std::invalid_argument if the Gram matrix deviates from I by more than 1e-10.
Projection project_onto(std::span<const SparseState> span, const SparseState& state);

/// Partial inner product <bra|_{positions} state. `bra` lives on
/// positions.size() qubits; bra qubit k corresponds to positions[k]. The result
/// lives on the remaining qubits, kept in their original order.
SparseState contract(const SparseState& state, std::span<const std::size_t> positions, const SparseState& bra);

/// Inverse layout of `contract`: places `block` on `positions` and `rest` on the
/// remaining qubits (in order) of an (nb + nr)-qubit register.
SparseState embed(const SparseState& block, std::span<const std::size_t> positions, const SparseState& rest);

/// Qubits of an n-qubit register not listed in `positions`, in order.
std::vector<std::size_t> complement_positions(std::size_t n, std::span<const std::size_t> positions);

struct SubsystemMeasurement {
    std::size_t outcome = 0;
    bool forced = false;
    std::vector<double> probabilities;
    /// Post-measurement state on the unmeasured qubits, renormalized.
    SparseState collapsed;
    /// 1-based indices (in the input register) of the qubits kept, in order.
    std::vector<std::size_t> kept_qubits;
};

/// Projective measurement of the qubits at `positions` in the orthonormal
/// basis `basis`; the measured qubits are removed from the register.
SubsystemMeasurement measure_subsystem(
    const SparseState& state,
    std::span<const std::size_t> positions,
    std::span<const SparseState> basis,
    MeasurementSource& source);

/// |Φ(U)_{ab}> = (U† ⊗ I)(Z^b X^a ⊗ I)(|00> + |11>)/√2.
SparseState rotated_bell_state(const SingleQubitGate& rotation, bool a, bool b);

struct BellMeasurement {
    bool r_a = false;
    bool r_b = false;
    bool forced = false;
    /// Indexed by 2*r_a + r_b.
    std::array<double, 4> probabilities{};
    SparseState collapsed;
    std::vector<std::size_t> kept_qubits;
};

/// Measures (first, second) in the U-rotated Bell basis. `rotation` acts on
/// `first`. The measured pair is removed from the register.
BellMeasurement rotated_bell_measure(
    const SparseState& state,
    std::size_t first,
    std::size_t second,
    const SingleQubitGate& rotation,
    MeasurementSource& source);

}  // namespace hqec
