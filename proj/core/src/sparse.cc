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

#include "hqec/sparse.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace hqec {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(std::size_t q, std::size_t n) {
    if (q < 1 || q > n) {
        throw std::out_of_range("qubit index " + std::to_string(q) + " outside 1.." + std::to_string(n));
    }
}

void check_register_size(std::size_t n) {
    if (n > kMaxStateQubits) {
        throw std::invalid_argument(
            "sparse state on " + std::to_string(n) + " qubits exceeds the cap of " +
            std::to_string(kMaxStateQubits));
    }
}

inline std::uint64_t bit_of(std::size_t q) {
    return std::uint64_t{1} << (q - 1);
}

/// Gathers the bits of `key` at `positions` into a compact key.
std::uint64_t gather(std::uint64_t key, std::span<const std::size_t> positions) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        out |= ((key >> (positions[k] - 1)) & 1) << k;
    }
    return out;
}

/// Scatters the low bits of `compact` to `positions`.
std::uint64_t scatter(std::uint64_t compact, std::span<const std::size_t> positions) {
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < positions.size(); ++k) {
        out |= ((compact >> k) & 1) << (positions[k] - 1);
    }
    return out;
}

void check_positions(std::span<const std::size_t> positions, std::size_t n) {
    std::uint64_t seen = 0;
    for (auto q : positions) {
        check_qubit(q, n);
        if (seen & bit_of(q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " listed twice");
        }
        seen |= bit_of(q);
    }
}

}  // namespace

SparseState::SparseState() : n_(0), terms_{{0, Amplitude{1.0}}} {
}

SparseState::SparseState(std::size_t n, Terms terms) : n_(n), terms_(std::move(terms)) {
    check_register_size(n);
    prune();
}

SparseState SparseState::basis(std::size_t n, std::uint64_t key) {
    check_register_size(n);
    if (n < 64 && (key >> n) != 0) {
        throw std::invalid_argument("basis key has bits beyond qubit " + std::to_string(n));
    }
    return SparseState(n, Terms{{key, Amplitude{1.0}}});
}

SparseState SparseState::from_bits(std::string_view bits) {
    return basis(bits.size(), bits_to_key(bits));
}

SparseState SparseState::zero(std::size_t n) {
    return SparseState(n, Terms{});
}

SparseState SparseState::from_terms(std::size_t n, Terms terms) {
    for (const auto& [key, amp] : terms) {
        if (n < 64 && (key >> n) != 0) {
            throw std::invalid_argument("basis key has bits beyond qubit " + std::to_string(n));
        }
    }
    return SparseState(n, std::move(terms));
}

void SparseState::prune() {
    std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

Amplitude SparseState::amplitude(std::uint64_t key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Amplitude{} : it->second;
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto& [key, amp] : terms_) {
        total += std::norm(amp);
    }
    return total;
}

SparseState SparseState::normalized() const {
    double norm = std::sqrt(norm_squared());
    if (norm < 1e-300 || terms_.empty()) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    return scaled(1.0 / norm);
}

SparseState SparseState::scaled(Amplitude factor) const {
    Terms out;
    for (const auto& [key, amp] : terms_) {
        out.emplace_hint(out.end(), key, amp * factor);
    }
    return SparseState(n_, std::move(out));
}

SparseState SparseState::plus(const SparseState& other, Amplitude factor) const {
    if (n_ != other.n_) {
        throw std::invalid_argument("cannot add states on different qubit counts");
    }
    Terms out = terms_;
    for (const auto& [key, amp] : other.terms_) {
        out[key] += factor * amp;
    }
    return SparseState(n_, std::move(out));
}

std::string SparseState::key_to_bits(std::uint64_t key, std::size_t n) {
    std::string out(n, '0');
    for (std::size_t q = 0; q < n; ++q) {
        if ((key >> q) & 1) {
            out[q] = '1';
        }
    }
    return out;
}

std::uint64_t SparseState::bits_to_key(std::string_view bits) {
    check_register_size(bits.size());
    std::uint64_t key = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            key |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw ParseError("basis string '" + std::string(bits) + "' has invalid character at position " +
                             std::to_string(q + 1));
        }
    }
    return key;
}

std::string SparseState::dump() const {
    std::vector<std::pair<std::string, Amplitude>> rows;
    rows.reserve(terms_.size());
    for (const auto& [key, amp] : terms_) {
        rows.emplace_back(key_to_bits(key, n_), amp);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    char buf[96];
    for (const auto& [bits, amp] : rows) {
        std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", amp.real() + 0.0, amp.imag() + 0.0);
        out += bits;
        out += buf;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gates.

SingleQubitGate SingleQubitGate::I() {
    return {"I", {1.0, 0.0, 0.0, 1.0}};
}
SingleQubitGate SingleQubitGate::X() {
    return {"X", {0.0, 1.0, 1.0, 0.0}};
}
SingleQubitGate SingleQubitGate::Z() {
    return {"Z", {1.0, 0.0, 0.0, -1.0}};
}
SingleQubitGate SingleQubitGate::H() {
    return {"H", {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2}};
}
SingleQubitGate SingleQubitGate::S() {
    return phase("S", Amplitude{0.0, 1.0});
}
SingleQubitGate SingleQubitGate::Sdg() {
    return phase("S†", Amplitude{0.0, -1.0});
}
SingleQubitGate SingleQubitGate::T() {
    return phase("T", Amplitude{kInvSqrt2, kInvSqrt2});
}
SingleQubitGate SingleQubitGate::Tdg() {
    return phase("T†", Amplitude{kInvSqrt2, -kInvSqrt2});
}
SingleQubitGate SingleQubitGate::phase(std::string label, Amplitude phase) {
    return {std::move(label), {1.0, 0.0, 0.0, phase}};
}

SingleQubitGate SingleQubitGate::custom(std::string label, std::array<Amplitude, 4> matrix) {
    SingleQubitGate gate{std::move(label), matrix};
    if (!gate.is_unitary()) {
        throw std::invalid_argument("gate '" + gate.label + "' is not unitary");
    }
    return gate;
}

SingleQubitGate SingleQubitGate::adjoint() const {
    const auto& m = matrix;
    std::string name = label;
    if (name.ends_with("†")) {
        name.resize(name.size() - std::string("†").size());
    } else {
        name += "†";
    }
    return {name, {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
}

SingleQubitGate SingleQubitGate::compose(const SingleQubitGate& other) const {
    const auto& a = matrix;
    const auto& b = other.matrix;
    return {label + "·" + other.label,
            {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
             a[2] * b[1] + a[3] * b[3]}};
}

SingleQubitGate SingleQubitGate::power(unsigned k) const {
    SingleQubitGate result = I();
    for (unsigned i = 0; i < k; ++i) {
        result = compose(result);
    }
    result.label = k == 0 ? "I" : (k == 1 ? label : label + "^" + std::to_string(k));
    return result;
}

bool SingleQubitGate::is_diagonal() const {
    return std::abs(matrix[1]) < kPruneThreshold && std::abs(matrix[2]) < kPruneThreshold;
}

bool SingleQubitGate::is_unitary(double tol) const {
    SingleQubitGate product = adjoint().compose(*this);
    const auto& m = product.matrix;
    return std::abs(m[0] - 1.0) < tol && std::abs(m[3] - 1.0) < tol && std::abs(m[1]) < tol &&
           std::abs(m[2]) < tol;
}

// ---------------------------------------------------------------------------
// State operations.

SparseState apply_single(const SparseState& state, const SingleQubitGate& gate, std::size_t qubit) {
    check_qubit(qubit, state.num_qubits());
    std::uint64_t mask = bit_of(qubit);
    const auto& m = gate.matrix;
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        bool one = key & mask;
        std::uint64_t k0 = key & ~mask;
        std::uint64_t k1 = key | mask;
        // Column `one` of the matrix.
        Amplitude to0 = one ? m[1] : m[0];
        Amplitude to1 = one ? m[3] : m[2];
        if (to0 != Amplitude{}) {
            out[k0] += to0 * amp;
        }
        if (to1 != Amplitude{}) {
            out[k1] += to1 * amp;
        }
    }
    return SparseState::from_terms(state.num_qubits(), std::move(out));
}

SparseState apply_cnot(const SparseState& state, std::size_t control, std::size_t target) {
    check_qubit(control, state.num_qubits());
    check_qubit(target, state.num_qubits());
    if (control == target) {
        throw std::invalid_argument("CNOT control and target coincide");
    }
    std::uint64_t c = bit_of(control);
    std::uint64_t t = bit_of(target);
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        out.emplace(key & c ? key ^ t : key, amp);
    }
    return SparseState::from_terms(state.num_qubits(), std::move(out));
}

SparseState apply_pauli(const SparseState& state, const PauliOperator& p) {
    if (p.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument(
            "Pauli on " + std::to_string(p.num_qubits()) + " qubits applied to a " +
            std::to_string(state.num_qubits()) + "-qubit state");
    }
    std::uint64_t xs = p.x_bits().low_word();
    std::uint64_t zs = p.z_bits().low_word();
    static constexpr Amplitude kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Amplitude global = kIPow[p.phase() & 3];
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        double sign = (std::popcount(zs & key) & 1) ? -1.0 : 1.0;
        out.emplace(key ^ xs, global * sign * amp);
    }
    return SparseState::from_terms(state.num_qubits(), std::move(out));
}

SparseState apply_diagonal(const SparseState& state, std::span<const Amplitude> phase_per_one) {
    if (phase_per_one.size() != state.num_qubits()) {
        throw std::invalid_argument("diagonal phase list length does not match the register");
    }
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        Amplitude factor = 1.0;
        for (std::size_t q = 0; q < phase_per_one.size(); ++q) {
            if ((key >> q) & 1) {
                factor *= phase_per_one[q];
            }
        }
        out.emplace_hint(out.end(), key, factor * amp);
    }
    return SparseState::from_terms(state.num_qubits(), std::move(out));
}

SparseState apply_transversal_diagonal(const SparseState& state, Amplitude phase_per_one) {
    std::vector<Amplitude> phases(state.num_qubits(), phase_per_one);
    return apply_diagonal(state, phases);
}

SparseState swap_qubits(const SparseState& state, std::size_t i, std::size_t j) {
    check_qubit(i, state.num_qubits());
    check_qubit(j, state.num_qubits());
    if (i == j) {
        return state;
    }
    std::uint64_t bi = bit_of(i);
    std::uint64_t bj = bit_of(j);
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        std::uint64_t k = key;
        if (static_cast<bool>(key & bi) != static_cast<bool>(key & bj)) {
            k ^= bi | bj;
        }
        out.emplace(k, amp);
    }
    return SparseState::from_terms(state.num_qubits(), std::move(out));
}

SparseState tensor(const SparseState& a, const SparseState& b) {
    std::size_t n = a.num_qubits() + b.num_qubits();
    check_register_size(n);
    if (a.size() * b.size() > kMaxStateTerms) {
        throw std::length_error(
            "tensor product would hold " + std::to_string(a.size() * b.size()) + " terms, above the guard of " +
            std::to_string(kMaxStateTerms));
    }
    SparseState::Terms out;
    std::size_t shift = a.num_qubits();
    for (const auto& [kb, ab] : b.terms()) {
        for (const auto& [ka, aa] : a.terms()) {
            std::uint64_t high = shift >= 64 ? 0 : kb << shift;
            out.emplace_hint(out.end(), ka | high, aa * ab);
        }
    }
    return SparseState::from_terms(n, std::move(out));
}

Amplitude inner_product(const SparseState& a, const SparseState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument(
            "inner product of states on " + std::to_string(a.num_qubits()) + " and " +
            std::to_string(b.num_qubits()) + " qubits");
    }
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    Amplitude total{};
    for (const auto& [key, amp] : small.terms()) {
        auto it = large.terms().find(key);
        if (it != large.terms().end()) {
            total += std::conj(a.amplitude(key)) * b.amplitude(key);
        }
    }
    return total;
}

double fidelity_up_to_phase(const SparseState& a, const SparseState& b) {
    return std::abs(inner_product(a, b));
}

Projection project_onto(std::span<const SparseState> span, const SparseState& state) {
    for (std::size_t i = 0; i < span.size(); ++i) {
        for (std::size_t j = i; j < span.size(); ++j) {
            Amplitude g = inner_product(span[i], span[j]);
            Amplitude expected = i == j ? 1.0 : 0.0;
            if (std::abs(g - expected) > kStateTolerance) {
                throw std::invalid_argument(
                    "projection span is not orthonormal (Gram entry " + std::to_string(i + 1) + "," +
                    std::to_string(j + 1) + ")");
            }
        }
    }
    Projection result;
    result.state = SparseState::zero(state.num_qubits());
    for (const auto& basis : span) {
        Amplitude c = inner_product(basis, state);
        result.coefficients.push_back(c);
        result.state = result.state.plus(basis, c);
    }
    result.weight = result.state.norm_squared();
    result.is_zero = result.weight < 1e-20;
    if (result.is_zero) {
        result.state = SparseState::zero(state.num_qubits());
    } else {
        result.state = result.state.normalized();
    }
    return result;
}

std::vector<std::size_t> complement_positions(std::size_t n, std::span<const std::size_t> positions) {
    std::uint64_t taken = 0;
    for (auto q : positions) {
        taken |= bit_of(q);
    }
    std::vector<std::size_t> rest;
    for (std::size_t q = 1; q <= n; ++q) {
        if (!(taken & bit_of(q))) {
            rest.push_back(q);
        }
    }
    return rest;
}

SparseState contract(const SparseState& state, std::span<const std::size_t> positions, const SparseState& bra) {
    check_positions(positions, state.num_qubits());
    if (bra.num_qubits() != positions.size()) {
        throw std::invalid_argument("contraction bra size does not match the listed qubits");
    }
    auto rest = complement_positions(state.num_qubits(), positions);
    SparseState::Terms out;
    for (const auto& [key, amp] : state.terms()) {
        auto it = bra.terms().find(gather(key, positions));
        if (it == bra.terms().end()) {
            continue;
        }
        out[gather(key, rest)] += std::conj(it->second) * amp;
    }
    return SparseState::from_terms(rest.size(), std::move(out));
}

SparseState embed(const SparseState& block, std::span<const std::size_t> positions, const SparseState& rest) {
    std::size_t n = block.num_qubits() + rest.num_qubits();
    check_register_size(n);
    check_positions(positions, n);
    if (block.num_qubits() != positions.size()) {
        throw std::invalid_argument("embedded block size does not match the listed qubits");
    }
    if (block.size() * rest.size() > kMaxStateTerms) {
        throw std::length_error("embedding exceeds the term guard");
    }
    auto rest_positions = complement_positions(n, positions);
    SparseState::Terms out;
    for (const auto& [kb, ab] : block.terms()) {
        std::uint64_t high = scatter(kb, positions);
        for (const auto& [kr, ar] : rest.terms()) {
            out.emplace(high | scatter(kr, rest_positions), ab * ar);
        }
    }
    return SparseState::from_terms(n, std::move(out));
}

SubsystemMeasurement measure_subsystem(
    const SparseState& state,
    std::span<const std::size_t> positions,
    std::span<const SparseState> basis,
    MeasurementSource& source) {
    SubsystemMeasurement result;
    std::vector<SparseState> branches;
    branches.reserve(basis.size());
    double total = 0;
    for (const auto& b : basis) {
        branches.push_back(contract(state, positions, b));
        double p = branches.back().norm_squared();
        result.probabilities.push_back(p);
        total += p;
    }
    if (total < 1e-20) {
        throw std::runtime_error("measurement on a state with zero weight in the measured basis");
    }
    for (auto& p : result.probabilities) {
        p /= total;
    }
    auto choice = source.choose(result.probabilities);
    result.outcome = choice.index;
    result.forced = choice.forced;
    result.collapsed = branches[choice.index].normalized();
    result.kept_qubits = complement_positions(state.num_qubits(), positions);
    return result;
}

SparseState rotated_bell_state(const SingleQubitGate& rotation, bool a, bool b) {
    SparseState phi = SparseState::from_terms(2, {{0b00, kInvSqrt2}, {0b11, kInvSqrt2}});
    if (a) {
        phi = apply_single(phi, SingleQubitGate::X(), 1);
    }
    if (b) {
        phi = apply_single(phi, SingleQubitGate::Z(), 1);
    }
    return apply_single(phi, rotation.adjoint(), 1);
}

BellMeasurement rotated_bell_measure(
    const SparseState& state,
    std::size_t first,
    std::size_t second,
    const SingleQubitGate& rotation,
    MeasurementSource& source) {
    if (first == second) {
        throw std::invalid_argument("Bell measurement needs two distinct qubits");
    }
    if (!rotation.is_unitary()) {
        throw std::invalid_argument("Bell rotation '" + rotation.label + "' is not unitary");
    }
    std::array<SparseState, 4> basis;
    for (unsigned idx = 0; idx < 4; ++idx) {
        basis[idx] = rotated_bell_state(rotation, idx >> 1, idx & 1);
    }
    std::array<std::size_t, 2> positions{first, second};
    auto m = measure_subsystem(state, positions, basis, source);
    BellMeasurement result;
    result.r_a = m.outcome >> 1;
    result.r_b = m.outcome & 1;
    result.forced = m.forced;
    std::copy(m.probabilities.begin(), m.probabilities.end(), result.probabilities.begin());
    result.collapsed = std::move(m.collapsed);
    result.kept_qubits = std::move(m.kept_qubits);
    return result;
}

}  // namespace hqec
