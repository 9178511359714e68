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

#include "hqec/pauli.h"

#include <string>

namespace hqec {

namespace {

void check_qubit_count(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("Pauli operator needs at least one qubit");
    }
    if (n > kMaxPauliQubits) {
        throw std::invalid_argument(
            "Pauli operator on " + std::to_string(n) + " qubits exceeds the cap of " +
            std::to_string(kMaxPauliQubits));
    }
}

void check_same_n(const PauliOperator& p, const PauliOperator& q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli dimension mismatch: " + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()) + " qubits");
    }
}

}  // namespace

PauliOperator::PauliOperator(std::size_t n) : x_(n), z_(n) {
    check_qubit_count(n);
}

PauliOperator::PauliOperator(BitVec x_bits, BitVec z_bits, unsigned phase)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(phase & 3) {
    if (x_.size() != z_.size()) {
        throw std::invalid_argument("Pauli x/z parts differ in length");
    }
    check_qubit_count(x_.size());
}

PauliOperator PauliOperator::parse(std::string_view text) {
    unsigned sign = 0;
    std::size_t offset = 0;
    if (text.starts_with("-i")) {
        sign = 3;
        offset = 2;
    } else if (text.starts_with("+i")) {
        sign = 1;
        offset = 2;
    } else if (text.starts_with("i")) {
        sign = 1;
        offset = 1;
    } else if (text.starts_with("-")) {
        sign = 2;
        offset = 1;
    } else if (text.starts_with("+")) {
        offset = 1;
    }
    std::string_view body = text.substr(offset);
    if (body.empty()) {
        throw ParseError("Pauli string '" + std::string(text) + "' has no qubits");
    }
    if (body.size() > kMaxPauliQubits) {
        throw ParseError("Pauli string '" + std::string(text) + "' exceeds the qubit cap");
    }
    BitVec x(body.size());
    BitVec z(body.size());
    unsigned y_count = 0;
    for (std::size_t k = 0; k < body.size(); ++k) {
        switch (body[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                x.set(k, true);
                break;
            case 'Z':
                z.set(k, true);
                break;
            case 'Y':
                x.set(k, true);
                z.set(k, true);
                ++y_count;
                break;
            default:
                throw ParseError(
                    "Pauli string '" + std::string(text) + "' has invalid character '" +
                    std::string(1, body[k]) + "' at position " + std::to_string(offset + k + 1));
        }
    }
    return PauliOperator(std::move(x), std::move(z), sign + y_count);
}

PauliOperator PauliOperator::transversal(PauliKind kind, std::size_t n) {
    check_qubit_count(n);
    BitVec all = BitVec::ones(n);
    return from_support(kind, all);
}

PauliOperator PauliOperator::single(std::size_t n, std::size_t qubit, char pauli) {
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(n));
    }
    PauliOperator result(n);
    std::size_t k = qubit - 1;
    switch (pauli) {
        case 'X':
            result.x_.set(k, true);
            break;
        case 'Z':
            result.z_.set(k, true);
            break;
        case 'Y':
            result.x_.set(k, true);
            result.z_.set(k, true);
            result.phase_ = 1;
            break;
        default:
            throw std::invalid_argument("unknown single-qubit Pauli '" + std::string(1, pauli) + "'");
    }
    return result;
}

PauliOperator PauliOperator::from_support(PauliKind kind, const BitVec& support) {
    BitVec empty(support.size());
    if (kind == PauliKind::X) {
        return PauliOperator(support, std::move(empty), 0);
    }
    return PauliOperator(std::move(empty), support, 0);
}

std::size_t PauliOperator::weight() const {
    return (x_ | z_).popcount();
}

bool PauliOperator::is_identity() const {
    return !x_.any() && !z_.any();
}

bool PauliOperator::is_hermitian() const {
    // (i^p X^x Z^z)^2 = i^{2p} (-1)^{x.z}.
    return ((2 * phase_ + 2 * static_cast<unsigned>(y_count())) & 3) == 0;
}

char PauliOperator::pauli_at(std::size_t qubit) const {
    std::size_t k = qubit - 1;
    bool xb = x_.get(k);
    bool zb = z_.get(k);
    if (xb && zb) {
        return 'Y';
    }
    if (xb) {
        return 'X';
    }
    return zb ? 'Z' : 'I';
}

bool PauliOperator::commutes(const PauliOperator& other) const {
    check_same_n(*this, other);
    return ((x_.and_count(other.z_) + z_.and_count(other.x_)) & 1) == 0;
}

std::string PauliOperator::str() const {
    unsigned display = (phase_ + 4 - static_cast<unsigned>(y_count() & 3)) & 3;
    static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
    std::string out = kPrefix[display];
    out.reserve(out.size() + num_qubits());
    for (std::size_t q = 1; q <= num_qubits(); ++q) {
        out.push_back(pauli_at(q));
    }
    return out;
}

PauliOperator operator*(const PauliOperator& p, const PauliOperator& q) {
    check_same_n(p, q);
    // X^a Z^b X^c Z^d = (-1)^{b.c} X^{a+c} Z^{b+d}.
    unsigned phase = p.phase_ + q.phase_ + 2 * static_cast<unsigned>(p.z_.and_count(q.x_) & 1);
    return PauliOperator(p.x_ ^ q.x_, p.z_ ^ q.z_, phase);
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
    return p * q;
}

PauliOperator inverse(const PauliOperator& p) {
    unsigned square = (p * p).phase();
    return p.with_phase(p.phase() + 4 - square);
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    return p.commutes(q);
}

std::size_t weight(const PauliOperator& p) {
    return p.weight();
}

PauliOperator transversal_pauli(PauliKind kind, std::size_t n) {
    return PauliOperator::transversal(kind, n);
}

std::string transversal_label(PauliKind kind, std::size_t n) {
    return std::string(kind == PauliKind::X ? "X" : "Z") + "^⊗" + std::to_string(n);
}

}  // namespace hqec
