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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hqec/codes.h"
#include "hqec/f2.h"
#include "hqec/pauli.h"
#include "hqec/sparse.h"

namespace hqec {

/// Tolerance below which a diagonal gate counts as leaving no weight outside
/// the code space.
inline constexpr double kLeakageTolerance = 1e-10;

/// (X^a Z^b)^{⊗n}.
PauliOperator transversal_mask(std::size_t n, bool a, bool b);

struct GeneratorCheck {
    std::string generator;
    bool commutes_with_x = true;
    bool commutes_with_z = true;
};

struct CompatReport {
    std::string code_name;
    std::vector<GeneratorCheck> generators;
    /// Entries such as "ZZZ vs X^⊗3", one per failing pair.
    std::vector<std::string> failures;
    bool compatible = true;

    bool has_css = false;
    bool e_in_c1 = false;
    bool e_in_c2_dual = false;
    bool css_compatible = false;
    /// True when the CSS verdict equals the generator verdict.
    bool cross_check_agrees = true;
};

/// Compatibility with (X^a Z^b)^{⊗n}: every generator commutes with X^⊗n and
/// Z^⊗n. Codes with a CSS origin are also checked through their classical pair.
CompatReport theorem1_check(const StabilizerCode& code);

/// e ∈ C1 and every word of C2 has even weight. Throws unless C2 ⊂ C1.
CompatReport theorem2_check(const ClassicalCode& c1, const ClassicalCode& c2);

struct EvenSupportReport {
    bool ok = true;
    /// "Z3" or "X1" for the third Z support or first X support when odd.
    std::vector<std::string> odd_supports;
};

EvenSupportReport even_support_check(std::span<const BitVec> z_supports, std::span<const BitVec> x_supports);

/// Squared norm of the projection of U_enc(a,b)|state⟩ onto the code space.
double masked_code_weight(const CodeSpace& space, const SparseState& state, bool a, bool b);

struct DiagonalAction {
    std::string label;
    /// Norm of the out-of-code component for (|0̄⟩+|1̄⟩)/√2.
    double leakage = 0;
    /// ⟨ī|D|ī⟩ for each basis state; empty unless the action is intact.
    std::vector<Amplitude> logical_phases;
    bool intact() const {
        return !logical_phases.empty();
    }
};

/// Multiplies the amplitude of |b⟩ by phase^{w(b)} and inspects the logical
/// action on the code space.
DiagonalAction diagonal_gate_action(const CodeSpace& space, Amplitude phase_per_one, std::string label = "");
DiagonalAction diagonal_gate_action(
    const CodeSpace& space, std::span<const Amplitude> phase_per_qubit, std::string label = "");

struct CliffordCorrection {
    /// Correction Z̄^z followed by diag(1, i^s) on the logical qubit.
    unsigned logical_s_power = 0;
    unsigned logical_z_power = 0;
    /// g with U·T^⊗n = g·T̄ on the code space.
    Amplitude global_phase = 1.0;
    /// A transversal gate realizing the logical part of U, when one of
    /// I, S, Z, S† works.
    std::optional<SingleQubitGate> realization;
    /// Logical phases of the realization (up to the global factor).
    std::vector<Amplitude> realization_phases;
};

/// Diagonal Clifford correction turning the logical action of T^⊗n into
/// T̄ = diag(1, e^{iπ/4}). Returns nullopt when T^⊗n leaks out of the code
/// space or no diagonal correction exists.
std::optional<CliffordCorrection> clifford_correction_for_t(const CodeSpace& space);

}  // namespace hqec
