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

#include "hqec/compat.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hqec {

namespace {

constexpr double kPhaseTolerance = 1e-10;

Amplitude i_pow(unsigned s) {
    static constexpr Amplitude kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kIPow[s & 3];
}

}  // namespace

PauliOperator transversal_mask(std::size_t n, bool a, bool b) {
    BitVec x = a ? BitVec::ones(n) : BitVec(n);
    BitVec z = b ? BitVec::ones(n) : BitVec(n);
    return PauliOperator(std::move(x), std::move(z), 0);
}

CompatReport theorem1_check(const StabilizerCode& code) {
    CompatReport report;
    report.code_name = code.name;
    PauliOperator xs = PauliOperator::transversal(PauliKind::X, code.n);
    PauliOperator zs = PauliOperator::transversal(PauliKind::Z, code.n);
    std::string x_label = transversal_label(PauliKind::X, code.n);
    std::string z_label = transversal_label(PauliKind::Z, code.n);
    for (const auto& g : code.generators) {
        GeneratorCheck check{g.str(), g.commutes(xs), g.commutes(zs)};
        if (!check.commutes_with_x) {
            report.failures.push_back(check.generator + " vs " + x_label);
        }
        if (!check.commutes_with_z) {
            report.failures.push_back(check.generator + " vs " + z_label);
        }
        report.generators.push_back(std::move(check));
    }
    report.compatible = report.failures.empty();
    if (code.css_origin) {
        CompatReport css = theorem2_check(code.css_origin->c1, code.css_origin->c2);
        report.has_css = true;
        report.e_in_c1 = css.e_in_c1;
        report.e_in_c2_dual = css.e_in_c2_dual;
        report.css_compatible = css.css_compatible;
        report.cross_check_agrees = css.css_compatible == report.compatible;
    }
    return report;
}

CompatReport theorem2_check(const ClassicalCode& c1, const ClassicalCode& c2) {
    if (!c2.is_subcode_of(c1)) {
        throw std::invalid_argument("C2 is not a subcode of C1");
    }
    CompatReport report;
    report.code_name = "css";
    report.has_css = true;
    report.e_in_c1 = c1.contains(BitVec::ones(c1.length()));
    report.e_in_c2_dual = c2.all_even_weight();
    report.css_compatible = report.e_in_c1 && report.e_in_c2_dual;
    report.compatible = report.css_compatible;
    if (!report.e_in_c1) {
        report.failures.push_back("all-ones word not in C1");
    }
    if (!report.e_in_c2_dual) {
        report.failures.push_back("C2 has odd-weight words");
    }
    return report;
}

EvenSupportReport even_support_check(std::span<const BitVec> z_supports, std::span<const BitVec> x_supports) {
    EvenSupportReport report;
    for (std::size_t i = 0; i < z_supports.size(); ++i) {
        if (z_supports[i].popcount() & 1) {
            report.odd_supports.push_back("Z" + std::to_string(i + 1));
        }
    }
    for (std::size_t i = 0; i < x_supports.size(); ++i) {
        if (x_supports[i].popcount() & 1) {
            report.odd_supports.push_back("X" + std::to_string(i + 1));
        }
    }
    report.ok = report.odd_supports.empty();
    return report;
}

double masked_code_weight(const CodeSpace& space, const SparseState& state, bool a, bool b) {
    SparseState masked = apply_pauli(state, transversal_mask(space.code.n, a, b));
    return project_onto(space.basis, masked).weight;
}

DiagonalAction diagonal_gate_action(const CodeSpace& space, Amplitude phase_per_one, std::string label) {
    std::vector<Amplitude> phases(space.code.n, phase_per_one);
    return diagonal_gate_action(space, phases, std::move(label));
}

DiagonalAction diagonal_gate_action(
    const CodeSpace& space, std::span<const Amplitude> phase_per_qubit, std::string label) {
    DiagonalAction action;
    action.label = std::move(label);
    const auto& basis = space.basis;
    SparseState uniform = basis[0].plus(basis[1]).scaled(1.0 / std::numbers::sqrt2);
    SparseState out = apply_diagonal(uniform, phase_per_qubit);
    SparseState residual = out;
    for (const auto& b : basis) {
        residual = residual.plus(b, -inner_product(b, out));
    }
    action.leakage = std::sqrt(residual.norm_squared());
    if (action.leakage >= kLeakageTolerance) {
        return action;
    }
    std::vector<Amplitude> phases;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        SparseState image = apply_diagonal(basis[i], phase_per_qubit);
        for (std::size_t j = 0; j < basis.size(); ++j) {
            Amplitude m = inner_product(basis[j], image);
            if (i == j) {
                phases.push_back(m);
                if (std::abs(std::abs(m) - 1.0) > kPhaseTolerance) {
                    return action;
                }
            } else if (std::abs(m) > kPhaseTolerance) {
                return action;
            }
        }
    }
    action.logical_phases = std::move(phases);
    return action;
}

std::optional<CliffordCorrection> clifford_correction_for_t(const CodeSpace& space) {
    Amplitude omega = std::polar(1.0, std::numbers::pi / 4);
    DiagonalAction t = diagonal_gate_action(space, omega, "T");
    if (!t.intact()) {
        return std::nullopt;
    }
    Amplitude p0 = t.logical_phases[0];
    Amplitude p1 = t.logical_phases[1];
    for (unsigned s = 0; s < 4; ++s) {
        for (unsigned z = 0; z < 2; ++z) {
            Amplitude ratio = (z ? -1.0 : 1.0) * i_pow(s);
            if (std::abs(p1 * ratio - p0 * omega) > kPhaseTolerance) {
                continue;
            }
            CliffordCorrection corr;
            corr.logical_s_power = s;
            corr.logical_z_power = z;
            corr.global_phase = p0;
            for (const auto& gate :
                 {SingleQubitGate::I(), SingleQubitGate::S(), SingleQubitGate::Z(), SingleQubitGate::Sdg()}) {
                DiagonalAction r = diagonal_gate_action(space, gate.matrix[3], gate.label);
                if (r.intact() && std::abs(r.logical_phases[1] - ratio * r.logical_phases[0]) < kPhaseTolerance) {
                    corr.realization = gate;
                    corr.realization_phases = r.logical_phases;
                    break;
                }
            }
            return corr;
        }
    }
    return std::nullopt;
}

}  // namespace hqec
