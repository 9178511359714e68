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

#include "hqec/codes.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hqec {

namespace {

/// (x | z) packed into one vector of length 2n.
BitVec symplectic(const PauliOperator& p) {
    std::size_t n = p.num_qubits();
    BitVec v(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, p.x_bits().get(i));
        v.set(n + i, p.z_bits().get(i));
    }
    return v;
}

std::string label(const char* kind, std::size_t i) {
    return std::string(kind) + std::to_string(i + 1);
}

PauliOperator z_of(const BitVec& support) {
    return PauliOperator::from_support(PauliKind::Z, support);
}

PauliOperator x_of(const BitVec& support) {
    return PauliOperator::from_support(PauliKind::X, support);
}

std::vector<PauliOperator> parse_all(std::initializer_list<std::string_view> texts) {
    std::vector<PauliOperator> out;
    for (auto t : texts) {
        out.push_back(PauliOperator::parse(t));
    }
    return out;
}

bool fixes(const SparseState& state, const PauliOperator& p) {
    return std::abs(inner_product(state, apply_pauli(state, p)) - 1.0) < kStateTolerance;
}

SparseState project_plus(const SparseState& state, const PauliOperator& p) {
    return state.plus(apply_pauli(state, p)).scaled(0.5);
}

SparseState fix_global_phase(const SparseState& state) {
    Amplitude first = state.terms().begin()->second;
    return state.scaled(std::conj(first) / std::abs(first));
}

StabilizerCode make_bit_flip() {
    StabilizerCode c;
    c.name = "bit_flip";
    c.n = 3;
    c.k = 1;
    c.generators = parse_all({"ZZI", "IZZ"});
    c.logical_x = parse_all({"XXX"});
    c.logical_z = parse_all({"ZZZ"});
    return c;
}

StabilizerCode make_phase_flip() {
    StabilizerCode c;
    c.name = "phase_flip";
    c.n = 3;
    c.k = 1;
    c.generators = parse_all({"XXI", "IXX"});
    c.logical_x = parse_all({"ZZZ"});
    c.logical_z = parse_all({"XXX"});
    return c;
}

StabilizerCode make_shor() {
    StabilizerCode c;
    c.name = "shor";
    c.n = 9;
    c.k = 1;
    c.generators = parse_all({
        "ZZIIIIIII",
        "IZZIIIIII",
        "IIIZZIIII",
        "IIIIZZIII",
        "IIIIIIZZI",
        "IIIIIIIZZ",
        "XXXXXXIII",
        "IIIXXXXXX",
    });
    // Phase-repetition basis: X^⊗9 flips the logical phase.
    c.logical_x = parse_all({"ZZZZZZZZZ"});
    c.logical_z = parse_all({"XXXXXXXXX"});
    return c;
}

StabilizerCode make_steane() {
    std::vector<std::string_view> c1_rows{"1000011", "0100101", "0010110", "0001111"};
    std::vector<std::string_view> c2_rows{"0001111", "0110011", "1010101"};
    auto c1 = ClassicalCode::from_rows(BitMatrix::from_strings(c1_rows));
    auto c2 = ClassicalCode::from_rows(BitMatrix::from_strings(c2_rows));
    StabilizerCode c = css_from_classical(c1, c2, "steane");
    c.logical_x = {PauliOperator::transversal(PauliKind::X, 7)};
    c.logical_z = {PauliOperator::transversal(PauliKind::Z, 7)};
    return c;
}

StabilizerCode make_rm15() {
    std::vector<std::string_view> rows{
        "111111111111111",
        "000000011111111",
        "000111100001111",
        "011001100110011",
        "101010101010101",
    };
    BitMatrix g = BitMatrix::from_strings(rows);
    std::vector<BitVec> g0_rows(g.row_list().begin() + 1, g.row_list().end());
    auto c1 = ClassicalCode::from_rows(g);
    auto c2 = ClassicalCode::from_rows(BitMatrix(g0_rows));

    StabilizerCode c;
    c.name = "rm15";
    c.n = 15;
    c.k = 1;
    for (const auto& r : g0_rows) {
        c.generators.push_back(x_of(r));
    }
    std::vector<BitVec> z_rows = null_space(g.row_list(), 15);
    for (const auto& r : z_rows) {
        c.generators.push_back(z_of(r));
    }
    c.logical_x = {x_of(g.row(0))};

    BitVec zbar = BitVec::ones(15);
    bool improved = true;
    while (improved) {
        improved = false;
        for (const auto& r : z_rows) {
            BitVec candidate = zbar ^ r;
            if (candidate.popcount() < zbar.popcount()) {
                zbar = candidate;
                improved = true;
            }
        }
    }
    c.logical_z = {z_of(zbar)};
    c.css_origin = CssOrigin{c1, c2};
    return c;
}

StabilizerCode make_synthetic_incompatible() {
    StabilizerCode c;
    c.name = "synthetic_incompatible";
    c.n = 3;
    c.k = 1;
    c.generators = parse_all({"ZZZ", "XXI"});
    c.logical_x = parse_all({"IXX"});
    c.logical_z = parse_all({"ZZI"});
    return c;
}

}  // namespace

ValidationReport validate_code(const StabilizerCode& code) {
    ValidationReport report;
    auto& v = report.violations;
    auto check_size = [&](const PauliOperator& p, const std::string& what) {
        if (p.num_qubits() != code.n) {
            v.push_back(what + " acts on " + std::to_string(p.num_qubits()) + " qubits, expected " +
                        std::to_string(code.n));
            return false;
        }
        return true;
    };

    bool sizes_ok = true;
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        sizes_ok &= check_size(code.generators[i], label("g", i));
    }
    for (std::size_t j = 0; j < code.logical_x.size(); ++j) {
        sizes_ok &= check_size(code.logical_x[j], label("X̄", j));
    }
    for (std::size_t j = 0; j < code.logical_z.size(); ++j) {
        sizes_ok &= check_size(code.logical_z[j], label("Z̄", j));
    }
    if (code.k > code.n) {
        v.push_back("k = " + std::to_string(code.k) + " exceeds n = " + std::to_string(code.n));
    } else if (code.generators.size() != code.n - code.k) {
        v.push_back("expected " + std::to_string(code.n - code.k) + " generators, found " +
                    std::to_string(code.generators.size()));
    }
    if (code.logical_x.size() != code.k || code.logical_z.size() != code.k) {
        v.push_back("expected " + std::to_string(code.k) + " logical X and Z operators, found " +
                    std::to_string(code.logical_x.size()) + " and " + std::to_string(code.logical_z.size()));
    }
    if (!sizes_ok) {
        return report;
    }

    const auto& gens = code.generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!gens[i].is_hermitian()) {
            v.push_back(label("g", i) + " = " + gens[i].str() + " is not Hermitian");
        }
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!gens[i].commutes(gens[j])) {
                v.push_back(label("g", i) + " = " + gens[i].str() + " anticommutes with " + label("g", j) + " = " +
                            gens[j].str());
            }
        }
    }

    if (!gens.empty()) {
        // Column j of `coords` is the symplectic vector of g_j; its null space
        // lists the products of generators that reduce to a scalar.
        std::vector<BitVec> coords(2 * code.n, BitVec(gens.size()));
        for (std::size_t j = 0; j < gens.size(); ++j) {
            BitVec s = symplectic(gens[j]);
            for (std::size_t r = 0; r < 2 * code.n; ++r) {
                if (s.get(r)) {
                    coords[r].set(j, true);
                }
            }
        }
        auto relations = null_space(coords, gens.size());
        if (!relations.empty()) {
            v.push_back("generators are dependent (rank " + std::to_string(gens.size() - relations.size()) +
                        " of " + std::to_string(gens.size()) + ")");
        }
        for (const auto& rel : relations) {
            PauliOperator product(code.n);
            std::string names;
            for (std::size_t j = 0; j < gens.size(); ++j) {
                if (rel.get(j)) {
                    product = product * gens[j];
                    names += (names.empty() ? "" : "·") + label("g", j);
                }
            }
            if (product.phase() != 0) {
                static constexpr const char* kScalar[] = {"I", "iI", "-I", "-iI"};
                v.push_back(std::string("stabilizer group contains ") + kScalar[product.phase()] + ": " + names);
            }
        }
    }

    for (std::size_t j = 0; j < code.logical_x.size() && j < code.logical_z.size(); ++j) {
        for (const auto* group : {&code.logical_x, &code.logical_z}) {
            const auto& op = (*group)[j];
            std::string name = label(group == &code.logical_x ? "X̄" : "Z̄", j);
            if (!op.is_hermitian()) {
                v.push_back(name + " = " + op.str() + " is not Hermitian");
            }
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (!op.commutes(gens[i])) {
                    v.push_back(name + " = " + op.str() + " anticommutes with " + label("g", i) + " = " +
                                gens[i].str());
                }
            }
        }
        for (std::size_t l = 0; l < code.logical_z.size(); ++l) {
            bool anti = !code.logical_x[j].commutes(code.logical_z[l]);
            if (anti != (j == l)) {
                v.push_back(label("X̄", j) + (anti ? " anticommutes with " : " commutes with ") + label("Z̄", l));
            }
        }
        for (std::size_t l = j + 1; l < code.logical_x.size(); ++l) {
            if (!code.logical_x[j].commutes(code.logical_x[l])) {
                v.push_back(label("X̄", j) + " anticommutes with " + label("X̄", l));
            }
            if (l < code.logical_z.size() && !code.logical_z[j].commutes(code.logical_z[l])) {
                v.push_back(label("Z̄", j) + " anticommutes with " + label("Z̄", l));
            }
        }
    }
    return report;
}

std::vector<std::string> builtin_code_names() {
    return {"bit_flip", "phase_flip", "shor", "steane", "rm15", "synthetic_incompatible"};
}

StabilizerCode builtin_code(std::string_view name) {
    if (name == "bit_flip") {
        return make_bit_flip();
    }
    if (name == "phase_flip") {
        return make_phase_flip();
    }
    if (name == "shor") {
        return make_shor();
    }
    if (name == "steane") {
        return make_steane();
    }
    if (name == "rm15") {
        return make_rm15();
    }
    if (name == "synthetic_incompatible") {
        return make_synthetic_incompatible();
    }
    throw std::invalid_argument("unknown code '" + std::string(name) + "'");
}

StabilizerCode parse_code(std::string_view text, std::string name) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream words(line);
        std::string word;
        std::string joined;
        while (words >> word) {
            joined += (joined.empty() ? "" : " ") + word;
        }
        if (!joined.empty()) {
            lines.emplace_back(line_no, joined);
        }
    }
    if (lines.empty()) {
        throw ParseError("code file '" + name + "' is empty");
    }
    StabilizerCode code;
    code.name = std::move(name);
    {
        std::istringstream header(lines[0].second);
        long long n = -1;
        long long k = -1;
        std::string extra;
        if (!(header >> n >> k) || (header >> extra) || n <= 0 || k < 0 || k > n) {
            throw ParseError("code file '" + code.name + "' line " + std::to_string(lines[0].first) +
                             ": header must be 'n k' with 0 <= k <= n and n >= 1");
        }
        code.n = static_cast<std::size_t>(n);
        code.k = static_cast<std::size_t>(k);
    }
    std::size_t expected = (code.n - code.k) + 2 * code.k;
    if (lines.size() - 1 != expected) {
        throw ParseError("code file '" + code.name + "' has " + std::to_string(lines.size() - 1) +
                         " operator lines, expected " + std::to_string(expected));
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        PauliOperator p(1);
        try {
            p = PauliOperator::parse(lines[i].second);
        } catch (const ParseError& e) {
            throw ParseError("code file '" + code.name + "' line " + std::to_string(lines[i].first) + ": " + e.what());
        }
        if (p.num_qubits() != code.n) {
            throw ParseError("code file '" + code.name + "' line " + std::to_string(lines[i].first) + ": operator " +
                             lines[i].second + " has " + std::to_string(p.num_qubits()) + " qubits, expected " +
                             std::to_string(code.n));
        }
        std::size_t idx = i - 1;
        if (idx < code.n - code.k) {
            code.generators.push_back(std::move(p));
        } else if (idx < code.n) {
            code.logical_x.push_back(std::move(p));
        } else {
            code.logical_z.push_back(std::move(p));
        }
    }
    return code;
}

std::string format_code(const StabilizerCode& code) {
    std::string out = "# " + code.name + "\n" + std::to_string(code.n) + " " + std::to_string(code.k) + "\n";
    for (const auto* group : {&code.generators, &code.logical_x, &code.logical_z}) {
        for (const auto& p : *group) {
            out += p.str() + "\n";
        }
    }
    return out;
}

bool in_stabilizer_group_up_to_phase(const StabilizerCode& code, const PauliOperator& p) {
    if (p.num_qubits() != code.n) {
        throw std::invalid_argument("operator size does not match the code");
    }
    std::vector<BitVec> rows;
    for (const auto& g : code.generators) {
        rows.push_back(symplectic(g));
    }
    if (rows.empty()) {
        return p.is_identity();
    }
    auto code_rows = ClassicalCode::from_rows(BitMatrix(std::move(rows)));
    return code_rows.contains(symplectic(p));
}

StabilizerCode css_from_classical(const ClassicalCode& c1, const ClassicalCode& c2, std::string name) {
    if (c1.length() != c2.length()) {
        throw std::invalid_argument("CSS pair has different lengths");
    }
    if (!c2.is_subcode_of(c1)) {
        throw std::invalid_argument("CSS construction requires C2 ⊂ C1, but C2 is not a subcode of C1");
    }
    if (c1.dimension() <= c2.dimension()) {
        throw std::invalid_argument("CSS construction requires dim C1 > dim C2");
    }
    std::size_t n = c1.length();
    StabilizerCode code;
    code.name = std::move(name);
    code.n = n;
    code.k = c1.dimension() - c2.dimension();
    for (const auto& r : c2.generators()) {
        code.generators.push_back(x_of(r));
    }
    for (const auto& r : null_space(c1.generators(), n)) {
        code.generators.push_back(z_of(r));
    }

    // Extend a basis of C2 to one of C1; the new vectors carry X̄.
    std::vector<BitVec> span = c2.generators();
    std::vector<BitVec> xbar;
    auto extends = [&](const BitVec& w) {
        std::vector<BitVec> trial = span;
        trial.push_back(w);
        return row_reduce(trial).size() > span.size();
    };
    std::vector<BitVec> candidates{BitVec::ones(n)};
    for (const auto& g : c1.generators()) {
        candidates.push_back(g);
    }
    for (const auto& w : candidates) {
        if (c1.contains(w) && extends(w)) {
            xbar.push_back(w);
            span.push_back(w);
        }
    }

    // Z̄ from C2⊥ with pairing dots x̄_j · z̄_l = δ_jl: reduce (dots | u) rows.
    std::size_t k = code.k;
    std::vector<BitVec> augmented;
    for (const auto& u : null_space(c2.generators(), n)) {
        BitVec row(k + n);
        for (std::size_t j = 0; j < k; ++j) {
            row.set(j, xbar[j].dot(u));
        }
        for (std::size_t i = 0; i < n; ++i) {
            row.set(k + i, u.get(i));
        }
        augmented.push_back(std::move(row));
    }
    auto pivots = row_reduce(augmented);
    std::vector<BitVec> zbar(k);
    for (std::size_t r = 0; r < pivots.size() && pivots[r] < k; ++r) {
        BitVec u(n);
        for (std::size_t i = 0; i < n; ++i) {
            u.set(i, augmented[r].get(k + i));
        }
        zbar[pivots[r]] = std::move(u);
    }
    for (std::size_t j = 0; j < k; ++j) {
        code.logical_x.push_back(x_of(xbar[j]));
        code.logical_z.push_back(z_of(zbar[j]));
    }
    code.css_origin = CssOrigin{c1, c2};
    return code;
}

CodeSpace logical_codewords(const StabilizerCode& code) {
    if (code.k != 1) {
        throw std::invalid_argument("logical codewords are built only for k = 1 codes");
    }
    if (code.n > kMaxStateQubits) {
        throw std::invalid_argument("code '" + code.name + "' is too large for the sparse simulator");
    }
    const PauliOperator& zbar = code.logical_z[0];
    auto in_space = [&](const SparseState& s) {
        if (!fixes(s, zbar)) {
            return false;
        }
        return std::all_of(code.generators.begin(), code.generators.end(), [&](const auto& g) { return fixes(s, g); });
    };

    std::optional<SparseState> zero;
    if (code.css_origin) {
        auto candidate = coset_state(code.css_origin->c2, BitVec(code.n));
        if (in_space(candidate)) {
            zero = candidate;
        }
    }
    if (!zero) {
        std::uint64_t limit = std::uint64_t{1} << std::min<std::size_t>(code.n, 20);
        for (std::uint64_t seed = 0; seed < limit && !zero; ++seed) {
            SparseState s = project_plus(SparseState::basis(code.n, seed), zbar);
            for (const auto& g : code.generators) {
                if (s.is_zero()) {
                    break;
                }
                s = project_plus(s, g);
            }
            if (!s.is_zero() && s.norm_squared() > 1e-20) {
                zero = fix_global_phase(s.normalized());
            }
        }
    }
    if (!zero) {
        throw std::runtime_error("no seed state projects into the code space of '" + code.name + "'");
    }
    CodeSpace space{code, {*zero, apply_pauli(*zero, code.logical_x[0])}};
    return space;
}

BitVec syndrome(const StabilizerCode& code, const PauliOperator& error) {
    if (error.num_qubits() != code.n) {
        throw std::invalid_argument(
            "error acts on " + std::to_string(error.num_qubits()) + " qubits but the code has " +
            std::to_string(code.n));
    }
    BitVec s(code.generators.size());
    for (std::size_t i = 0; i < code.generators.size(); ++i) {
        s.set(i, !code.generators[i].commutes(error));
    }
    return s;
}

SingleErrorDecoder::SingleErrorDecoder(const StabilizerCode& code) : num_generators_(code.generators.size()) {
    table_.emplace(BitVec(num_generators_), PauliOperator(code.n));
    for (std::size_t q = 1; q <= code.n; ++q) {
        for (char p : {'X', 'Y', 'Z'}) {
            PauliOperator e = PauliOperator::single(code.n, q, p);
            table_.emplace(syndrome(code, e), e);
        }
    }
}

std::optional<PauliOperator> SingleErrorDecoder::decode(const BitVec& s) const {
    if (s.size() != num_generators_) {
        throw std::invalid_argument("syndrome length does not match the generator count");
    }
    auto it = table_.find(s);
    if (it == table_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::optional<PauliOperator> decode_single_error(const StabilizerCode& code, const BitVec& s) {
    return SingleErrorDecoder(code).decode(s);
}

}  // namespace hqec
