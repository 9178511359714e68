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

#include "hqec_cli/cli.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hqec/codes.h"
#include "hqec/compat.h"
#include "hqec/f2.h"
#include "hqec/protocol.h"

namespace hqec_cli {

using json = nlohmann::ordered_json;
using namespace hqec;

namespace {

constexpr double kFidelityTolerance = 1e-10;

/// Raised for bad user input; maps to exit code 2.
class InputError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Options {
    bool json = false;
    std::uint64_t seed = 1;
    std::string dump_state;
    std::string force_outcomes;
};

struct Outcome {
    int exit_code = kExitOk;
    json doc;
    const SparseState* state = nullptr;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        out.push_back(item);
    }
    return out;
}

bool parse_bit(const std::string& s, const std::string& what) {
    if (s == "0") {
        return false;
    }
    if (s == "1") {
        return true;
    }
    throw InputError(what + " entry '" + s + "' is not 0 or 1");
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::logic_error&) {
        throw InputError(what + " entry '" + s + "' is not a number");
    }
}

std::optional<KeyPair> parse_keys(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw InputError("--keys '" + text + "' needs the form a,b");
    }
    return KeyPair{parse_bit(parts[0], "--keys"), parse_bit(parts[1], "--keys")};
}

std::optional<std::array<Amplitude, 2>> parse_amps(const std::string& text) {
    if (text.empty()) {
        return std::nullopt;
    }
    auto parts = split(text, ',');
    if (parts.size() != 4) {
        throw InputError("--amps '" + text + "' needs the form re,im,re,im");
    }
    Amplitude c0(parse_double(parts[0], "--amps"), parse_double(parts[1], "--amps"));
    Amplitude c1(parse_double(parts[2], "--amps"), parse_double(parts[3], "--amps"));
    double norm = std::sqrt(std::norm(c0) + std::norm(c1));
    if (norm < 1e-12) {
        throw InputError("--amps '" + text + "' is the zero vector");
    }
    return std::array<Amplitude, 2>{c0 / norm, c1 / norm};
}

std::deque<std::size_t> parse_outcomes(const std::string& text) {
    std::string bits;
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            bits += ch;
        } else if (ch != ',' && ch != ' ') {
            throw InputError("--force-outcomes '" + text + "' has invalid character '" + std::string(1, ch) + "'");
        }
    }
    if (bits.size() % 2) {
        throw InputError("--force-outcomes '" + text + "' needs two bits (r_a r_b) per measurement");
    }
    std::deque<std::size_t> out;
    for (std::size_t i = 0; i < bits.size(); i += 2) {
        out.push_back(2 * (bits[i] - '0') + (bits[i + 1] - '0'));
    }
    return out;
}

StabilizerCode load_code(const std::string& spec) {
    auto names = builtin_code_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
        return builtin_code(spec);
    }
    std::string stem = spec;
    auto slash = stem.find_last_of('/');
    if (slash != std::string::npos) {
        stem = stem.substr(slash + 1);
    }
    auto dot = stem.find_last_of('.');
    if (dot != std::string::npos && dot > 0) {
        stem = stem.substr(0, dot);
    }
    return parse_code(read_file(spec), stem);
}

json complex_json(Amplitude a) {
    return json{{"re", a.real() + 0.0}, {"im", a.imag() + 0.0}};
}

json state_json(const SparseState& s) {
    std::vector<std::pair<std::string, Amplitude>> rows;
    for (const auto& [key, amp] : s.terms()) {
        rows.emplace_back(SparseState::key_to_bits(key, s.num_qubits()), amp);
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    json out = json::array();
    for (const auto& [bits, amp] : rows) {
        out.push_back(json{{"basis", bits}, {"re", amp.real() + 0.0}, {"im", amp.imag() + 0.0}});
    }
    return out;
}

json key_json(KeyPair k) {
    return json{{"a", k.a ? 1 : 0}, {"b", k.b ? 1 : 0}};
}

json register_json(const KeyRegister& keys) {
    json out = json::array();
    for (std::size_t j = 0; j < keys.size(); ++j) {
        out.push_back(json{{"qubit", j + 1}, {"a", keys[j].a ? 1 : 0}, {"b", keys[j].b ? 1 : 0}});
    }
    return out;
}

json amps_json(const std::array<Amplitude, 2>& a) {
    return json::array({complex_json(a[0]), complex_json(a[1])});
}

json words_json(const std::vector<BitVec>& words) {
    std::vector<std::string> strs;
    for (const auto& w : words) {
        strs.push_back(w.str());
    }
    std::sort(strs.begin(), strs.end());
    return strs;
}

json compat_json(const CompatReport& r) {
    json gens = json::array();
    for (const auto& g : r.generators) {
        gens.push_back(json{
            {"generator", g.generator},
            {"commutes_with_x", g.commutes_with_x},
            {"commutes_with_z", g.commutes_with_z}});
    }
    json out;
    out["code_name"] = r.code_name;
    out["generators"] = gens;
    out["failures"] = r.failures;
    out["compatible"] = r.compatible;
    out["has_css"] = r.has_css;
    out["e_in_c1"] = r.e_in_c1;
    out["e_in_c2_dual"] = r.e_in_c2_dual;
    out["css_compatible"] = r.css_compatible;
    out["cross_check_agrees"] = r.cross_check_agrees;
    return out;
}

json measurement_json(const MeasurementEvent& m) {
    return json{
        {"pair", m.pair},
        {"s", m.s},
        {"c", m.c},
        {"rotation", m.rotation},
        {"r_a", m.r_a ? 1 : 0},
        {"r_b", m.r_b ? 1 : 0},
        {"forced", m.forced},
        {"probabilities", m.probabilities}};
}

bool passes(double fidelity) {
    return fidelity >= 1.0 - kFidelityTolerance;
}

// Verbs.

Outcome codes_list() {
    json codes = json::array();
    for (const auto& name : builtin_code_names()) {
        StabilizerCode c = builtin_code(name);
        codes.push_back(json{
            {"name", name}, {"n", c.n}, {"k", c.k}, {"valid", validate_code(c).ok()},
            {"css", c.css_origin.has_value()}});
    }
    return {kExitOk, json{{"command", "codes list"}, {"codes", codes}}};
}

Outcome codes_validate(const std::string& path) {
    StabilizerCode c = load_code(path);
    ValidationReport r = validate_code(c);
    json doc{{"command", "codes validate"}, {"code", c.name}, {"n", c.n}, {"k", c.k}, {"valid", r.ok()},
             {"violations", r.violations}};
    return {r.ok() ? kExitOk : kExitFailed, doc};
}

Outcome check_theorem1(const std::string& spec) {
    StabilizerCode c = load_code(spec);
    ValidationReport v = validate_code(c);
    if (!v.ok()) {
        throw InputError("code '" + c.name + "' is not a valid stabilizer code: " + v.violations.front());
    }
    CompatReport r = theorem1_check(c);
    json doc{{"command", "check theorem1"}};
    doc["report"] = compat_json(r);
    doc["verdict"] = r.compatible ? "compatible" : "incompatible";
    return {r.compatible ? kExitOk : kExitFailed, doc};
}

Outcome check_css(const std::string& c1_path, const std::string& c2_path) {
    ClassicalCode c1 = ClassicalCode::from_rows(BitMatrix::parse(read_file(c1_path)));
    ClassicalCode c2 = ClassicalCode::from_rows(BitMatrix::parse(read_file(c2_path)));
    if (c1.length() != c2.length()) {
        throw InputError("C1 has length " + std::to_string(c1.length()) + " but C2 has length " +
                         std::to_string(c2.length()));
    }
    if (!c2.is_subcode_of(c1)) {
        throw InputError("C2 from '" + c2_path + "' is not a subcode of C1 from '" + c1_path + "'");
    }
    CompatReport r = theorem2_check(c1, c2);
    json doc{{"command", "check css"}};
    doc["n"] = c1.length();
    doc["k1"] = c1.dimension();
    doc["k2"] = c2.dimension();
    doc["e_in_c1"] = r.e_in_c1;
    doc["e_in_c2_dual"] = r.e_in_c2_dual;
    doc["css_compatible"] = r.css_compatible;
    doc["failures"] = r.failures;
    if (c1.dimension() <= 10) {
        doc["c1_words"] = words_json(c1.enumerate_codewords());
        doc["c2_words"] = words_json(c2.enumerate_codewords());
    }
    doc["verdict"] = r.css_compatible ? "compatible" : "incompatible";
    return {r.css_compatible ? kExitOk : kExitFailed, doc};
}

Outcome check_triortho(const std::string& path) {
    BitMatrix g = BitMatrix::parse(read_file(path));
    TriorthogonalityReport r = triorthogonality_check(g);
    json doc{{"command", "check triortho"}, {"rows", g.rows()}, {"cols", g.cols()}};
    doc["pairwise_ok"] = r.pairwise_ok;
    doc["triple_ok"] = r.triple_ok;
    doc["odd_rows"] = r.odd_rows;
    doc["even_rows"] = r.even_rows;
    doc["pair_overlaps"] = r.pair_overlaps;
    json triples = json::array();
    for (const auto& t : r.triple_overlaps) {
        triples.push_back(json{{"rows", {t.i, t.j, t.k}}, {"overlap", t.overlap}});
    }
    doc["triple_overlaps"] = triples;
    doc["violating_index_sets"] = r.violating_index_sets;
    bool ok = r.pairwise_ok && r.triple_ok;
    doc["verdict"] = ok ? "triorthogonal" : "not triorthogonal";
    return {ok ? kExitOk : kExitFailed, doc};
}

Outcome check_diagonal(const std::string& spec, const std::string& gate) {
    StabilizerCode c = load_code(spec);
    if (c.k != 1) {
        throw InputError("code '" + c.name + "' has k = " + std::to_string(c.k) + "; diagonal checks need k = 1");
    }
    Amplitude phase;
    if (gate == "T") {
        phase = std::polar(1.0, std::numbers::pi / 4);
    } else if (gate == "Td") {
        phase = std::polar(1.0, -std::numbers::pi / 4);
    } else if (gate == "Sd") {
        phase = Amplitude(0, -1);
    } else {
        throw InputError("--gate '" + gate + "' must be T, Td or Sd");
    }
    CodeSpace space = logical_codewords(c);
    DiagonalAction a = diagonal_gate_action(space, phase, gate);
    json doc{{"command", "check diagonal"}, {"code", c.name}, {"gate", gate}};
    doc["leakage"] = a.leakage;
    doc["intact"] = a.intact();
    json phases = json::array();
    for (const auto& p : a.logical_phases) {
        phases.push_back(complex_json(p));
    }
    doc["logical_phases"] = phases;
    if (gate == "T" && a.intact()) {
        auto corr = clifford_correction_for_t(space);
        if (corr) {
            json cj{{"logical_s_power", corr->logical_s_power}, {"logical_z_power", corr->logical_z_power}};
            cj["global_phase"] = complex_json(corr->global_phase);
            cj["realization"] = corr->realization ? json(corr->realization->label + "^⊗" + std::to_string(c.n)) : json();
            doc["correction"] = cj;
        } else {
            doc["correction"] = nullptr;
        }
    }
    return {a.intact() ? kExitOk : kExitFailed, doc};
}

Outcome run_a1_verb(const Options& opts, Rng& rng, MeasurementSource& source, CircuitRunReport& report) {
    SparseState input = random_state(2, rng);
    KeyRegister keys = random_keys(2, rng);
    report = run_a1(input, keys, source);
    json doc{{"command", "run a1"}, {"seed", opts.seed}, {"circuit", format_circuit(report.circuit)}};
    doc["input"] = state_json(report.input);
    doc["initial_keys"] = register_json(report.initial_keys);
    json events = json::array();
    json measurements = json::array();
    for (const auto& e : report.transcript.events) {
        events.push_back(describe(e));
        if (const auto* m = std::get_if<MeasurementEvent>(&e)) {
            measurements.push_back(measurement_json(*m));
        }
    }
    doc["transcript"] = events;
    doc["measurements"] = measurements;
    json trace = json::array();
    for (const auto& step : symbolic_key_trace(report.circuit, 2)) {
        trace.push_back(json{
            {"action", step.action}, {"qubit", step.qubit}, {"rotation", step.rotation}, {"a", step.a}, {"b", step.b}});
    }
    doc["symbolic_trace"] = trace;
    doc["final_keys"] = register_json(report.final_keys);
    doc["output"] = state_json(report.output);
    doc["peak_qubits"] = report.peak_qubits;
    doc["peak_terms"] = report.peak_terms;
    doc["fidelity"] = report.fidelity;
    doc["passed"] = passes(report.fidelity);
    return {passes(report.fidelity) ? kExitOk : kExitFailed, doc};
}

Outcome run_storage_verb(
    const Options& opts,
    Rng& rng,
    const std::string& spec,
    const std::string& keys_text,
    const std::string& amps_text,
    const std::string& error_text,
    StorageReport& report) {
    StabilizerCode c = load_code(spec);
    if (c.k != 1) {
        throw InputError("code '" + c.name + "' has k = " + std::to_string(c.k) + "; storage runs need k = 1");
    }
    auto amps = parse_amps(amps_text).value_or(random_amplitudes(rng));
    KeyPair keys = parse_keys(keys_text).value_or(random_keys(1, rng)[0]);
    std::optional<PauliOperator> error;
    if (error_text != "none") {
        error = parse_pauli(error_text);
        if (error->num_qubits() != c.n) {
            throw InputError("--error '" + error_text + "' acts on " + std::to_string(error->num_qubits()) +
                             " qubits but code '" + c.name + "' has " + std::to_string(c.n));
        }
    }
    json doc{{"command", "run storage"}, {"seed", opts.seed}, {"code", c.name}};
    try {
        report = run_storage_protocol(c, amps, keys, error);
    } catch (const IncompatibleCode& e) {
        doc["amplitudes"] = amps_json(amps);
        doc["keys"] = key_json(keys);
        doc["compatible"] = false;
        doc["reason"] = e.what();
        doc["passed"] = false;
        return {kExitFailed, doc};
    }
    doc["amplitudes"] = amps_json(report.amplitudes);
    doc["keys"] = key_json(report.keys);
    doc["compatible"] = true;
    doc["encrypted_code_weight"] = report.encrypted_code_weight;
    doc["encrypted_amplitudes"] = amps_json(report.encrypted_amplitudes);
    doc["error"] = report.error;
    doc["syndrome"] = report.syndrome.str();
    doc["correction"] = report.correction ? json(*report.correction) : json();
    doc["fidelity"] = report.fidelity;
    doc["passed"] = passes(report.fidelity);
    return {passes(report.fidelity) ? kExitOk : kExitFailed, doc};
}

Outcome run_transversal_verb(
    const Options& opts,
    Rng& rng,
    MeasurementSource& source,
    const std::string& keys_text,
    const std::string& amps_text,
    TransversalTReport& report) {
    auto amps = parse_amps(amps_text).value_or(random_amplitudes(rng));
    KeyPair keys = parse_keys(keys_text).value_or(random_keys(1, rng)[0]);
    report = run_transversal_t_protocol(amps, keys, source);
    json doc{{"command", "run transversal-t"}, {"seed", opts.seed}, {"code", "rm15"}};
    doc["amplitudes"] = amps_json(report.amplitudes);
    doc["keys"] = key_json(report.keys);
    json outcomes = json::array();
    for (const auto& o : report.outcomes) {
        outcomes.push_back(std::string(1, o[0] ? '1' : '0') + (o[1] ? '1' : '0'));
    }
    doc["outcomes"] = outcomes;
    doc["correction"] = report.correction;
    doc["final_keys"] = register_json(report.final_keys);
    doc["data_qubits"] = report.data_qubits;
    doc["pairs_consumed"] = report.pairs_consumed;
    doc["peak_qubits"] = report.peak_qubits;
    doc["peak_terms"] = report.peak_terms;
    doc["code_weight"] = report.code_weight;
    doc["fidelity"] = report.fidelity;
    doc["passed"] = passes(report.fidelity);
    return {passes(report.fidelity) ? kExitOk : kExitFailed, doc};
}

Outcome run_logical_verb(
    const Options& opts,
    Rng& rng,
    MeasurementSource& source,
    const std::string& keys_text,
    const std::string& amps_text,
    LogicalTReport& report) {
    auto amps = parse_amps(amps_text).value_or(random_amplitudes(rng));
    KeyPair keys = parse_keys(keys_text).value_or(random_keys(1, rng)[0]);
    report = run_logical_t_protocol(amps, keys, source);
    json doc{{"command", "run logical-t"}, {"seed", opts.seed}, {"code", "shor"}};
    doc["amplitudes"] = amps_json(report.amplitudes);
    doc["keys"] = key_json(report.keys);
    doc["r_a"] = report.r_a ? 1 : 0;
    doc["r_b"] = report.r_b ? 1 : 0;
    doc["forced"] = report.forced;
    doc["probabilities"] = report.probabilities;
    doc["final_keys"] = key_json(report.final_keys);
    doc["register_qubits"] = report.register_qubits;
    doc["logical_bell_terms"] = report.logical_bell_terms;
    doc["peak_terms"] = report.peak_terms;
    doc["fidelity"] = report.fidelity;
    doc["passed"] = passes(report.fidelity);
    return {passes(report.fidelity) ? kExitOk : kExitFailed, doc};
}

Outcome report_resources(long long n) {
    if (n < 1) {
        throw InputError("--n " + std::to_string(n) + " must be at least 1");
    }
    ResourceReport r = resource_report(static_cast<std::size_t>(n));
    json doc{{"command", "report resources"}, {"n", n}};
    doc["q_data"] = r.q_data;
    doc["q_bell"] = 2;
    doc["physical"] = json{{"bell_pairs", n}, {"q_aux", r.q_aux_phys}, {"q_tot", r.q_tot_phys}};
    doc["logical"] = json{{"bell_pairs", 1}, {"q_aux", r.q_aux_log}, {"q_tot", r.q_tot_log}};
    return {kExitOk, doc};
}

void flatten(const json& node, const std::string& path, std::string& out) {
    if (node.is_object() && !node.empty()) {
        for (const auto& [key, value] : node.items()) {
            flatten(value, path.empty() ? key : path + "." + key, out);
        }
        return;
    }
    if (node.is_array() && !node.empty()) {
        for (std::size_t i = 0; i < node.size(); ++i) {
            flatten(node[i], path + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out += path;
    out += ": ";
    out += node.is_string() ? node.get<std::string>() : node.dump();
    out += '\n';
}

std::string render(const json& doc, bool as_json) {
    return as_json ? doc.dump(2) + "\n" : render_human(doc);
}

std::string error_text(const std::string& message, bool as_json) {
    if (as_json) {
        return json{{"error", message}}.dump(2) + "\n";
    }
    return "error: " + message + "\n";
}

}  // namespace

std::string render_human(const json& doc) {
    std::string out;
    flatten(doc, "", out);
    return out;
}

CommandResult run_command(const std::vector<std::string>& argv) {
    Options opts;
    bool wants_json = std::find(argv.begin(), argv.end(), "--json") != argv.end();

    CLI::App app{"Homomorphic quantum error correction checks and protocol runs", "hqec"};
    app.require_subcommand(1);
    app.add_flag("--json", opts.json, "Emit one JSON document");
    app.add_option("--seed", opts.seed, "Seed for random inputs, keys and measurements");
    app.add_option("--dump-state", opts.dump_state, "Write the final state as 'bitstring re im' lines");
    app.add_option("--force-outcomes", opts.force_outcomes, "Bell outcomes as r_a r_b bit pairs, in order");

    std::string file;
    std::string code;
    std::string c1;
    std::string c2;
    std::string matrix;
    std::string gate;
    std::string keys;
    std::string amps;
    std::string error = "none";
    long long n = 0;

    auto* codes = app.add_subcommand("codes", "Builtin codes and code files");
    codes->require_subcommand(1);
    auto* codes_list_cmd = codes->add_subcommand("list", "List builtin codes");
    auto* codes_validate_cmd = codes->add_subcommand("validate", "Validate a code file");
    codes_validate_cmd->add_option("file", file, "Code file")->required();

    auto* check = app.add_subcommand("check", "Compatibility checks");
    check->require_subcommand(1);
    auto* theorem1 = check->add_subcommand("theorem1", "Transversal Pauli mask compatibility");
    theorem1->add_option("--code", code, "Builtin name or code file")->required();
    auto* css = check->add_subcommand("css", "CSS criterion from a classical pair");
    css->add_option("--c1", c1, "C1 generator matrix file")->required();
    css->add_option("--c2", c2, "C2 generator matrix file")->required();
    auto* triortho = check->add_subcommand("triortho", "Triorthogonality of a matrix");
    triortho->add_option("--matrix", matrix, "Matrix file")->required();
    auto* diagonal = check->add_subcommand("diagonal", "Logical action of a transversal diagonal gate");
    diagonal->add_option("--code", code, "Builtin name or code file")->required();
    diagonal->add_option("--gate", gate, "T, Td or Sd")->required();

    auto* run = app.add_subcommand("run", "Protocol runs");
    run->require_subcommand(1);
    auto* run_a1_cmd = run->add_subcommand("a1", "Two-qubit circuit H1 T1 Td2 S2");
    auto* storage = run->add_subcommand("storage", "Encrypted storage with error correction");
    storage->add_option("--code", code, "Builtin name or code file")->required();
    storage->add_option("--keys", keys, "a,b");
    storage->add_option("--amps", amps, "re,im,re,im");
    storage->add_option("--error", error, "Pauli string or none");
    auto* transversal = run->add_subcommand("transversal-t", "Transversal T on the 15-qubit code");
    transversal->add_option("--keys", keys, "a,b");
    transversal->add_option("--amps", amps, "re,im,re,im");
    auto* logical = run->add_subcommand("logical-t", "Logical T on the Shor code");
    logical->add_option("--keys", keys, "a,b");
    logical->add_option("--amps", amps, "re,im,re,im");

    auto* report = app.add_subcommand("report", "Resource reports");
    report->require_subcommand(1);
    auto* resources = report->add_subcommand("resources", "Qubit counts for n-qubit blocks");
    resources->add_option("--n", n, "Block size")->required();

    for (auto* sub : {codes, check, run, report}) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({})) {
            leaf->fallthrough();
        }
    }

    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        if (a.starts_with("-")) {
            bool takes_value = a == "--seed" || a == "--dump-state" || a == "--force-outcomes";
            i += takes_value && a.find('=') == std::string::npos;
            continue;
        }
        static const std::map<std::string, std::vector<std::string>> kVerbs{
            {"codes", {"list", "validate"}},
            {"check", {"theorem1", "css", "triortho", "diagonal"}},
            {"run", {"a1", "storage", "transversal-t", "logical-t"}},
            {"report", {"resources"}}};
        auto verb = kVerbs.find(a);
        if (verb == kVerbs.end()) {
            return {kExitUsage, error_text("unknown verb '" + a + "'", wants_json)};
        }
        if (i + 1 < argv.size() && !argv[i + 1].starts_with("-") &&
            std::find(verb->second.begin(), verb->second.end(), argv[i + 1]) == verb->second.end()) {
            return {kExitUsage, error_text("unknown command '" + a + " " + argv[i + 1] + "'", wants_json)};
        }
        break;
    }

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kExitOk, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return {kExitOk, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        if (msg.empty()) {
            msg = e.get_name();
        }
        return {kExitUsage, error_text(msg, wants_json)};
    }

    CommandResult result;
    try {
        Rng rng(opts.seed);
        std::deque<std::size_t> forced = parse_outcomes(opts.force_outcomes);
        MeasurementSource source(forced, &rng);
        bool measures = run_a1_cmd->parsed() || transversal->parsed() || logical->parsed();
        if (!forced.empty() && !measures) {
            throw InputError("--force-outcomes applies only to runs with Bell measurements");
        }
        bool has_state = measures || storage->parsed();
        if (!opts.dump_state.empty() && !has_state) {
            throw InputError("--dump-state applies only to protocol runs");
        }

        Outcome outcome;
        CircuitRunReport a1_report;
        StorageReport storage_report;
        TransversalTReport transversal_report;
        LogicalTReport logical_report;
        if (codes_list_cmd->parsed()) {
            outcome = codes_list();
        } else if (codes_validate_cmd->parsed()) {
            outcome = codes_validate(file);
        } else if (theorem1->parsed()) {
            outcome = check_theorem1(code);
        } else if (css->parsed()) {
            outcome = check_css(c1, c2);
        } else if (triortho->parsed()) {
            outcome = check_triortho(matrix);
        } else if (diagonal->parsed()) {
            outcome = check_diagonal(code, gate);
        } else if (run_a1_cmd->parsed()) {
            outcome = run_a1_verb(opts, rng, source, a1_report);
            outcome.state = &a1_report.output;
        } else if (storage->parsed()) {
            outcome = run_storage_verb(opts, rng, code, keys, amps, error, storage_report);
            outcome.state = &storage_report.output;
        } else if (transversal->parsed()) {
            outcome = run_transversal_verb(opts, rng, source, keys, amps, transversal_report);
            outcome.state = &transversal_report.output;
        } else if (logical->parsed()) {
            outcome = run_logical_verb(opts, rng, source, keys, amps, logical_report);
            outcome.state = &logical_report.output;
        } else if (resources->parsed()) {
            outcome = report_resources(n);
        }
        if (source.forced_remaining() > 0) {
            throw InputError(
                "--force-outcomes lists " + std::to_string(source.forced_remaining()) + " more outcomes than the run used");
        }
        if (!opts.dump_state.empty() && outcome.state != nullptr) {
            std::ofstream out(opts.dump_state);
            if (!out) {
                throw InputError("cannot write '" + opts.dump_state + "'");
            }
            out << outcome.state->dump();
        }
        result.exit_code = outcome.exit_code;
        result.output = render(outcome.doc, opts.json);
    } catch (const InputError& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    } catch (const ParseError& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    } catch (const std::invalid_argument& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    } catch (const std::out_of_range& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    } catch (const std::length_error& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    } catch (const std::runtime_error& e) {
        return {kExitUsage, error_text(e.what(), opts.json)};
    }
    return result;
}

}  // namespace hqec_cli
