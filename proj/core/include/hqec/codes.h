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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hqec/bitvec.h"
#include "hqec/f2.h"
#include "hqec/pauli.h"
#include "hqec/sparse.h"

namespace hqec {

/// The classical pair a CSS code was built from (C2 ⊂ C1).
struct CssOrigin {
    ClassicalCode c1;
    ClassicalCode c2;
};

/// An [[n,k]] stabilizer code: generators plus logical representatives.
struct StabilizerCode {
    std::string name;
    std::size_t n = 0;
    std::size_t k = 0;
    std::vector<PauliOperator> generators;
    std::vector<PauliOperator> logical_x;
    std::vector<PauliOperator> logical_z;
    std::optional<CssOrigin> css_origin;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const {
        return violations.empty();
    }
};

/// Lists every violated invariant: qubit counts, Hermiticity, commutation,
/// independence, -I membership and the logical algebra.
ValidationReport validate_code(const StabilizerCode& code);

/// bit_flip, phase_flip, shor, steane, rm15, synthetic_incompatible.
std::vector<std::string> builtin_code_names();
/// Throws std::invalid_argument for an unknown name.
StabilizerCode builtin_code(std::string_view name);

/// Code file: header "n k", then n-k generators, k logical X and k logical Z
/// Pauli strings, one per line. '#' starts a comment.
StabilizerCode parse_code(std::string_view text, std::string name);
std::string format_code(const StabilizerCode& code);

/// True iff `p` equals a product of generators up to phase.
bool in_stabilizer_group_up_to_phase(const StabilizerCode& code, const PauliOperator& p);

/// Z-type generators from C1⊥ and X-type generators from C2. Logical
/// operators are paired so that X̄_j and Z̄_l anticommute iff j = l.
/// Throws std::invalid_argument unless C2 ⊂ C1 with k1 > k2.
StabilizerCode css_from_classical(const ClassicalCode& c1, const ClassicalCode& c2, std::string name = "css");

/// Logical basis |0̄⟩, |1̄⟩ of a k = 1 code.
struct CodeSpace {
    StabilizerCode code;
    std::vector<SparseState> basis;
};

/// Builds |0̄⟩ and |1̄⟩ = X̄|0̄⟩. CSS codes use the C2 coset state; other codes
/// project a seed basis state with (I+Z̄)/2 and each (I+g)/2. The global
/// phase of |0̄⟩ makes its first nonzero amplitude real and positive.
CodeSpace logical_codewords(const StabilizerCode& code);

/// Bit i is set iff `error` anticommutes with generator i.
BitVec syndrome(const StabilizerCode& code, const PauliOperator& error);

/// Lookup table over the identity and every weight-1 Pauli. Ties keep the
/// first entry in the order (qubit index, X < Y < Z).
class SingleErrorDecoder {
   public:
    explicit SingleErrorDecoder(const StabilizerCode& code);
    std::optional<PauliOperator> decode(const BitVec& syndrome) const;
    std::size_t table_size() const {
        return table_.size();
    }

   private:
    std::size_t num_generators_ = 0;
    std::map<BitVec, PauliOperator> table_;
};

std::optional<PauliOperator> decode_single_error(const StabilizerCode& code, const BitVec& syndrome);

}  // namespace hqec
