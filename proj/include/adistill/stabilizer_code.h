// Copyright 2026 The adistill Authors
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

#ifndef ADISTILL_STABILIZER_CODE_H
#define ADISTILL_STABILIZER_CODE_H

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "adistill/pauli_string.h"

namespace adistill {

/// An [[n,k,d]] stabilizer code: n-k stabilizer generators plus k logical
/// X/Z pairs. All generators carry + phase. `d` is stored metadata.
struct StabilizerCode {
    std::string name;
    size_t n = 0;
    size_t k = 0;
    size_t d = 0;
    std::vector<PauliString> stabilizers;
    std::vector<PauliString> logical_x;
    std::vector<PauliString> logical_z;
};

/// The codes shipped with the library: "913", "923", "933", "513", "713".
std::vector<std::string> builtin_code_names();

/// Throws std::out_of_range for unknown names.
StabilizerCode builtin_code(std::string_view name);

struct ValidationCheck {
    std::string name;
    bool passed = true;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;

    bool ok() const;
    std::string summary() const;
};

/// Checks operator sizes and counts, generator independence (symplectic rank
/// n-k), mutual commutation, and the logical commutation pattern. When
/// `verify_distance` is set and n <= 9, additionally confirms that no
/// nontrivial logical operator has weight < d.
ValidationReport validate_code(const StabilizerCode &code, bool verify_distance = false);

/// Rank over GF(2) of the rows' (x|z) vectors.
size_t symplectic_rank(const std::vector<PauliString> &rows);

/// Code file format:
///
///     name=913
///     n=9
///     k=1
///     d=3
///     H:
///     YIZIIIIXY
///     ...
///     X:
///     ZIIIIIIXX
///     Z:
///     ZZIIIIIIZ
///
/// Blank lines and lines starting with '#' are ignored. Throws
/// std::invalid_argument with the offending line number on malformed input.
StabilizerCode parse_code_text(std::string_view text);
StabilizerCode load_code_file(const std::filesystem::path &path);
std::string format_code_text(const StabilizerCode &code);

}  // namespace adistill

#endif
