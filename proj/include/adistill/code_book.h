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

#ifndef ADISTILL_CODE_BOOK_H
#define ADISTILL_CODE_BOOK_H

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "adistill/lookup_table_decoder.h"
#include "adistill/stabilizer_code.h"

namespace adistill {

/// Codes addressable by name, each with its decoder and exact F_in -> F_out
/// polynomial built eagerly on insertion. Immutable once shared.
class CodeBook {
   public:
    struct Entry {
        StabilizerCode code;
        LookupTable table;
        LogicalFidelityPolynomial polynomial;
    };

    /// Every builtin code. Built once on first use.
    static const CodeBook &builtin();

    /// Validates, builds the lookup table and the polynomial. Replaces an
    /// existing entry with the same name.
    void add(const StabilizerCode &code);

    bool contains(std::string_view name) const;
    /// Throws std::out_of_range for unknown names.
    const Entry &at(std::string_view name) const;
    const StabilizerCode &code(std::string_view name) const { return at(name).code; }
    const LogicalFidelityPolynomial &polynomial(std::string_view name) const { return at(name).polynomial; }
    std::vector<std::string> names() const;

   private:
    std::map<std::string, std::shared_ptr<const Entry>, std::less<>> entries_;
};

}  // namespace adistill

#endif
