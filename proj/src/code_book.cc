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

#include "adistill/code_book.h"

#include <stdexcept>

namespace adistill {

const CodeBook &CodeBook::builtin() {
    static const CodeBook book = [] {
        CodeBook b;
        for (const auto &name : builtin_code_names()) {
            b.add(builtin_code(name));
        }
        return b;
    }();
    return book;
}

void CodeBook::add(const StabilizerCode &code) {
    LookupTable table = LookupTable::build(code);
    LogicalFidelityPolynomial poly = logical_fidelity_polynomial(table);
    entries_[code.name] = std::make_shared<const Entry>(Entry{code, std::move(table), std::move(poly)});
}

bool CodeBook::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

const CodeBook::Entry &CodeBook::at(std::string_view name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) {
        throw std::out_of_range("Unknown code '" + std::string(name) + "'");
    }
    return *it->second;
}

std::vector<std::string> CodeBook::names() const {
    std::vector<std::string> out;
    for (const auto &[name, entry] : entries_) {
        out.push_back(name);
    }
    return out;
}

}  // namespace adistill
