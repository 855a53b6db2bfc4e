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

#include "adistill/stabilizer_code.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "gtest/gtest.h"

using namespace adistill;

namespace {

bool check_passed(const ValidationReport &report, const std::string &name) {
    for (const auto &c : report.checks) {
        if (c.name == name) {
            return c.passed;
        }
    }
    ADD_FAILURE() << "no check named " << name;
    return false;
}

StabilizerCode two_qubit_code(std::vector<std::string> stabilizers) {
    StabilizerCode code{"toy", 2, 0, 1, {}, {}, {}};
    for (const auto &s : stabilizers) {
        code.stabilizers.push_back(PauliString::from_str(s));
    }
    code.k = 2 - stabilizers.size();
    return code;
}

}  // namespace

TEST(stabilizer_code, builtin_rows) {
    StabilizerCode c913 = builtin_code("913");
    EXPECT_EQ(c913.stabilizers[0].letters(), "YIZIIIIXY");
    StabilizerCode c933 = builtin_code("933");
    EXPECT_EQ(c933.k, 3u);
    ASSERT_EQ(c933.stabilizers.size(), 6u);
    EXPECT_EQ(c933.stabilizers[5].letters(), "ZZZZIZZZZ");
    EXPECT_THROW(builtin_code("999"), std::out_of_range);
}

TEST(stabilizer_code, builtins_validate_with_distance) {
    for (const auto &name : builtin_code_names()) {
        StabilizerCode code = builtin_code(name);
        ValidationReport report = validate_code(code, true);
        EXPECT_TRUE(report.ok()) << name << "\n" << report.summary();
        EXPECT_EQ(code.stabilizers.size(), code.n - code.k);
        EXPECT_EQ(code.logical_x.size(), code.k);
        EXPECT_EQ(code.logical_z.size(), code.k);
        EXPECT_EQ(symplectic_rank(code.stabilizers), code.n - code.k);
        for (const auto &s : code.stabilizers) {
            EXPECT_EQ(s.log_i(), 0) << "generators are stored with + phase";
        }
    }
}

TEST(stabilizer_code, anticommuting_generators_fail) {
    ValidationReport report = validate_code(two_qubit_code({"XI", "ZI"}));
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(check_passed(report, "stabilizers commute"));
}

TEST(stabilizer_code, duplicate_generators_fail_independence) {
    ValidationReport report = validate_code(two_qubit_code({"ZZ", "ZZ"}));
    EXPECT_FALSE(report.ok());
    EXPECT_FALSE(check_passed(report, "independence"));
}

TEST(stabilizer_code, wrong_distance_is_caught) {
    StabilizerCode code = builtin_code("913");
    code.d = 4;
    EXPECT_TRUE(validate_code(code, false).ok());
    EXPECT_FALSE(check_passed(validate_code(code, true), "distance"));
}

TEST(stabilizer_code, broken_logical_pattern_fails) {
    StabilizerCode code = builtin_code("923");
    std::swap(code.logical_z[0], code.logical_z[1]);
    EXPECT_FALSE(check_passed(validate_code(code), "logical commutation pattern"));
}

TEST(stabilizer_code, text_round_trip) {
    for (const auto &name : builtin_code_names()) {
        StabilizerCode code = builtin_code(name);
        StabilizerCode parsed = parse_code_text(format_code_text(code));
        EXPECT_EQ(parsed.name, code.name);
        EXPECT_EQ(parsed.n, code.n);
        EXPECT_EQ(parsed.k, code.k);
        EXPECT_EQ(parsed.d, code.d);
        EXPECT_EQ(parsed.stabilizers, code.stabilizers);
        EXPECT_EQ(parsed.logical_x, code.logical_x);
        EXPECT_EQ(parsed.logical_z, code.logical_z);
    }
}

TEST(stabilizer_code, parse_comments_and_errors) {
    StabilizerCode code = parse_code_text(
        "# bit-flip code\nname=rep3\nn=3\nk=1\nd=1\n\nH:\nZZI\nIZZ\nX:\nXXX\nZ:\nZII\n");
    EXPECT_EQ(code.name, "rep3");
    EXPECT_TRUE(validate_code(code).ok());
    EXPECT_THROW(parse_code_text("name=a\nn=3\nk=1\nd=1\nH:\nZQI\n"), std::invalid_argument);
    EXPECT_THROW(parse_code_text("bogus\n"), std::invalid_argument);
    try {
        parse_code_text("name=a\nn=3\nk=1\nd=1\nH:\nZZ\n");
        FAIL() << "expected a size error";
    } catch (const std::invalid_argument &e) {
        EXPECT_NE(std::string(e.what()).find("line 6"), std::string::npos) << e.what();
    }
}

TEST(stabilizer_code, load_file) {
    auto path = std::filesystem::temp_directory_path() / "adistill_code_test.txt";
    {
        std::ofstream out(path);
        out << format_code_text(builtin_code("513"));
    }
    StabilizerCode code = load_code_file(path);
    std::filesystem::remove(path);
    EXPECT_EQ(code.name, "513");
    EXPECT_TRUE(validate_code(code, true).ok());
    EXPECT_THROW(load_code_file(path), std::runtime_error);
}
