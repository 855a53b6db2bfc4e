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

#ifndef ADISTILL_CLI_H
#define ADISTILL_CLI_H

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adistill/code_book.h"
#include "adistill/grid.h"
#include "adistill/purification.h"
#include "adistill/repeater_chain.h"

namespace adistill::cli {

/// Overrides the point count of every default grid.
inline constexpr const char *kGridPointsEnv = "ADISTILL_GRID_POINTS";
/// Directory that `repro` writes into when --dir is not given.
inline constexpr const char *kOutputDirEnv = "ADISTILL_OUTPUT_DIR";

/// An empty cell is written as an empty CSV field and a JSON null.
using Cell = std::variant<std::monostate, long long, double, std::string>;

struct Table {
    std::string name;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    /// Throws std::invalid_argument when the row width is wrong.
    void add_row(std::vector<Cell> row);
};

enum class Format { kCsv, kJson };

/// Accepts "csv" or "json". Throws std::invalid_argument.
Format parse_format(std::string_view text);

/// Full precision, "%.17g".
std::string format_double(double value);
std::string to_csv(const Table &table);
/// {"<table name>": [{"<column>": value, ...}, ...], ...}
std::string to_json(const std::vector<Table> &tables);

/// Writes through a temporary file in the same directory and renames it into
/// place, so readers never see a partial file. Throws std::runtime_error.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

/// Paths used for `tables` written to `out`: JSON always uses `out`; CSV
/// uses `out` for the first table and `<stem>_<name><ext>` for the rest.
std::vector<std::filesystem::path> output_paths(const std::vector<Table> &tables, const std::filesystem::path &out,
                                                Format format);

/// Writes every table to `out` (see output_paths), or to `stream` when `out`
/// is empty. CSV on a stream separates tables with "# <name>" lines when
/// there is more than one.
std::vector<std::filesystem::path> emit(const std::vector<Table> &tables, const std::optional<std::filesystem::path> &out,
                                        Format format, std::ostream &stream);

/// Default grid, with the point count replaced by $ADISTILL_GRID_POINTS when
/// that is set. Throws std::invalid_argument for a malformed value.
GridSpec default_grid(double min, double max, size_t points);

/// Parses "a,b,c,d". Throws std::invalid_argument.
std::array<double, 4> parse_quadruple(std::string_view text);

// ---- Command bodies. Each returns the tables the subcommand prints. ----

std::vector<Table> codes_list(const CodeBook &codes);
std::vector<Table> codes_validate(const std::vector<StabilizerCode> &codes, bool verify_distance);

/// Columns: f_in, f_out.
std::vector<Table> map_qec(const CodeBook &codes, std::string_view code, const GridSpec &grid, int jobs);
/// Columns: f_in, f_out, rate.
std::vector<Table> map_chain(const CodeBook &codes, const ChainPlan &plan, const GridSpec &grid, int jobs);

struct EfficiencyOptions {
    int repeaters = 1;
    /// P1..P4, or explicit "c1-c2-c3" code triples.
    std::vector<std::string> protocols = {"P1", "P2", "P3", "P4"};
    GridSpec grid;
    bool envelope = false;
    bool switchpoints = false;
    int jobs = 1;
};
/// Tables: curves (protocol, f_in, f_out, d_out, rate, efficiency), and
/// optionally envelope (f_in, protocol, f_out, d_out, rate, efficiency) and
/// switchpoints (repeaters, from, to, f_sw).
std::vector<Table> efficiency_tables(const CodeBook &codes, const EfficiencyOptions &options);

struct PurifyOptions {
    PurificationProtocol protocol = PurificationProtocol::kDejmps;
    bool twirl = false;
    int rounds = 1;
    GridSpec grid;
    /// When set, replaces the grid with this single (I, X, Y, Z) start.
    std::optional<std::array<double, 4>> input_dist;
    int jobs = 1;
};
/// Columns: f_in, round, p_i, p_x, p_y, p_z, p_discard, p_total_discard,
/// rate. Round 0 is the input.
std::vector<Table> purify_tables(const PurifyOptions &options);

struct HybridOptions {
    std::string code = "933";
    GridSpec grid;
    double baseline_entanglement = 0.12;
    int max_rounds = 40;
    int jobs = 1;
};
/// Tables: scan (f_in, i_pre, i_match, f_out_dejmps, f_out_hybrid,
/// rate_dejmps, rate_hybrid, e_dejmps, e_hybrid, winner, d_dejmps,
/// d_hybrid), checkpoints (f_in, i_pre, i_match) and summary.
std::vector<Table> hybrid_tables(const CodeBook &codes, const HybridOptions &options);

/// Tables: trace (n, a, b, c, d, u, r, q) and checks (check, passed, detail).
std::vector<Table> converge_tables(PurificationProtocol protocol, const std::array<double, 4> &start, int n_max);

struct ReproResult {
    std::filesystem::path directory;
    std::vector<std::filesystem::path> files;
};
/// Writes every reproduction table into a new timestamped directory under
/// `root`, plus manifest.json listing the files and the commands behind
/// them.
ReproResult run_repro(const std::filesystem::path &root, int jobs, Format format);

/// Full command-line entry point. Returns the process exit status.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace adistill::cli

#endif
