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

#include "adistill/cli.h"

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "adistill/convergence.h"
#include "adistill/efficiency.h"
#include "adistill/hybrid.h"
#include "adistill/parallel.h"
#include "adistill/werner.h"
#include <nlohmann/json.hpp>

namespace adistill::cli {

namespace fs = std::filesystem;

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("table '" + name + "' expects " + std::to_string(columns.size()) +
                                    " cells per row, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
}

Format parse_format(std::string_view text) {
    if (text == "csv") {
        return Format::kCsv;
    }
    if (text == "json") {
        return Format::kJson;
    }
    throw std::invalid_argument("unknown output format '" + std::string(text) + "' (expected csv or json)");
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

namespace {

std::string csv_field(const Cell &cell) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_double(v); }
        std::string operator()(const std::string &s) const {
            if (s.find_first_of(",\"\n\r") == std::string::npos) {
                return s;
            }
            std::string quoted = "\"";
            for (char ch : s) {
                quoted += ch;
                if (ch == '"') {
                    quoted += '"';
                }
            }
            return quoted + "\"";
        }
    };
    return std::visit(Visitor{}, cell);
}

nlohmann::ordered_json json_value(const Cell &cell) {
    struct Visitor {
        nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
        nlohmann::ordered_json operator()(long long v) const { return v; }
        nlohmann::ordered_json operator()(double v) const {
            return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(format_double(v));
        }
        nlohmann::ordered_json operator()(const std::string &s) const { return s; }
    };
    return std::visit(Visitor{}, cell);
}

Cell optional_cell(const std::optional<int> &v) {
    return v ? Cell(static_cast<long long>(*v)) : Cell(std::monostate{});
}

Cell optional_cell(const std::optional<double> &v) { return v ? Cell(*v) : Cell(std::monostate{}); }

}  // namespace

std::string to_csv(const Table &table) {
    std::string out;
    for (size_t i = 0; i < table.columns.size(); i++) {
        out += (i ? "," : "") + csv_field(table.columns[i]);
    }
    out += "\n";
    for (const auto &row : table.rows) {
        for (size_t i = 0; i < row.size(); i++) {
            if (i) {
                out += ",";
            }
            out += csv_field(row[i]);
        }
        out += "\n";
    }
    return out;
}

std::string to_json(const std::vector<Table> &tables) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto &table : tables) {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto &row : table.rows) {
            nlohmann::ordered_json obj = nlohmann::ordered_json::object();
            for (size_t i = 0; i < row.size(); i++) {
                obj[table.columns[i]] = json_value(row[i]);
            }
            rows.push_back(std::move(obj));
        }
        doc[table.name] = std::move(rows);
    }
    return doc.dump(2) + "\n";
}

void write_file_atomic(const fs::path &path, std::string_view content) {
    fs::path parent = path.parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        fs::create_directories(parent, ec);
        if (ec) {
            throw std::runtime_error("cannot create directory '" + parent.string() + "': " + ec.message());
        }
    }
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
        }
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            file.close();
            fs::remove(tmp);
            throw std::runtime_error("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot move output into place at '" + path.string() + "': " + ec.message());
    }
}

std::vector<fs::path> output_paths(const std::vector<Table> &tables, const fs::path &out, Format format) {
    if (format == Format::kJson || tables.size() <= 1) {
        return {out};
    }
    std::vector<fs::path> paths{out};
    for (size_t i = 1; i < tables.size(); i++) {
        fs::path p = out.parent_path() / (out.stem().string() + "_" + tables[i].name + out.extension().string());
        paths.push_back(p);
    }
    return paths;
}

std::vector<fs::path> emit(const std::vector<Table> &tables, const std::optional<fs::path> &out, Format format,
                           std::ostream &stream) {
    if (!out) {
        if (format == Format::kJson) {
            stream << to_json(tables);
        } else if (tables.size() == 1) {
            stream << to_csv(tables[0]);
        } else {
            for (size_t i = 0; i < tables.size(); i++) {
                stream << (i ? "\n" : "") << "# " << tables[i].name << "\n" << to_csv(tables[i]);
            }
        }
        stream.flush();
        return {};
    }
    std::vector<fs::path> paths = output_paths(tables, *out, format);
    if (format == Format::kJson) {
        write_file_atomic(paths[0], to_json(tables));
    } else {
        for (size_t i = 0; i < tables.size(); i++) {
            write_file_atomic(paths[i], to_csv(tables[i]));
        }
    }
    return paths;
}

GridSpec default_grid(double min, double max, size_t points) {
    if (const char *env = std::getenv(kGridPointsEnv); env != nullptr && *env != '\0') {
        std::string text(env);
        size_t used = 0;
        unsigned long long value = 0;
        try {
            value = std::stoull(text, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != text.size() || value < 2) {
            throw std::invalid_argument(std::string(kGridPointsEnv) + " must be an integer >= 2, got '" + text + "'");
        }
        points = static_cast<size_t>(value);
    }
    return GridSpec{min, max, points};
}

std::array<double, 4> parse_quadruple(std::string_view text) {
    std::array<double, 4> out{};
    std::string s(text);
    std::stringstream in(s);
    std::string field;
    size_t count = 0;
    while (std::getline(in, field, ',')) {
        if (count == 4) {
            count++;
            break;
        }
        size_t used = 0;
        try {
            out[count] = std::stod(field, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != field.size()) {
            throw std::invalid_argument("expected four comma-separated numbers, got '" + s + "'");
        }
        count++;
    }
    if (count != 4) {
        throw std::invalid_argument("expected four comma-separated numbers, got '" + s + "'");
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Table> codes_list(const CodeBook &codes) {
    Table table{"codes", {"name", "n", "k", "d", "rate", "pseudo_threshold", "corrected_by_weight"}, {}};
    for (const auto &name : codes.names()) {
        const auto &entry = codes.at(name);
        std::optional<double> threshold;
        try {
            threshold = pseudo_threshold(entry.polynomial);
        } catch (const std::domain_error &) {
        }
        std::string counts;
        for (size_t w = 0; w < entry.polynomial.counts.size(); w++) {
            counts += (w ? " " : "") + std::to_string(entry.polynomial.counts[w]);
        }
        table.add_row({name, static_cast<long long>(entry.code.n), static_cast<long long>(entry.code.k),
                       static_cast<long long>(entry.code.d),
                       static_cast<double>(entry.code.k) / static_cast<double>(entry.code.n), optional_cell(threshold),
                       counts});
    }
    return {table};
}

std::vector<Table> codes_validate(const std::vector<StabilizerCode> &codes, bool verify_distance) {
    Table table{"validation", {"code", "check", "passed", "detail"}, {}};
    for (const auto &code : codes) {
        ValidationReport report = validate_code(code, verify_distance);
        for (const auto &check : report.checks) {
            table.add_row({code.name, check.name, std::string(check.passed ? "true" : "false"), check.detail});
        }
    }
    return {table};
}

std::vector<Table> map_qec(const CodeBook &codes, std::string_view code, const GridSpec &grid, int jobs) {
    grid.validate();
    const auto &poly = codes.polynomial(code);
    std::vector<double> f_in = grid.values();
    std::vector<double> f_out = parallel_map(f_in, jobs, [&](double f) { return eval_qec_map(poly, f); });
    Table table{"qec_map", {"f_in", "f_out"}, {}};
    for (size_t i = 0; i < f_in.size(); i++) {
        table.add_row({f_in[i], f_out[i]});
    }
    return {table};
}

std::vector<Table> map_chain(const CodeBook &codes, const ChainPlan &plan, const GridSpec &grid, int jobs) {
    grid.validate();
    plan.validate();
    for (const auto &round : plan.rounds) {
        if (round) {
            codes.at(*round);
        }
    }
    double rate = rate_accounting(plan, codes).rate();
    std::vector<double> f_in = grid.values();
    std::vector<double> f_out = parallel_map(f_in, jobs, [&](double f) { return run_chain(plan, f, codes); });
    Table table{"chain_map", {"f_in", "f_out", "rate"}, {}};
    for (size_t i = 0; i < f_in.size(); i++) {
        table.add_row({f_in[i], f_out[i], rate});
    }
    return {table};
}

namespace {

NamedPlan resolve_protocol(const std::string &label, int repeaters) {
    if (label.find('-') == std::string::npos) {
        return standard_protocol(label, repeaters);
    }
    std::string text = label;
    for (char &ch : text) {
        if (ch == '-') {
            ch = ',';
        }
    }
    return NamedPlan{label, ChainPlan::parse("repeaters=" + std::to_string(repeaters) + "; rounds=" + text)};
}

}  // namespace

std::vector<Table> efficiency_tables(const CodeBook &codes, const EfficiencyOptions &options) {
    options.grid.validate();
    if (options.protocols.empty()) {
        throw std::invalid_argument("at least one protocol is required");
    }
    std::vector<double> grid = options.grid.values();
    std::vector<EfficiencyCurve> curves;
    for (const auto &label : options.protocols) {
        curves.push_back(efficiency_curve(resolve_protocol(label, options.repeaters), grid, codes, options.jobs));
    }
    std::vector<Table> tables;
    Table table{"curves", {"protocol", "f_in", "f_out", "d_out", "rate", "efficiency"}, {}};
    for (const auto &c : curves) {
        for (size_t i = 0; i < c.f_in.size(); i++) {
            table.add_row({c.label, c.f_in[i], c.f_out[i], distillable_entanglement(c.f_out[i]), c.rate,
                           c.efficiency[i]});
        }
    }
    tables.push_back(std::move(table));
    if (options.envelope) {
        Envelope env = optimal_envelope(curves);
        Table t{"envelope", {"f_in", "protocol", "f_out", "d_out", "rate", "efficiency"}, {}};
        for (size_t i = 0; i < env.f_in.size(); i++) {
            const auto &c = curves[env.active[i]];
            t.add_row({env.f_in[i], env.active_label[i], c.f_out[i], distillable_entanglement(c.f_out[i]), c.rate,
                       env.efficiency[i]});
        }
        tables.push_back(std::move(t));
    }
    if (options.switchpoints) {
        Table t{"switchpoints", {"repeaters", "from", "to", "f_sw"}, {}};
        for (const auto &sp : switching_points(curves)) {
            t.add_row({static_cast<long long>(options.repeaters), sp.from, sp.to, optional_cell(sp.f_sw)});
        }
        tables.push_back(std::move(t));
    }
    return tables;
}

std::vector<Table> purify_tables(const PurifyOptions &options) {
    if (options.rounds < 0) {
        throw std::invalid_argument("--rounds must be non-negative");
    }
    std::vector<PauliDistribution> starts;
    if (options.input_dist) {
        const auto &q = *options.input_dist;
        starts.push_back({q[0], q[1], q[2], q[3]});
        starts.back().validate();
    } else {
        options.grid.validate();
        for (double f : options.grid.values()) {
            starts.push_back(PauliDistribution::depolarizing(f));
        }
    }
    std::vector<PurificationTrace> traces(starts.size());
    parallel_for(starts.size(), options.jobs, [&](size_t i) {
        traces[i] = run_rounds(options.protocol, options.twirl, starts[i], options.rounds);
    });
    Table table{"purify", {"f_in", "round", "p_i", "p_x", "p_y", "p_z", "p_discard", "p_total_discard", "rate"}, {}};
    for (const auto &trace : traces) {
        const auto &s = trace.start;
        table.add_row({s.p_i, 0LL, s.p_i, s.p_x, s.p_y, s.p_z, 0.0, 0.0, 1.0});
        for (const auto &r : trace.rounds) {
            table.add_row({s.p_i, static_cast<long long>(r.round), r.dist.p_i, r.dist.p_x, r.dist.p_y, r.dist.p_z,
                           r.p_discard, r.p_total_discard, r.rate});
        }
    }
    return {table};
}

std::vector<Table> hybrid_tables(const CodeBook &codes, const HybridOptions &options) {
    const auto &poly = codes.polynomial(options.code);
    double threshold = pseudo_threshold(poly);
    HybridScanOptions scan_options{options.baseline_entanglement, options.max_rounds, options.jobs};
    std::vector<CheckpointRow> rows = checkpoint_scan(poly, threshold, options.grid, scan_options);

    Table scan{"scan",
               {"f_in", "i_pre", "i_match", "f_out_dejmps", "f_out_hybrid", "rate_dejmps", "rate_hybrid", "e_dejmps",
                "e_hybrid", "winner", "d_dejmps", "d_hybrid"},
               {}};
    std::map<long long, long long> extra_rounds;
    for (const auto &row : rows) {
        scan.add_row({row.f_in, static_cast<long long>(row.i_pre), optional_cell(row.i_match), row.f_out_dejmps,
                      row.f_out_hybrid, row.rate_dejmps, row.rate_hybrid, row.e_dejmps, row.e_hybrid, row.winner,
                      distillable_entanglement(row.f_out_dejmps), row.d_hybrid});
        if (row.i_match) {
            extra_rounds[*row.i_match - row.i_pre]++;
        }
    }
    Table marks{"checkpoints", {"f_in", "i_pre", "i_match"}, {}};
    std::vector<size_t> idx = checkpoints(rows);
    for (size_t i : idx) {
        marks.add_row({rows[i].f_in, static_cast<long long>(rows[i].i_pre), optional_cell(rows[i].i_match)});
    }
    Table summary{"summary", {"quantity", "value"}, {}};
    summary.add_row({std::string("code"), options.code});
    summary.add_row({std::string("pseudo_threshold"), threshold});
    summary.add_row({std::string("grid"), options.grid.str()});
    summary.add_row({std::string("rows"), static_cast<long long>(rows.size())});
    summary.add_row({std::string("checkpoints"), static_cast<long long>(idx.size())});
    for (const auto &[extra, count] : extra_rounds) {
        summary.add_row({"i_match_minus_i_pre=" + std::to_string(extra), count});
    }
    return {scan, marks, summary};
}

std::vector<Table> converge_tables(PurificationProtocol protocol, const std::array<double, 4> &start, int n_max) {
    ConvergenceTrace trace = iterate(protocol, start, n_max);
    Table table{"trace", {"n", "a", "b", "c", "d", "u", "r", "q"}, {}};
    for (const auto &s : trace.steps) {
        table.add_row({static_cast<long long>(s.n), s.a, s.b, s.c, s.d, s.u, s.r, s.q});
    }
    IdentityReport report = check_identities(trace);
    Table checks{"checks", {"check", "passed", "detail"}, {}};
    for (const auto &c : report.checks) {
        checks.add_row({c.name, std::string(c.passed ? "true" : "false"), c.detail});
    }
    return {table, checks};
}

// ---------------------------------------------------------------------------

namespace {

struct ReproJob {
    std::string file;
    std::string command;
    std::vector<Table> tables;
};

std::string timestamp_now() {
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

}  // namespace

ReproResult run_repro(const fs::path &root, int jobs, Format format) {
    const CodeBook &codes = CodeBook::builtin();
    GridSpec unit = default_grid(0.0, 1.0, 1001);
    GridSpec switch_grid = default_grid(kSwitchGridMin, kSwitchGridMax, kSwitchGridPoints);
    GridSpec hybrid_grid = default_grid(kHybridGridMin, kHybridGridMax, kHybridGridPoints);
    std::vector<ReproJob> work;

    work.push_back({"codes", "codes list", codes_list(codes)});
    std::vector<StabilizerCode> all;
    for (const auto &name : codes.names()) {
        all.push_back(codes.code(name));
    }
    work.push_back({"validation", "codes validate --distance", codes_validate(all, true)});
    for (const auto &name : codes.names()) {
        work.push_back({"qec_map_" + name, "map qec --code " + name + " --grid " + unit.str(),
                        map_qec(codes, name, unit, jobs)});
    }
    // Three-repeater round-selection study, plus the uncoded reference.
    const std::vector<std::pair<std::string, std::string>> patterns = {
        {"cxx", "513,skip,skip"}, {"ccx", "513,513,skip"}, {"cxc", "513,skip,513"},
        {"ccc", "513,513,513"},   {"xxx", "skip,skip,skip"}};
    for (const auto &[tag, rounds] : patterns) {
        ChainPlan plan = ChainPlan::parse("repeaters=3; rounds=" + rounds);
        work.push_back({"chain_3r_" + tag, "map chain --repeaters 3 --rounds " + rounds + " --grid " + unit.str(),
                        map_chain(codes, plan, unit, jobs)});
    }
    Table table_ii{"switchpoints", {"repeaters", "from", "to", "f_sw"}, {}};
    for (int repeaters : {0, 1, 3, 5}) {
        EfficiencyOptions opts;
        opts.repeaters = repeaters;
        opts.grid = switch_grid;
        opts.envelope = true;
        opts.switchpoints = true;
        opts.jobs = jobs;
        std::vector<Table> tables = efficiency_tables(codes, opts);
        for (const auto &row : tables.back().rows) {
            table_ii.add_row(row);
        }
        std::string r = std::to_string(repeaters);
        work.push_back({"efficiency_" + r + "r",
                        "efficiency --repeaters " + r + " --protocols P1,P2,P3,P4 --grid " + switch_grid.str() +
                            " --envelope --switchpoints",
                        std::move(tables)});
    }
    work.push_back({"switchpoints_by_repeaters", "efficiency --switchpoints (repeaters 0, 1, 3, 5)", {table_ii}});
    for (auto protocol : {PurificationProtocol::kBbpssw, PurificationProtocol::kDejmps}) {
        for (bool twirl : {true, false}) {
            PurifyOptions opts{protocol, twirl, 5, unit, std::nullopt, jobs};
            std::string name = std::string(protocol_name(protocol)) + (twirl ? "_twirl" : "_no_twirl");
            work.push_back({"purify_" + name,
                            "purify --protocol " + std::string(protocol_name(protocol)) +
                                (twirl ? " --twirl" : " --no-twirl") + " --rounds 5 --grid " + unit.str(),
                            purify_tables(opts)});
        }
    }
    // Bias evolution of the untwirled protocols.
    work.push_back({"purify_bias_bbpssw", "purify --protocol bbpssw --no-twirl --rounds 10 --grid 0.6:0.6:1",
                    purify_tables({PurificationProtocol::kBbpssw, false, 10, GridSpec{0.6, 0.6, 1}, std::nullopt, 1})});
    work.push_back({"purify_bias_dejmps", "purify --protocol dejmps --no-twirl --rounds 10 --grid 0.53:0.53:1",
                    purify_tables({PurificationProtocol::kDejmps, false, 10, GridSpec{0.53, 0.53, 1}, std::nullopt, 1})});
    {
        HybridOptions opts;
        opts.grid = hybrid_grid;
        opts.jobs = jobs;
        work.push_back({"hybrid_933", "hybrid --code 933 --grid " + hybrid_grid.str(), hybrid_tables(codes, opts)});
    }
    const std::array<double, 4> werner06{0.6, 0.4 / 3, 0.4 / 3, 0.4 / 3};
    const std::string werner06_text =
        "0.6," + format_double(werner06[1]) + "," + format_double(werner06[2]) + "," + format_double(werner06[3]);
    work.push_back({"converge_bbpssw", "converge --protocol bbpssw --start " + werner06_text + " --n 60",
                    converge_tables(PurificationProtocol::kBbpssw, werner06, 60)});
    work.push_back({"converge_dejmps", "converge --protocol dejmps --start " + werner06_text + " --n 60",
                    converge_tables(PurificationProtocol::kDejmps, werner06, 60)});
    work.push_back({"converge_dejmps_07", "converge --protocol dejmps --start 0.7,0.1,0.1,0.1 --n 60",
                    converge_tables(PurificationProtocol::kDejmps, {0.7, 0.1, 0.1, 0.1}, 60)});

    fs::path dir = root / ("adistill-repro-" + timestamp_now());
    for (int attempt = 1; fs::exists(dir); attempt++) {
        dir = root / ("adistill-repro-" + timestamp_now() + "-" + std::to_string(attempt));
    }
    ReproResult result{dir, {}};
    nlohmann::ordered_json manifest;
    manifest["tool"] = "adistill";
    manifest["format"] = format == Format::kJson ? "json" : "csv";
    manifest["entries"] = nlohmann::ordered_json::array();
    const std::string ext = format == Format::kJson ? ".json" : ".csv";
    for (const auto &job : work) {
        std::vector<fs::path> paths = emit(job.tables, dir / (job.file + ext), format, std::cout);
        nlohmann::ordered_json files = nlohmann::ordered_json::array();
        for (const auto &p : paths) {
            files.push_back(p.filename().string());
            result.files.push_back(p);
        }
        manifest["entries"].push_back({{"command", job.command}, {"files", files}});
    }
    fs::path manifest_path = dir / "manifest.json";
    write_file_atomic(manifest_path, manifest.dump(2) + "\n");
    result.files.push_back(manifest_path);
    return result;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> split_list(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) {
            throw std::invalid_argument("empty entry in list '" + text + "'");
        }
        out.push_back(item);
    }
    return out;
}

CodeBook code_book_with(const std::vector<std::string> &files) {
    CodeBook book = CodeBook::builtin();
    for (const auto &file : files) {
        book.add(load_code_file(file));
    }
    return book;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement distillation simulator: stabilizer-code distillation over repeater chains, "
                 "2-to-1 purification, and hybrid strategies.",
                 "adistill"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_path;
    std::string format_text;
    int jobs = 1;
    std::vector<std::string> code_files;
    app.add_option("--out,-o", out_path, "Write to this file instead of stdout");
    app.add_option("--format", format_text, "csv or json (default: from --out extension, else csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--jobs,-j", jobs, "Worker threads for grid sweeps")->check(CLI::PositiveNumber);
    app.add_option("--code-file", code_files, "Extra code definition file (repeatable)")->check(CLI::ExistingFile);

    std::string grid_text;
    auto add_grid = [&](CLI::App *sub) {
        sub->add_option("--grid", grid_text, "Input fidelity grid min:max:points");
    };

    // codes
    auto *codes_cmd = app.add_subcommand("codes", "List or validate stabilizer codes");
    codes_cmd->require_subcommand(1);
    auto *codes_list_cmd = codes_cmd->add_subcommand("list", "Registered codes and their decoders");
    auto *codes_validate_cmd = codes_cmd->add_subcommand("validate", "Validation reports");
    std::vector<std::string> validate_names;
    bool verify_distance = false;
    codes_validate_cmd->add_option("--code", validate_names, "Code names (default: all)")->delimiter(',');
    codes_validate_cmd->add_flag("--distance", verify_distance, "Also verify the distance exhaustively");

    // map
    auto *map_cmd = app.add_subcommand("map", "F_in -> F_out maps");
    map_cmd->require_subcommand(1);
    std::string map_code;
    auto *map_qec_cmd = map_cmd->add_subcommand("qec", "One QEC round of a code");
    map_qec_cmd->add_option("--code", map_code, "Code name")->required();
    add_grid(map_qec_cmd);
    int chain_repeaters = 0;
    std::string chain_rounds;
    auto *map_chain_cmd = map_cmd->add_subcommand("chain", "Three distillation rounds over a repeater chain");
    map_chain_cmd->add_option("--repeaters", chain_repeaters, "Repeater count (0 or odd)")->required();
    map_chain_cmd->add_option("--rounds", chain_rounds, "Three comma-separated codes, 'skip' to omit a round")
        ->required();
    add_grid(map_chain_cmd);

    // efficiency
    EfficiencyOptions eff;
    std::string eff_protocols = "P1,P2,P3,P4";
    auto *eff_cmd = app.add_subcommand("efficiency", "Efficiency curves, optimal envelope and switching points");
    eff_cmd->add_option("--repeaters", eff.repeaters, "Repeater count (0 or odd)")->required();
    eff_cmd->add_option("--protocols", eff_protocols, "P1..P4 or code triples like 913-923-933");
    eff_cmd->add_flag("--envelope", eff.envelope, "Also emit the optimal envelope");
    eff_cmd->add_flag("--switchpoints", eff.switchpoints, "Also emit switching points");
    add_grid(eff_cmd);

    // purify
    PurifyOptions pur;
    std::string pur_protocol;
    std::string pur_dist;
    auto *pur_cmd = app.add_subcommand("purify", "Rounds of BBPSSW or DEJMPS purification");
    pur_cmd->add_option("--protocol", pur_protocol, "bbpssw or dejmps")->required();
    pur_cmd->add_flag("--twirl,!--no-twirl", pur.twirl, "Twirl before every round (default: no twirl)");
    pur_cmd->add_option("--rounds", pur.rounds, "Number of rounds")->check(CLI::NonNegativeNumber);
    pur_cmd->add_option("--input-dist", pur_dist, "Start from I,X,Y,Z probabilities instead of a grid");
    add_grid(pur_cmd);

    // hybrid
    HybridOptions hyb;
    auto *hyb_cmd = app.add_subcommand("hybrid", "DEJMPS to a code's pseudo-threshold plus one QEC round");
    hyb_cmd->add_option("--code", hyb.code, "Code name")->capture_default_str();
    hyb_cmd->add_option("--baseline", hyb.baseline_entanglement,
                        "Distillable entanglement demanded of the efficiency baseline")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    hyb_cmd->add_option("--max-rounds", hyb.max_rounds, "DEJMPS round limit")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_grid(hyb_cmd);

    // converge
    std::string conv_protocol;
    std::string conv_start;
    int conv_n = 50;
    auto *conv_cmd = app.add_subcommand("converge", "Untwirled recursion traces and limit identities");
    conv_cmd->add_option("--protocol", conv_protocol, "bbpssw or dejmps")->required();
    conv_cmd->add_option("--start", conv_start, "a,b,c,d with a > 1/2, summing to 1")->required();
    conv_cmd->add_option("--n", conv_n, "Iterations")->capture_default_str()->check(CLI::NonNegativeNumber);

    // repro
    std::string repro_dir;
    auto *repro_cmd = app.add_subcommand("repro", "Write every reproduction table into a timestamped directory");
    repro_cmd->add_option("--dir", repro_dir, "Parent directory (default: $ADISTILL_OUTPUT_DIR or .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err);
    }

    try {
        std::optional<fs::path> out_file;
        if (!out_path.empty()) {
            out_file = fs::path(out_path);
        }
        Format format = Format::kCsv;
        if (!format_text.empty()) {
            format = parse_format(format_text);
        } else if (out_file && out_file->extension() == ".json") {
            format = Format::kJson;
        }
        auto grid_or = [&](double min, double max, size_t points) {
            return grid_text.empty() ? default_grid(min, max, points) : GridSpec::parse(grid_text);
        };

        std::vector<Table> tables;
        if (*codes_list_cmd) {
            tables = codes_list(code_book_with(code_files));
        } else if (*codes_validate_cmd) {
            std::vector<StabilizerCode> selected;
            if (validate_names.empty()) {
                for (const auto &name : builtin_code_names()) {
                    selected.push_back(builtin_code(name));
                }
                for (const auto &file : code_files) {
                    selected.push_back(load_code_file(file));
                }
            } else {
                CodeBook book = code_book_with(code_files);
                for (const auto &name : validate_names) {
                    selected.push_back(book.code(name));
                }
            }
            tables = codes_validate(selected, verify_distance);
        } else if (*map_qec_cmd) {
            tables = map_qec(code_book_with(code_files), map_code, grid_or(0.0, 1.0, 1001), jobs);
        } else if (*map_chain_cmd) {
            ChainPlan plan =
                ChainPlan::parse("repeaters=" + std::to_string(chain_repeaters) + "; rounds=" + chain_rounds);
            tables = map_chain(code_book_with(code_files), plan, grid_or(0.0, 1.0, 1001), jobs);
        } else if (*eff_cmd) {
            eff.protocols = split_list(eff_protocols);
            eff.grid = grid_or(kSwitchGridMin, kSwitchGridMax, kSwitchGridPoints);
            eff.jobs = jobs;
            tables = efficiency_tables(code_book_with(code_files), eff);
        } else if (*pur_cmd) {
            pur.protocol = parse_protocol(pur_protocol);
            pur.grid = grid_or(0.0, 1.0, 1001);
            if (!pur_dist.empty()) {
                if (!grid_text.empty()) {
                    throw std::invalid_argument("--input-dist and --grid are mutually exclusive");
                }
                pur.input_dist = parse_quadruple(pur_dist);
            }
            pur.jobs = jobs;
            tables = purify_tables(pur);
        } else if (*hyb_cmd) {
            hyb.grid = grid_or(kHybridGridMin, kHybridGridMax, kHybridGridPoints);
            hyb.jobs = jobs;
            tables = hybrid_tables(code_book_with(code_files), hyb);
        } else if (*conv_cmd) {
            tables = converge_tables(parse_protocol(conv_protocol), parse_quadruple(conv_start), conv_n);
        } else if (*repro_cmd) {
            fs::path root = ".";
            if (!repro_dir.empty()) {
                root = repro_dir;
            } else if (const char *env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
                root = env;
            }
            Format repro_format = format_text.empty() ? Format::kCsv : format;
            ReproResult result = run_repro(root, jobs, repro_format);
            out << "wrote " << result.files.size() << " files to " << result.directory.string() << "\n";
            return 0;
        }
        std::vector<fs::path> written = emit(tables, out_file, format, out);
        for (const auto &p : written) {
            err << "wrote " << p.string() << "\n";
        }
    } catch (const std::exception &e) {
        err << "adistill: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace adistill::cli
