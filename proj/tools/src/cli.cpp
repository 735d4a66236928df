// Copyright 2026 The w52 Authors
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


#include "w52/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "w52/contextuality.hpp"
#include "w52/error.hpp"
#include "w52/io.hpp"
#include "w52/pentads.hpp"
#include "w52/taxonomy.hpp"

namespace w52::cli {

namespace {

struct Options {
    std::string object;
    std::string format;
    std::string out_path;
    std::string cache;
    unsigned threads = 1;
    std::string file;
    int pentad = -1;
    std::string view = "planes";
    bool coords = false;
};

/// Writes to `path`, or to `out` when the path is "-".
void with_output(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &write) {
    if (path == "-") {
        write(out);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
    }
    write(file);
    file.flush();
    if (!file) {
        throw Error(ErrorCode::Io, "failed writing " + path);
    }
}

/// Reads the cache if it exists, otherwise enumerates and, when a cache path
/// was given, writes it.
std::vector<Pentad> load_pentads(const Options &o, std::ostream &err) {
    const Space &space = Space::get();
    if (!o.cache.empty() && std::filesystem::exists(o.cache)) {
        std::ifstream in(o.cache, std::ios::binary);
        if (!in) {
            throw Error(ErrorCode::Io, "cannot read " + o.cache);
        }
        return read_cache(in, space);
    }
    auto pentads = enumerate_pentads(space, o.threads);
    if (!o.cache.empty()) {
        with_output(o.cache, err, [&](std::ostream &f) { write_cache(f, space, pentads); });
        err << "wrote cache " << o.cache << " with " << pentads.size() << " pentads\n";
    }
    return pentads;
}

int cmd_enumerate(const Options &o, std::ostream &out, std::ostream &err) {
    static const std::map<std::string, TableKind> kinds = {
        {"points", TableKind::Points},
        {"lines", TableKind::Lines},
        {"planes", TableKind::Planes},
        {"pentads", TableKind::Pentads},
    };
    const Space &space = Space::get();
    TableKind kind = kinds.at(o.object);
    std::vector<Pentad> pentads;
    size_t count = 0;
    switch (kind) {
        case TableKind::Points:
            count = all_observables().size();
            break;
        case TableKind::Lines:
            count = space.lines().size();
            break;
        case TableKind::Planes:
            count = space.planes().size();
            break;
        case TableKind::Pentads:
            pentads = load_pentads(o, err);
            count = pentads.size();
            break;
    }
    if (!o.out_path.empty()) {
        TableFormat format = o.format == "json" ? TableFormat::Json : TableFormat::Csv;
        with_output(o.out_path, out, [&](std::ostream &s) { write_table(s, space, kind, format, pentads); });
    }
    (o.out_path == "-" ? err : out) << count << "\n";
    return kSuccess;
}

int cmd_census(const Options &o, std::ostream &out, std::ostream &err) {
    const Space &space = Space::get();
    auto pentads = load_pentads(o, err);
    auto signatures = census_signatures(space, pentads, o.threads);
    Census census = classify_census(signatures);
    std::string path = o.out_path.empty() ? "-" : o.out_path;
    with_output(path, out, [&](std::ostream &s) { write_census_csv(s, census); });
    if (path == "-") {
        return kSuccess;
    }

    out << "pentads " << census.total() << "\n";
    out << "types " << census.records.size() << "\n";
    out << "families";
    for (auto it = census.family_sizes.rbegin(); it != census.family_sizes.rend(); ++it) {
        out << ' ' << it->first << ':' << it->second;
    }
    out << "\n";
    std::map<PlaneId, int> per_plane;
    for (const auto &p : pentads) {
        for (PlaneId id : p.planes) {
            per_plane[id]++;
        }
    }
    std::map<int, int> distribution;
    for (const auto &plane : space.planes()) {
        distribution[per_plane[plane.id]]++;
    }
    out << "pentads per plane";
    for (const auto &[n, planes] : distribution) {
        out << ' ' << n << 'x' << planes;
    }
    out << "\n";
    return kSuccess;
}

int cmd_table1(const Options &o, std::ostream &out, std::ostream &err) {
    auto pentads = load_pentads(o, err);
    Census census = group_signatures(census_signatures(Space::get(), pentads, o.threads));
    Table1Diff diff = compare_with_table1(census);
    if (diff.empty() && census.records.size() == kNumTypes) {
        out << "census matches the reference table: " << census.records.size() << " types\n";
        return kSuccess;
    }
    out << "census has " << census.records.size() << " types; parameter differences:\n" << diff.str();
    return kCheckFailed;
}

int cmd_laws(const Options &o, std::ostream &out, std::ostream &err) {
    auto pentads = load_pentads(o, err);
    auto signatures = census_signatures(Space::get(), pentads, o.threads);
    LawReport report = structural_laws(std::span<const ConfigSignature>(signatures));
    out << report.str();
    return report.all_hold() ? kSuccess : kCheckFailed;
}

int cmd_verify(const Options &o, std::ostream &out) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read " + o.file);
    }
    ContextSet cs = read_context_file(in);
    ProofReport report = analyze(cs);
    WASymbol symbol = wa_symbol(cs);
    if (o.format == "json") {
        out << report_json(report, symbol) << "\n";
    } else {
        out << report.str() << "symbol: " << symbol.str() << "\n";
    }
    return report.verdict == Verdict::ValidParityProof ? kSuccess : kCheckFailed;
}

int cmd_show(const Options &o, std::ostream &out, std::ostream &err) {
    static const std::map<std::string, PentadView> views = {
        {"planes", PentadView::Planes},
        {"pentagram", PentadView::Pentagram},
        {"config", PentadView::Config},
    };
    auto pentads = load_pentads(o, err);
    if (o.pentad < 0 || static_cast<size_t>(o.pentad) >= pentads.size()) {
        throw Error(ErrorCode::UnknownId, "pentad id " + std::to_string(o.pentad) + " is outside 0.." +
                                              std::to_string(pentads.size() - 1));
    }
    out << show_pentad(Space::get(), pentads[o.pentad], o.pentad, views.at(o.view), o.coords);
    return kSuccess;
}

void add_threads(CLI::App *cmd, Options &o) {
    cmd->add_option("--threads", o.threads, "Worker threads for enumeration and census")
        ->check(CLI::Range(1u, 256u));
}

void add_cache(CLI::App *cmd, Options &o) {
    cmd->add_option("--cache", o.cache, "Census cache file; read if present, otherwise written");
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    Options o;
    CLI::App app{"Pentad census and parity-proof tools for the three-qubit symplectic polar space", "w52"};
    app.require_subcommand(1, 1);

    auto *enumerate = app.add_subcommand("enumerate", "Print the number of objects; write their table with --out");
    enumerate->add_option("object", o.object, "points, lines, planes or pentads")
        ->required()
        ->check(CLI::IsMember({"points", "lines", "planes", "pentads"}));
    enumerate->add_option("--format", o.format, "Table format")
        ->default_val("csv")
        ->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--out", o.out_path, "Table path, or - for standard output");
    add_cache(enumerate, o);
    add_threads(enumerate, o);

    auto *census = app.add_subcommand("census", "Classify every pentad and write the type summary CSV");
    census->add_option("--out", o.out_path, "CSV path; standard output if omitted");
    add_cache(census, o);
    add_threads(census, o);

    auto *table1 = app.add_subcommand("table1", "Compare the census with the reference type table");
    add_cache(table1, o);
    add_threads(table1, o);

    auto *laws = app.add_subcommand("laws", "Check the five structural laws over the census");
    add_cache(laws, o);
    add_threads(laws, o);

    auto *verify = app.add_subcommand("verify", "Check a context file for a parity proof");
    verify->add_option("file", o.file, "JSON file of the form {\"contexts\": [[words...], ...]}")->required();
    verify->add_option("--format", o.format, "Report format")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));

    auto *show = app.add_subcommand("show", "Print one pentad as planes, pentagram or configuration");
    show->add_option("--pentad", o.pentad, "Pentad id (index in canonical order)")->required();
    show->add_option("--as", o.view, "View")->default_val("planes")->check(
        CLI::IsMember({"planes", "pentagram", "config"}));
    show->add_flag("--coords", o.coords, "Also print GF(2)^6 coordinates");
    add_cache(show, o);
    add_threads(show, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (*enumerate) {
            return cmd_enumerate(o, out, err);
        }
        if (*census) {
            return cmd_census(o, out, err);
        }
        if (*table1) {
            return cmd_table1(o, out, err);
        }
        if (*laws) {
            return cmd_laws(o, out, err);
        }
        if (*verify) {
            return cmd_verify(o, out);
        }
        return cmd_show(o, out, err);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::TypeCountMismatch ? kCheckFailed : kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }
}

}  // namespace w52::cli
