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

#include "w52/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "w52/error.hpp"

namespace w52 {

namespace {

using json = nlohmann::ordered_json;

template <typename Range>
json words(const Range &obs) {
    json arr = json::array();
    for (const auto &o : obs) {
        arr.push_back(o.str());
    }
    return arr;
}

template <typename Range>
std::string joined(const Range &obs, bool coords = false) {
    std::string s;
    for (const auto &o : obs) {
        s += s.empty() ? "" : " ";
        s += o.str();
        if (coords) {
            s += o.coords_str();
        }
    }
    return s;
}

std::string sign_str(Sign s) {
    return std::string(1, sign_char(s));
}

json pentad_record(const Space &space, const Pentad &p, int id) {
    Pentagram g = pentad_to_pentagram(p);
    ContextualConfig c = pentad_to_config(space, p);
    json edges = json::array();
    for (const auto &e : g.edges) {
        edges.push_back(words(e));
    }
    json contexts = json::array();
    for (LineId l : c.contexts) {
        contexts.push_back(words(space.line(l).points));
    }
    json rec;
    rec["id"] = id;
    rec["planes"] = p.planes;
    rec["pentagram"] = {{"edges", edges}, {"negative_edges", g.negative_edges()}};
    rec["config"] = {{"contexts", contexts}, {"negative_contexts", c.negative_contexts()}};
    return rec;
}

[[noreturn]] void malformed(const std::string &what) {
    throw Error(ErrorCode::MalformedInput, what);
}

void write_json_lines(std::ostream &out, const std::vector<json> &rows) {
    out << "[\n";
    for (size_t k = 0; k < rows.size(); k++) {
        out << rows[k].dump() << (k + 1 < rows.size() ? ",\n" : "\n");
    }
    out << "]\n";
}

}  // namespace

void write_table(std::ostream &out, const Space &space, TableKind kind, TableFormat format, std::span<const Pentad> pentads) {
    std::vector<json> rows;
    bool csv = format == TableFormat::Csv;
    switch (kind) {
        case TableKind::Points:
            if (csv) {
                out << "id,word,coords,type\n";
            }
            for (const auto &o : all_observables()) {
                std::string coords;
                for (int k = 1; k <= 6; k++) {
                    coords += o.coord(k) ? '1' : '0';
                }
                if (csv) {
                    out << o.point_id() << ',' << o.str() << ',' << coords << ',' << observable_type_char(o.type())
                        << "\n";
                } else {
                    rows.push_back(
                        {{"id", o.point_id()},
                         {"word", o.str()},
                         {"coords", coords},
                         {"type", std::string(1, observable_type_char(o.type()))}});
                }
            }
            break;
        case TableKind::Lines:
            if (csv) {
                out << "id,points,sign\n";
            }
            for (const auto &l : space.lines()) {
                if (csv) {
                    out << l.id << ',' << joined(l.points) << ',' << sign_char(l.sign) << "\n";
                } else {
                    rows.push_back({{"id", l.id}, {"points", words(l.points)}, {"sign", sign_str(l.sign)}});
                }
            }
            break;
        case TableKind::Planes:
            if (csv) {
                out << "id,points,sign,class,b_line\n";
            }
            for (const auto &p : space.planes()) {
                if (csv) {
                    out << p.id << ',' << joined(p.points) << ',' << sign_char(p.sign) << ',' << plane_class_name(p.cls)
                        << ',' << p.b_line << "\n";
                } else {
                    rows.push_back(
                        {{"id", p.id},
                         {"points", words(p.points)},
                         {"sign", sign_str(p.sign)},
                         {"class", plane_class_name(p.cls)},
                         {"b_line", p.b_line}});
                }
            }
            break;
        case TableKind::Pentads:
            if (csv) {
                out << "id,planes,meets,distinguished_lines\n";
            }
            for (size_t k = 0; k < pentads.size(); k++) {
                const auto &p = pentads[k];
                if (csv) {
                    std::string planes;
                    std::string lines;
                    for (int s = 0; s < 5; s++) {
                        planes += (s ? " " : "") + std::to_string(p.planes[s]);
                        lines += (s ? " " : "") + std::to_string(p.distinguished[s]);
                    }
                    out << k << ',' << planes << ',' << joined(p.meets) << ',' << lines << "\n";
                } else {
                    rows.push_back(
                        {{"id", k},
                         {"planes", p.planes},
                         {"meets", words(p.meets)},
                         {"distinguished_lines", p.distinguished}});
                }
            }
            break;
    }
    if (!csv) {
        write_json_lines(out, rows);
    }
}

void write_cache(std::ostream &out, const Space &space, std::span<const Pentad> pentads) {
    json header;
    header["format"] = kCacheFormat;
    header["version"] = kCacheVersion;
    header["generator"] = {
        {"points", kNumPoints},
        {"lines", kNumLines},
        {"planes", kNumPlanes},
        {"order", "planes sorted by point ids; pentads sorted by plane ids"},
    };
    header["count"] = pentads.size();
    std::string head = header.dump();
    // Splice the records array into the header object, one record per line.
    head.pop_back();
    out << head << ",\"records\":[\n";
    for (size_t k = 0; k < pentads.size(); k++) {
        out << pentad_record(space, pentads[k], static_cast<int>(k)).dump() << (k + 1 < pentads.size() ? ",\n" : "\n");
    }
    out << "]}\n";
}

std::vector<Pentad> read_cache(std::istream &in, const Space &space) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        malformed(std::string("cache is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != kCacheFormat) {
        malformed("cache format header missing");
    }
    if (doc.value("version", -1) != kCacheVersion) {
        malformed("unsupported cache version");
    }
    const json &records = doc["records"];
    if (!records.is_array() || doc.value("count", -1) != static_cast<int>(records.size())) {
        malformed("cache record count does not match its header");
    }
    std::vector<Pentad> pentads;
    pentads.reserve(records.size());
    try {
        for (size_t k = 0; k < records.size(); k++) {
            const json &rec = records[k];
            if (rec.at("id").get<size_t>() != k) {
                malformed("cache record " + std::to_string(k) + " has id " + rec.at("id").dump());
            }
            auto planes = rec.at("planes").get<std::array<PlaneId, 5>>();
            Pentad p = make_pentad(space, planes);
            if (p.planes != planes || (!pentads.empty() && !(pentads.back() < p))) {
                malformed("cache record " + std::to_string(k) + " is out of canonical order");
            }
            if (pentad_record(space, p, static_cast<int>(k)) != rec) {
                malformed("cache record " + std::to_string(k) + " disagrees with recomputation");
            }
            pentads.push_back(p);
        }
    } catch (const json::exception &e) {
        malformed(std::string("cache record has the wrong shape: ") + e.what());
    }
    return pentads;
}

void write_census_csv(std::ostream &out, const Census &census) {
    out << "type,count,C-,O_A,O_B,O_C,F-,Fa,Fb,Fc,P_C-,P_OA,P_OB,P_OC,A_on_neg,example_pentad\n";
    for (const auto &r : census.records) {
        const auto &p = r.signature.params;
        const auto &g = r.signature.pentagram;
        out << r.ordinal << ',' << r.multiplicity << ',' << p.negative_contexts << ',' << p.type_a << ',' << p.type_b
            << ',' << p.type_c << ',' << p.negative_planes << ',' << p.planes_a << ',' << p.planes_b << ','
            << p.planes_c << ',' << g.negative_edges << ',' << g.type_a << ',' << g.type_b << ',' << g.type_c << ','
            << g.a_on_negative << ',' << r.example_pentad << "\n";
    }
}

ContextSet read_context_file(std::istream &in) {
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception &e) {
        malformed(std::string("context file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("contexts") || !doc["contexts"].is_array()) {
        malformed("context file must be an object with a \"contexts\" array");
    }
    std::vector<std::vector<std::string>> contexts;
    for (const auto &ctx : doc["contexts"]) {
        if (!ctx.is_array()) {
            malformed("every context must be an array of Pauli words");
        }
        auto &out = contexts.emplace_back();
        for (const auto &w : ctx) {
            if (!w.is_string()) {
                malformed("every observable must be a string");
            }
            out.push_back(w.get<std::string>());
        }
    }
    return ContextSet::from_words(contexts);
}

void write_context_file(std::ostream &out, const ContextSet &cs) {
    json contexts = json::array();
    for (const auto &ctx : cs.contexts) {
        contexts.push_back(words(ctx));
    }
    json doc;
    doc["contexts"] = contexts;
    out << doc.dump() << "\n";
}

std::string report_json(const ProofReport &report, const WASymbol &symbol) {
    json contexts = json::array();
    for (const auto &c : report.contexts) {
        contexts.push_back(
            {{"commuting", c.commuting},
             {"closed", c.closed},
             {"duplicate_free", c.duplicate_free},
             {"sign", c.sign.has_value() ? json(sign_str(*c.sign)) : json(nullptr)}});
    }
    json occurrences = json::object();
    for (const auto &[o, n] : report.occurrences) {
        occurrences[o.str()] = n;
    }
    json diagnoses = json::array();
    for (Diagnosis d : report.diagnoses) {
        diagnoses.push_back(diagnosis_name(d));
    }
    json doc;
    doc["verdict"] = verdict_name(report.verdict);
    doc["symbol"] = symbol.str();
    doc["negative_count"] = report.negative_count;
    doc["all_even"] = report.all_even;
    doc["odd_negative"] = report.odd_negative;
    doc["diagnoses"] = diagnoses;
    doc["contexts"] = contexts;
    doc["occurrences"] = occurrences;
    return doc.dump(2) + "\n";
}

std::string show_pentad(const Space &space, const Pentad &p, int pentad_id, PentadView view, bool coords) {
    std::ostringstream out;
    out << "pentad " << pentad_id << " planes";
    for (PlaneId id : p.planes) {
        out << ' ' << id;
    }
    out << "\n";
    switch (view) {
        case PentadView::Planes:
            for (int k = 0; k < 5; k++) {
                const Plane &plane = space.plane(p.planes[k]);
                const Line &dl = space.line(p.distinguished[k]);
                out << "plane " << plane.id << " sign " << sign_char(plane.sign) << " class "
                    << plane_class_name(plane.cls) << ": " << joined(plane.points, coords) << "\n";
                out << "  shared " << joined(p.shared_points(k), coords) << "\n";
                out << "  distinguished line " << dl.id << ": " << joined(dl.points, coords) << "\n";
            }
            break;
        case PentadView::Pentagram: {
            Pentagram g = pentad_to_pentagram(p);
            out << "observables " << g.observables.size() << ": " << joined(g.observables, coords) << "\n";
            for (size_t k = 0; k < g.edges.size(); k++) {
                out << "edge " << k << ' ' << sign_char(g.edge_signs[k]) << ": " << joined(g.edges[k], coords) << "\n";
            }
            out << "negative edges " << g.negative_edges() << "\n";
            out << "symbol " << wa_symbol(context_set(g)).str() << "\n";
            break;
        }
        case PentadView::Config: {
            ContextualConfig c = pentad_to_config(space, p);
            out << "observables " << c.observables.size() << ": " << joined(c.observables, coords) << "\n";
            out << "contexts " << c.contexts.size() << "\n";
            for (size_t k = 0; k < c.contexts.size(); k++) {
                out << "context " << k << ' ' << sign_char(c.context_signs[k]) << ": "
                    << joined(space.line(c.contexts[k]).points, coords) << "\n";
            }
            out << "negative contexts " << c.negative_contexts() << "\n";
            out << "symbol " << wa_symbol(context_set(space, c)).str() << "\n";
            break;
        }
    }
    return out.str();
}

}  // namespace w52
