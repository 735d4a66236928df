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

#include "w52/taxonomy.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "w52/error.hpp"

namespace w52 {

namespace {

// T, (C-, O_A, O_B, O_C, F-, F+a, F+b, F+c), pentagram type.
constexpr std::array<Table1Row, kNumTypes> kTable1 = {{
    {1, {17, 2, 11, 12, 3, 2, 0, 0}, "5"},
    {2, {15, 0, 15, 10, 5, 0, 0, 0}, "1"},
    {3, {15, 1, 15, 9, 3, 2, 0, 0}, "2"},
    {4, {13, 0, 11, 14, 5, 0, 0, 0}, "4"},
    {5, {13, 1, 10, 14, 4, 1, 0, 0}, "21"},
    {6, {13, 1, 11, 13, 3, 2, 0, 0}, "9"},
    {7, {13, 2, 11, 12, 3, 1, 1, 0}, "6"},
    {8, {13, 3, 10, 12, 2, 2, 1, 0}, "22"},
    {9, {11, 1, 10, 14, 4, 0, 1, 0}, "3"},
    {10, {11, 2, 10, 13, 2, 2, 1, 0}, "14"},
    {11, {11, 2, 11, 12, 3, 1, 1, 0}, "24"},
    {12, {11, 3, 11, 11, 3, 1, 0, 1}, "10"},
    {13, {11, 4, 10, 11, 2, 2, 0, 1}, "30"},
    {14, {11, 5, 11, 9, 1, 2, 1, 1}, "28b"},
    {15, {9, 1, 11, 13, 3, 0, 2, 0}, "11"},
    {16, {9, 2, 10, 13, 2, 1, 2, 0}, "31"},
    {17, {9, 2, 11, 12, 3, 0, 2, 0}, "7"},
    {18, {9, 2, 11, 12, 1, 2, 2, 0}, "17"},
    {19, {9, 3, 10, 12, 2, 1, 2, 0}, "23"},
    {20, {9, 3, 11, 11, 3, 0, 1, 1}, "12"},
    {21, {9, 4, 10, 11, 2, 1, 1, 1}, "15"},
    {22, {9, 4, 10, 11, 2, 1, 1, 1}, "32"},
    {23, {9, 4, 11, 10, 1, 2, 1, 1}, "18"},
    {24, {9, 4, 11, 10, 1, 2, 1, 1}, "36"},
    {25, {9, 5, 10, 10, 2, 1, 0, 2}, "16"},
    {26, {9, 1, 15, 9, 3, 0, 2, 0}, "8"},
    {27, {9, 5, 11, 9, 3, 0, 0, 2}, "13"},
    {28, {9, 5, 11, 9, 1, 2, 0, 2}, "20"},
    {29, {9, 5, 11, 9, 1, 2, 1, 1}, "28a"},
    {30, {9, 3, 15, 7, 1, 2, 1, 1}, "19"},
    {31, {7, 1, 11, 13, 3, 0, 2, 0}, "25"},
    {32, {7, 3, 11, 11, 3, 0, 1, 1}, "26"},
    {33, {7, 4, 11, 10, 1, 1, 2, 1}, "37b"},
    {34, {7, 5, 10, 10, 2, 1, 0, 2}, "34"},
    {35, {7, 5, 11, 9, 3, 0, 0, 2}, "27"},
    {36, {7, 6, 10, 9, 0, 2, 1, 2}, "41"},
    {37, {5, 4, 10, 11, 2, 0, 2, 1}, "33"},
    {38, {5, 4, 11, 10, 1, 1, 2, 1}, "37a"},
    {39, {5, 5, 10, 10, 2, 0, 1, 2}, "35"},
    {40, {5, 5, 11, 9, 1, 1, 1, 2}, "39"},
    {41, {5, 6, 11, 8, 1, 1, 0, 3}, "43"},
    {42, {3, 5, 11, 9, 1, 0, 3, 1}, "29"},
    {43, {3, 5, 11, 9, 1, 0, 2, 2}, "40"},
    {44, {3, 6, 10, 9, 0, 1, 2, 2}, "42"},
    {45, {3, 6, 11, 8, 1, 0, 1, 3}, "44"},
    {46, {3, 3, 15, 7, 1, 0, 3, 1}, "38"},
    {47, {3, 6, 15, 4, 1, 0, 0, 4}, "45"},
}};

constexpr std::array<std::string_view, 5> kLawStatements = {
    "one type-A observable => positive planes of a single class",
    "two type-A observables => no positive plane of class c",
    "four type-A observables => exactly one positive plane of class c",
    "type-B count even <=> negative-plane count even",
    "negative contexts between 3 and 17",
};

std::array<bool, 5> evaluate_laws(const Parameters &p) {
    int positive_classes = (p.planes_a > 0) + (p.planes_b > 0) + (p.planes_c > 0);
    return {
        p.type_a != 1 || positive_classes == 1,
        p.type_a != 2 || p.planes_c == 0,
        p.type_a != 4 || p.planes_c == 1,
        (p.type_b % 2 == 0) == (p.negative_planes % 2 == 0),
        p.negative_contexts >= 3 && p.negative_contexts <= 17,
    };
}

void count_type(ObservableType t, int &a, int &b, int &c) {
    switch (t) {
        case ObservableType::A:
            a++;
            break;
        case ObservableType::B:
            b++;
            break;
        case ObservableType::C:
            c++;
            break;
    }
}

std::map<Parameters, int> tuple_counts(std::span<const Parameters> items) {
    std::map<Parameters, int> m;
    for (const auto &p : items) {
        m[p]++;
    }
    return m;
}

}  // namespace

std::string Parameters::str() const {
    std::ostringstream out;
    out << '(' << negative_contexts << ',' << type_a << ',' << type_b << ',' << type_c << ',' << negative_planes << ','
        << planes_a << ',' << planes_b << ',' << planes_c << ')';
    return out.str();
}

PentagramSignature pentagram_signature(const Pentagram &g) {
    PentagramSignature s;
    s.negative_edges = g.negative_edges();
    for (const auto &o : g.observables) {
        count_type(o.type(), s.type_a, s.type_b, s.type_c);
    }
    for (const auto &o : g.observables) {
        if (o.type() != ObservableType::A) {
            continue;
        }
        for (size_t k = 0; k < g.edges.size(); k++) {
            const auto &e = g.edges[k];
            if (g.edge_signs[k] == Sign::Minus && std::find(e.begin(), e.end(), o) != e.end()) {
                s.a_on_negative++;
                break;
            }
        }
    }
    return s;
}

ConfigSignature config_signature(const Space &space, const Pentad &p) {
    ConfigSignature s;
    ContextualConfig config = pentad_to_config(space, p);
    s.params.negative_contexts = config.negative_contexts();
    for (const auto &o : config.observables) {
        count_type(o.type(), s.params.type_a, s.params.type_b, s.params.type_c);
    }
    for (PlaneId id : p.planes) {
        switch (space.plane(id).cls) {
            case PlaneClass::Negative:
                s.params.negative_planes++;
                break;
            case PlaneClass::PosA:
                s.params.planes_a++;
                break;
            case PlaneClass::PosB:
                s.params.planes_b++;
                break;
            case PlaneClass::PosC:
                s.params.planes_c++;
                break;
        }
    }
    s.pentagram = pentagram_signature(pentad_to_pentagram(p));
    return s;
}

std::vector<ConfigSignature> census_signatures(const Space &space, std::span<const Pentad> pentads, unsigned threads) {
    std::vector<ConfigSignature> result(pentads.size());
    threads = std::max(1u, threads);
    auto work = [&](size_t begin, size_t end) {
        for (size_t k = begin; k < end; k++) {
            result[k] = config_signature(space, pentads[k]);
        }
    };
    if (threads == 1) {
        work(0, pentads.size());
        return result;
    }
    std::vector<std::jthread> pool;
    size_t chunk = (pentads.size() + threads - 1) / threads;
    for (size_t begin = 0; begin < pentads.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(pentads.size(), begin + chunk));
    }
    return result;
}

int Census::total() const {
    int n = 0;
    for (const auto &r : records) {
        n += r.multiplicity;
    }
    return n;
}

bool canonical_type_less(const ConfigSignature &a, const ConfigSignature &b) {
    const auto &x = a.params;
    const auto &y = b.params;
    if (x.negative_contexts != y.negative_contexts) {
        return x.negative_contexts > y.negative_contexts;
    }
    auto key = [](const ConfigSignature &s) {
        const auto &p = s.params;
        const auto &g = s.pentagram;
        return std::array<int, 12>{
            p.type_a,
            p.type_b,
            p.negative_planes,
            p.planes_a,
            p.planes_b,
            p.planes_c,
            p.type_c,
            g.negative_edges,
            g.type_a,
            g.type_b,
            g.type_c,
            g.a_on_negative,
        };
    };
    return key(a) < key(b);
}

Census group_signatures(std::span<const ConfigSignature> signatures) {
    std::map<ConfigSignature, TypeRecord> groups;
    for (size_t k = 0; k < signatures.size(); k++) {
        auto [it, inserted] = groups.try_emplace(signatures[k]);
        if (inserted) {
            it->second.signature = signatures[k];
            it->second.example_pentad = static_cast<int>(k);
        }
        it->second.multiplicity++;
    }
    Census census;
    for (auto &[sig, record] : groups) {
        census.records.push_back(record);
    }
    std::sort(census.records.begin(), census.records.end(), [](const TypeRecord &a, const TypeRecord &b) {
        return canonical_type_less(a.signature, b.signature);
    });
    for (size_t k = 0; k < census.records.size(); k++) {
        census.records[k].ordinal = static_cast<int>(k) + 1;
        census.family_sizes[census.records[k].signature.params.negative_contexts]++;
    }
    return census;
}

Census classify_census(std::span<const ConfigSignature> signatures) {
    Census census = group_signatures(signatures);
    if (census.records.size() != kNumTypes) {
        std::ostringstream out;
        out << "found " << census.records.size() << " types instead of " << kNumTypes << ":";
        for (const auto &r : census.records) {
            out << ' ' << r.signature.params.str() << 'x' << r.multiplicity << "@" << r.example_pentad;
        }
        throw Error(ErrorCode::TypeCountMismatch, out.str());
    }
    return census;
}

std::span<const Table1Row> table1_fixture() {
    return kTable1;
}

Table1Diff compare_with_table1(const Census &census) {
    std::vector<Parameters> expected;
    for (const auto &row : kTable1) {
        expected.push_back(row.params);
    }
    std::vector<Parameters> actual;
    for (const auto &r : census.records) {
        actual.push_back(r.signature.params);
    }
    auto want = tuple_counts(expected);
    auto got = tuple_counts(actual);
    Table1Diff diff;
    for (const auto &[p, n] : want) {
        int have = got.contains(p) ? got.at(p) : 0;
        if (have < n) {
            diff.missing.emplace_back(p, n - have);
        }
    }
    for (const auto &[p, n] : got) {
        int need = want.contains(p) ? want.at(p) : 0;
        if (n > need) {
            diff.unexpected.emplace_back(p, n - need);
        }
    }
    return diff;
}

std::string Table1Diff::str() const {
    std::ostringstream out;
    for (const auto &[p, n] : missing) {
        out << "- " << p.str() << (n > 1 ? " x" + std::to_string(n) : "") << "\n";
    }
    for (const auto &[p, n] : unexpected) {
        out << "+ " << p.str() << (n > 1 ? " x" + std::to_string(n) : "") << "\n";
    }
    return out.str();
}

LawReport structural_laws(std::span<const Parameters> items) {
    LawReport report;
    for (int k = 0; k < 5; k++) {
        report.laws[k].law = k + 1;
        report.laws[k].statement = kLawStatements[k];
    }
    for (size_t i = 0; i < items.size(); i++) {
        auto ok = evaluate_laws(items[i]);
        for (int k = 0; k < 5; k++) {
            auto &law = report.laws[k];
            law.checked++;
            if (!ok[k]) {
                law.violations++;
                if (!law.witness.has_value()) {
                    law.witness = static_cast<int>(i);
                }
            }
        }
    }
    return report;
}

LawReport structural_laws(std::span<const ConfigSignature> signatures) {
    std::vector<Parameters> params;
    params.reserve(signatures.size());
    for (const auto &s : signatures) {
        params.push_back(s.params);
    }
    return structural_laws(std::span<const Parameters>(params));
}

bool LawReport::all_hold() const {
    return std::all_of(laws.begin(), laws.end(), [](const LawResult &l) {
        return l.holds();
    });
}

std::string LawReport::str() const {
    std::ostringstream out;
    for (const auto &l : laws) {
        out << 'L' << l.law << ' ' << (l.holds() ? "holds" : "VIOLATED") << " (" << l.checked << " checked";
        if (!l.holds()) {
            out << ", " << l.violations << " violations, first at " << *l.witness;
        }
        out << "): " << l.statement << "\n";
    }
    return out.str();
}

}  // namespace w52
