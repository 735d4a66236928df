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

#ifndef W52_TAXONOMY_HPP
#define W52_TAXONOMY_HPP

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "w52/pentads.hpp"

namespace w52 {

inline constexpr int kNumTypes = 47;

struct PentagramSignature {
    int negative_edges = 0;
    int type_a = 0;
    int type_b = 0;
    int type_c = 0;
    /// Type-A pentagram observables lying on at least one negative edge.
    int a_on_negative = 0;

    auto operator<=>(const PentagramSignature &) const = default;
};

/// The eight classification parameters of a configuration, in the column
/// order of the published table: negative contexts, observables of types
/// A/B/C, negative planes and positive planes of classes a/b/c.
struct Parameters {
    int negative_contexts = 0;
    int type_a = 0;
    int type_b = 0;
    int type_c = 0;
    int negative_planes = 0;
    int planes_a = 0;
    int planes_b = 0;
    int planes_c = 0;

    auto operator<=>(const Parameters &) const = default;
    std::string str() const;
};

struct ConfigSignature {
    Parameters params;
    PentagramSignature pentagram;

    auto operator<=>(const ConfigSignature &) const = default;
};

PentagramSignature pentagram_signature(const Pentagram &g);
ConfigSignature config_signature(const Space &space, const Pentad &p);

/// Signatures for every pentad, in pentad order. Parallel over pentads when
/// threads > 1; the result does not depend on the thread count.
std::vector<ConfigSignature> census_signatures(const Space &space, std::span<const Pentad> pentads, unsigned threads = 1);

struct TypeRecord {
    ConfigSignature signature;
    int multiplicity = 0;
    int example_pentad = 0;
    /// 1-based rank in canonical order.
    int ordinal = 0;
};

struct Census {
    std::vector<TypeRecord> records;
    /// Number of types per negative-context count.
    std::map<int, int> family_sizes;
    int total() const;
};

/// Canonical type order: negative contexts descending, then the remaining
/// parameters ascending (O_A, O_B, F-, Fa, Fb, Fc), then pentagram fields.
bool canonical_type_less(const ConfigSignature &a, const ConfigSignature &b);

/// Groups signatures by full signature and numbers the groups canonically.
Census group_signatures(std::span<const ConfigSignature> signatures);

/// group_signatures, then throws TypeCountMismatch unless there are exactly
/// 47 types. The message lists the multiplicity of every group found.
Census classify_census(std::span<const ConfigSignature> signatures);

struct Table1Row {
    int type;
    Parameters params;
    /// Associated pentagram type as printed ("5", "28b", ...). Informational.
    std::string_view pentagram_type;
};

/// The 47 rows of the reference classification table.
std::span<const Table1Row> table1_fixture();

struct Table1Diff {
    /// Parameter tuples the fixture has more often than the census.
    std::vector<std::pair<Parameters, int>> missing;
    /// Parameter tuples the census has more often than the fixture.
    std::vector<std::pair<Parameters, int>> unexpected;

    bool empty() const {
        return missing.empty() && unexpected.empty();
    }
    std::string str() const;
};

/// Compares the multiset of parameter tuples of the census types against the
/// fixture rows.
Table1Diff compare_with_table1(const Census &census);

struct LawResult {
    int law = 0;
    std::string_view statement;
    int checked = 0;
    int violations = 0;
    /// Index of the first violating item.
    std::optional<int> witness;

    bool holds() const {
        return violations == 0;
    }
};

struct LawReport {
    std::array<LawResult, 5> laws;

    bool all_hold() const;
    std::string str() const;
};

/// Evaluates laws L1..L5 on each parameter tuple; witnesses are indices into
/// `items`.
LawReport structural_laws(std::span<const Parameters> items);
LawReport structural_laws(std::span<const ConfigSignature> signatures);

}  // namespace w52

#endif
