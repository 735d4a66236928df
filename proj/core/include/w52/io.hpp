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

#ifndef W52_IO_HPP
#define W52_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "w52/contextuality.hpp"
#include "w52/pentads.hpp"
#include "w52/taxonomy.hpp"

namespace w52 {

enum class TableKind { Points, Lines, Planes, Pentads };
enum class TableFormat { Json, Csv };

inline constexpr std::string_view kCacheFormat = "w52-census-cache";
inline constexpr int kCacheVersion = 1;

/// Writes one table. Pentads are only needed for TableKind::Pentads.
void write_table(
    std::ostream &out, const Space &space, TableKind kind, TableFormat format, std::span<const Pentad> pentads = {});

/// Cache file: a JSON object with a format/version header and one record per
/// pentad on its own line, holding the plane ids and the derived pentagram
/// and configuration as Pauli words.
void write_cache(std::ostream &out, const Space &space, std::span<const Pentad> pentads);

/// Reads a cache and rebuilds the pentads from their plane ids. Throws
/// MalformedInput when the header, ordering or any derived record disagrees
/// with recomputation.
std::vector<Pentad> read_cache(std::istream &in, const Space &space);

void write_census_csv(std::ostream &out, const Census &census);

/// Context file: {"contexts": [["XXI", "YYI", "ZZI"], ...]}. Throws
/// MalformedInput on a schema error and the Pauli parse errors on bad words.
ContextSet read_context_file(std::istream &in);
void write_context_file(std::ostream &out, const ContextSet &cs);

std::string report_json(const ProofReport &report, const WASymbol &symbol);

enum class PentadView { Planes, Pentagram, Config };

/// Human-readable rendering of one pentad.
std::string show_pentad(const Space &space, const Pentad &p, int pentad_id, PentadView view, bool coords);

}  // namespace w52

#endif
