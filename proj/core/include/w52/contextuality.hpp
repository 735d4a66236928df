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

#ifndef W52_CONTEXTUALITY_HPP
#define W52_CONTEXTUALITY_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "w52/pauli.hpp"
#include "w52/pentads.hpp"

namespace w52 {

/// A list of candidate contexts. Contexts may have any size and need not be
/// valid; `analyze` reports what is wrong with them.
struct ContextSet {
    std::vector<std::vector<Observable>> contexts;

    /// Parses Pauli words; throws the pauli parse errors.
    static ContextSet from_words(const std::vector<std::vector<std::string>> &words);
};

ContextSet context_set(const Pentagram &g);
ContextSet context_set(const Space &space, const ContextualConfig &c);

enum class Verdict { ValidParityProof, NotContextual, MalformedContext };

std::string_view verdict_name(Verdict v);

/// Reasons a context set fails to be a parity proof. Several may apply.
enum class Diagnosis {
    EmptyContext,
    DuplicateInContext,
    NonCommutingContext,
    NonClosedContext,
    OddOccurrence,
    EvenNegativeCount,
};

std::string_view diagnosis_name(Diagnosis d);

struct ContextReport {
    bool duplicate_free = true;
    bool commuting = true;
    bool closed = true;
    std::optional<Sign> sign;
};

struct ProofReport {
    std::vector<ContextReport> contexts;
    std::map<Observable, int> occurrences;
    int negative_count = 0;
    bool all_even = false;
    bool odd_negative = false;
    Verdict verdict = Verdict::MalformedContext;
    std::vector<Diagnosis> diagnoses;

    std::string str() const;
};

/// Checks the parity-proof conditions: every context commutes and multiplies
/// to +-I, every observable occurs an even number of times and the number of
/// negative contexts is odd. Malformed contexts are reported, never thrown.
ProofReport analyze(const ContextSet &cs);

/// Occurrence and size profile, e.g. "10_6 15_2 − 30_3" (the separator is
/// U+2212). Parts are sorted by subscript, largest first.
struct WASymbol {
    /// (occurrence k, number of observables n_k).
    std::vector<std::pair<int, int>> point_part;
    /// (context size s, number of contexts m_s).
    std::vector<std::pair<int, int>> context_part;

    std::string str() const;
    bool operator==(const WASymbol &) const = default;
};

WASymbol wa_symbol(const ContextSet &cs);

}  // namespace w52

#endif
