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

#include "w52/contextuality.hpp"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "oracle/dense.hpp"
#include "test_util.hpp"

using namespace w52;
using w52::testing::canonical_pentagram_edges;
using w52::testing::census_pentads;

namespace {

ContextSet canonical_pentagram_set() {
    return context_set(make_pentagram(canonical_pentagram_edges()));
}

bool has(const ProofReport &r, Diagnosis d) {
    return std::find(r.diagnoses.begin(), r.diagnoses.end(), d) != r.diagnoses.end();
}

void check_double_count(const WASymbol &s) {
    int points = 0;
    int contexts = 0;
    for (auto [k, n] : s.point_part) {
        points += k * n;
    }
    for (auto [size, m] : s.context_part) {
        contexts += size * m;
    }
    ASSERT_EQ(points, contexts);
}

}  // namespace

TEST(contextuality, canonical_pentagram_is_a_parity_proof) {
    ContextSet cs = canonical_pentagram_set();
    ProofReport r = analyze(cs);
    ASSERT_EQ(r.verdict, Verdict::ValidParityProof);
    ASSERT_EQ(r.negative_count, 1);
    ASSERT_TRUE(r.all_even);
    ASSERT_TRUE(r.odd_negative);
    ASSERT_TRUE(r.diagnoses.empty());
    ASSERT_EQ(r.occurrences.size(), 10u);
    for (size_t k = 0; k < cs.contexts.size(); k++) {
        ASSERT_EQ(r.contexts[k].sign, oracle::dense_product_sign(cs.contexts[k]));
    }
    ASSERT_EQ(wa_symbol(cs).str(), "10_2 − 5_4");
}

TEST(contextuality, mermin_square_on_two_qubits) {
    ContextSet cs = ContextSet::from_words({
        {"XII", "IXI", "XXI"},
        {"IZI", "ZII", "ZZI"},
        {"XZI", "ZXI", "YYI"},
        {"XII", "IZI", "XZI"},
        {"IXI", "ZII", "ZXI"},
        {"XXI", "ZZI", "YYI"},
    });
    ProofReport r = analyze(cs);
    ASSERT_EQ(r.verdict, Verdict::ValidParityProof);
    ASSERT_EQ(r.negative_count, 1);
    ASSERT_EQ(r.contexts[5].sign, Sign::Minus);
    ASSERT_EQ(oracle::dense_product_sign(cs.contexts[5]), Sign::Minus);
    ASSERT_EQ(wa_symbol(cs).str(), "9_2 − 6_3");
}

TEST(contextuality, single_line_is_not_contextual) {
    ContextSet cs = ContextSet::from_words({{"XII", "IXI", "XXI"}});
    ProofReport r = analyze(cs);
    ASSERT_EQ(r.verdict, Verdict::NotContextual);
    ASSERT_EQ(r.negative_count, 0);
    ASSERT_TRUE(has(r, Diagnosis::OddOccurrence));
    ASSERT_TRUE(has(r, Diagnosis::EvenNegativeCount));
    ASSERT_EQ(wa_symbol(cs).str(), "3_1 − 1_3");
}

TEST(contextuality, every_configuration_is_a_parity_proof) {
    const Space &s = Space::get();
    for (const auto &p : census_pentads()) {
        ContextualConfig c = pentad_to_config(s, p);
        ContextSet cs = context_set(s, c);
        ProofReport r = analyze(cs);
        ASSERT_EQ(r.verdict, Verdict::ValidParityProof);
        ASSERT_EQ(r.negative_count, c.negative_contexts());
        WASymbol sym = wa_symbol(cs);
        ASSERT_EQ(sym.str(), "10_6 15_2 − 30_3");
        check_double_count(sym);

        ContextSet pentagram = context_set(pentad_to_pentagram(p));
        ASSERT_EQ(analyze(pentagram).verdict, Verdict::ValidParityProof);
        ASSERT_EQ(wa_symbol(pentagram).str(), "10_2 − 5_4");
    }
}

TEST(contextuality, verdict_is_invariant_under_reordering) {
    const Space &s = Space::get();
    std::mt19937 rng(20260417);
    const auto &pentads = census_pentads();
    for (int trial = 0; trial < 200; trial++) {
        const Pentad &p = pentads[rng() % pentads.size()];
        ContextSet cs = context_set(s, pentad_to_config(s, p));
        ProofReport before = analyze(cs);
        WASymbol sym = wa_symbol(cs);
        std::shuffle(cs.contexts.begin(), cs.contexts.end(), rng);
        for (auto &ctx : cs.contexts) {
            std::shuffle(ctx.begin(), ctx.end(), rng);
        }
        ProofReport after = analyze(cs);
        ASSERT_EQ(after.verdict, before.verdict);
        ASSERT_EQ(after.negative_count, before.negative_count);
        ASSERT_EQ(after.occurrences, before.occurrences);
        ASSERT_EQ(wa_symbol(cs), sym);
    }
}

TEST(contextuality, doubled_pentagram_has_even_negative_count) {
    ContextSet cs = canonical_pentagram_set();
    auto copy = cs.contexts;
    cs.contexts.insert(cs.contexts.end(), copy.begin(), copy.end());
    ProofReport r = analyze(cs);
    ASSERT_EQ(r.verdict, Verdict::NotContextual);
    ASSERT_EQ(r.negative_count, 2);
    ASSERT_TRUE(r.all_even);
    ASSERT_EQ(r.diagnoses, std::vector<Diagnosis>{Diagnosis::EvenNegativeCount});
}

TEST(contextuality, dropped_edge_breaks_parity) {
    ContextSet cs = canonical_pentagram_set();
    cs.contexts.pop_back();
    ProofReport r = analyze(cs);
    ASSERT_EQ(r.verdict, Verdict::NotContextual);
    ASSERT_FALSE(r.all_even);
    ASSERT_TRUE(has(r, Diagnosis::OddOccurrence));
}

TEST(contextuality, malformed_contexts) {
    struct Case {
        std::vector<std::vector<std::string>> words;
        Diagnosis expected;
    };
    std::vector<Case> cases = {
        {{{}}, Diagnosis::EmptyContext},
        {{{"XII", "XII"}}, Diagnosis::DuplicateInContext},
        {{{"XII", "ZII", "YII"}}, Diagnosis::NonCommutingContext},
        {{{"XII", "IXI"}}, Diagnosis::NonClosedContext},
    };
    for (const auto &c : cases) {
        ContextSet cs = ContextSet::from_words(c.words);
        ProofReport r = analyze(cs);
        ASSERT_EQ(r.verdict, Verdict::MalformedContext) << diagnosis_name(c.expected);
        ASSERT_TRUE(has(r, c.expected)) << diagnosis_name(c.expected);
        ASSERT_FALSE(r.str().empty());
    }
}

TEST(contextuality, names) {
    ASSERT_EQ(verdict_name(Verdict::ValidParityProof), "ValidParityProof");
    ASSERT_EQ(verdict_name(Verdict::NotContextual), "NotContextual");
    ASSERT_EQ(verdict_name(Verdict::MalformedContext), "MalformedContext");
}
