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
#include <functional>
#include <sstream>

namespace w52 {

namespace {

std::vector<std::pair<int, int>> profile(const std::map<int, int> &counts) {
    std::vector<std::pair<int, int>> result;
    for (const auto &[subscript, n] : counts) {
        result.emplace_back(subscript, n);
    }
    std::sort(result.begin(), result.end(), std::greater<>());
    return result;
}

void render(std::ostream &out, const std::vector<std::pair<int, int>> &part) {
    bool first = true;
    for (const auto &[subscript, n] : part) {
        out << (first ? "" : " ") << n << '_' << subscript;
        first = false;
    }
}

}  // namespace

ContextSet ContextSet::from_words(const std::vector<std::vector<std::string>> &words) {
    ContextSet cs;
    for (const auto &ctx : words) {
        auto &out = cs.contexts.emplace_back();
        for (const auto &w : ctx) {
            out.push_back(Observable::parse(w));
        }
    }
    return cs;
}

ContextSet context_set(const Pentagram &g) {
    ContextSet cs;
    for (const auto &e : g.edges) {
        cs.contexts.emplace_back(e.begin(), e.end());
    }
    return cs;
}

ContextSet context_set(const Space &space, const ContextualConfig &c) {
    ContextSet cs;
    for (LineId l : c.contexts) {
        const auto &pts = space.line(l).points;
        cs.contexts.emplace_back(pts.begin(), pts.end());
    }
    return cs;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::ValidParityProof:
            return "ValidParityProof";
        case Verdict::NotContextual:
            return "NotContextual";
        case Verdict::MalformedContext:
            return "MalformedContext";
    }
    return "?";
}

std::string_view diagnosis_name(Diagnosis d) {
    switch (d) {
        case Diagnosis::EmptyContext:
            return "EmptyContext";
        case Diagnosis::DuplicateInContext:
            return "DuplicateInContext";
        case Diagnosis::NonCommutingContext:
            return "NonCommutingContext";
        case Diagnosis::NonClosedContext:
            return "NonClosedContext";
        case Diagnosis::OddOccurrence:
            return "OddOccurrence";
        case Diagnosis::EvenNegativeCount:
            return "EvenNegativeCount";
    }
    return "?";
}

ProofReport analyze(const ContextSet &cs) {
    ProofReport r;
    bool malformed = false;
    auto diagnose = [&](Diagnosis d) {
        if (std::find(r.diagnoses.begin(), r.diagnoses.end(), d) == r.diagnoses.end()) {
            r.diagnoses.push_back(d);
        }
    };
    for (const auto &ctx : cs.contexts) {
        ContextReport c;
        if (ctx.empty()) {
            malformed = true;
            diagnose(Diagnosis::EmptyContext);
            r.contexts.push_back(c);
            continue;
        }
        ContextEvaluation e = evaluate_context(ctx);
        c.duplicate_free = e.duplicate_free;
        c.commuting = e.commuting;
        c.closed = e.closed;
        c.sign = e.sign;
        if (!e.duplicate_free) {
            diagnose(Diagnosis::DuplicateInContext);
        }
        if (!e.commuting) {
            diagnose(Diagnosis::NonCommutingContext);
        }
        if (!e.closed) {
            diagnose(Diagnosis::NonClosedContext);
        }
        if (!c.sign.has_value()) {
            malformed = true;
        } else if (*c.sign == Sign::Minus) {
            r.negative_count++;
        }
        for (const auto &o : ctx) {
            r.occurrences[o]++;
        }
        r.contexts.push_back(c);
    }
    r.all_even = std::all_of(r.occurrences.begin(), r.occurrences.end(), [](const auto &kv) {
        return kv.second % 2 == 0;
    });
    r.odd_negative = r.negative_count % 2 == 1;
    if (!r.all_even) {
        diagnose(Diagnosis::OddOccurrence);
    }
    if (!r.odd_negative) {
        diagnose(Diagnosis::EvenNegativeCount);
    }
    if (malformed) {
        r.verdict = Verdict::MalformedContext;
    } else if (r.all_even && r.odd_negative) {
        r.verdict = Verdict::ValidParityProof;
    } else {
        r.verdict = Verdict::NotContextual;
    }
    return r;
}

std::string ProofReport::str() const {
    std::ostringstream out;
    out << "contexts: " << contexts.size() << "\n";
    for (size_t k = 0; k < contexts.size(); k++) {
        const auto &c = contexts[k];
        out << "  [" << k << "] commuting=" << (c.commuting ? "yes" : "no") << " closed=" << (c.closed ? "yes" : "no");
        if (!c.duplicate_free) {
            out << " duplicate";
        }
        out << " sign=" << (c.sign.has_value() ? std::string(1, sign_char(*c.sign)) : std::string("none")) << "\n";
    }
    out << "observables: " << occurrences.size() << "\n";
    out << "negative contexts: " << negative_count << "\n";
    out << "all occurrences even: " << (all_even ? "yes" : "no") << "\n";
    out << "odd negative count: " << (odd_negative ? "yes" : "no") << "\n";
    out << "verdict: " << verdict_name(verdict) << "\n";
    for (Diagnosis d : diagnoses) {
        out << "diagnosis: " << diagnosis_name(d) << "\n";
    }
    return out.str();
}

WASymbol wa_symbol(const ContextSet &cs) {
    std::map<Observable, int> occurrences;
    std::map<int, int> sizes;
    for (const auto &ctx : cs.contexts) {
        sizes[static_cast<int>(ctx.size())]++;
        for (const auto &o : ctx) {
            occurrences[o]++;
        }
    }
    std::map<int, int> by_occurrence;
    for (const auto &[o, k] : occurrences) {
        by_occurrence[k]++;
    }
    return {profile(by_occurrence), profile(sizes)};
}

std::string WASymbol::str() const {
    std::ostringstream out;
    render(out, point_part);
    out << " − ";
    render(out, context_part);
    return out.str();
}

}  // namespace w52
