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

#include "w52/pentads.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>
#include <thread>

#include "w52/error.hpp"

namespace w52 {

namespace {

constexpr std::array<std::array<int, 5>, 5> kMeetIndex = {{
    {-1, 0, 1, 2, 3},
    {0, -1, 4, 5, 6},
    {1, 4, -1, 7, 8},
    {2, 5, 7, -1, 9},
    {3, 6, 8, 9, -1},
}};

Observable lowest_point(PointMask m) {
    return Observable::from_point_id(std::countr_zero(m));
}

std::string plane_list(const std::array<PlaneId, 5> &planes) {
    std::string s;
    for (PlaneId p : planes) {
        s += s.empty() ? "" : ",";
        s += std::to_string(p);
    }
    return s;
}

/// Fixed 135-bit set of plane ids.
class PlaneSet {
   public:
    void set(int i) {
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    PlaneSet operator&(const PlaneSet &o) const {
        PlaneSet r;
        for (size_t k = 0; k < kWords; k++) {
            r.words_[k] = words_[k] & o.words_[k];
        }
        return r;
    }
    template <typename F>
    void for_each(F &&f) const {
        for (size_t k = 0; k < kWords; k++) {
            for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
            }
        }
    }

   private:
    static constexpr size_t kWords = (kNumPlanes + 63) / 64;
    std::array<std::uint64_t, kWords> words_{};
};

/// Precomputed search tables shared by all workers.
struct SearchTables {
    std::array<PointMask, kNumPlanes> masks{};
    std::array<PlaneSet, kNumPlanes> single_meet;
    std::array<PlaneSet, kNumPlanes> later;

    explicit SearchTables(const Space &space) {
        for (const auto &p : space.planes()) {
            masks[p.id] = p.mask();
        }
        for (int i = 0; i < kNumPlanes; i++) {
            for (int j = 0; j < kNumPlanes; j++) {
                if (i != j && std::popcount(masks[i] & masks[j]) == 1) {
                    single_meet[i].set(j);
                }
                if (j > i) {
                    later[i].set(j);
                }
            }
        }
    }
};

class PentadSearch {
   public:
    PentadSearch(const Space &space, const SearchTables &tables) : space_(space), tables_(tables) {
    }

    void run_from(int first, std::vector<Pentad> &out) {
        chosen_[0] = first;
        extend(1, tables_.single_meet[first] & tables_.later[first], 0, out);
    }

   private:
    void extend(int depth, const PlaneSet &candidates, PointMask used_meets, std::vector<Pentad> &out) {
        if (depth == 5) {
            accept(out);
            return;
        }
        candidates.for_each([&](int j) {
            PointMask meets = used_meets;
            for (int k = 0; k < depth; k++) {
                PointMask m = tables_.masks[chosen_[k]] & tables_.masks[j];
                if ((meets & m) != 0) {
                    return;
                }
                meets |= m;
            }
            chosen_[depth] = j;
            extend(depth + 1, candidates & tables_.single_meet[j] & tables_.later[j], meets, out);
        });
    }

    void accept(std::vector<Pentad> &out) {
        std::array<PlaneId, 5> planes{};
        for (int k = 0; k < 5; k++) {
            planes[k] = static_cast<PlaneId>(chosen_[k]);
        }
        Pentad p;
        p.planes = planes;
        for (int i = 0; i < 5; i++) {
            for (int j = i + 1; j < 5; j++) {
                p.meets[kMeetIndex[i][j]] = lowest_point(tables_.masks[planes[i]] & tables_.masks[planes[j]]);
            }
        }
        for (int k = 0; k < 5; k++) {
            PointMask shared = 0;
            for (const auto &o : p.shared_points(k)) {
                shared |= point_bit(o);
            }
            PointMask rest = tables_.masks[planes[k]] & ~shared;
            Observable a = lowest_point(rest);
            rest &= rest - 1;
            Observable b = lowest_point(rest);
            auto line = space_.line_through(a, b);
            if (!line.has_value() || space_.line(*line).mask() != (tables_.masks[planes[k]] & ~shared)) {
                return;
            }
            p.distinguished[k] = *line;
        }
        out.push_back(p);
    }

    const Space &space_;
    const SearchTables &tables_;
    std::array<int, 5> chosen_{};
};

}  // namespace

int meet_index(int i, int j) {
    return kMeetIndex.at(i).at(j);
}

Observable Pentad::meet(int i, int j) const {
    return meets[meet_index(i, j)];
}

std::array<Observable, 4> Pentad::shared_points(int k) const {
    std::array<Observable, 4> result;
    int n = 0;
    for (int other = 0; other < 5; other++) {
        if (other != k) {
            result[n++] = meet(k, other);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Pentad make_pentad(const Space &space, std::array<PlaneId, 5> planes) {
    std::sort(planes.begin(), planes.end());
    for (PlaneId id : planes) {
        space.plane(id);
    }
    Pentad p;
    p.planes = planes;
    PointMask used = 0;
    for (int i = 0; i < 5; i++) {
        for (int j = i + 1; j < 5; j++) {
            PointMask m = space.plane(planes[i]).mask() & space.plane(planes[j]).mask();
            if (std::popcount(m) != 1 || (used & m) != 0) {
                throw Error(
                    ErrorCode::NotAPentad,
                    "planes {" + plane_list(planes) + "} do not meet pairwise in distinct single points");
            }
            used |= m;
            p.meets[kMeetIndex[i][j]] = lowest_point(m);
        }
    }
    for (int k = 0; k < 5; k++) {
        const Plane &plane = space.plane(planes[k]);
        PointMask shared = 0;
        for (const auto &o : p.shared_points(k)) {
            shared |= point_bit(o);
        }
        bool found = false;
        for (LineId l : plane.lines) {
            if (space.line(l).mask() == (plane.mask() & ~shared)) {
                p.distinguished[k] = l;
                found = true;
            }
        }
        if (!found) {
            throw Error(
                ErrorCode::NotAPentad,
                "shared points of plane " + std::to_string(planes[k]) + " are not the complement of a line");
        }
    }
    return p;
}

std::vector<Pentad> enumerate_pentads(const Space &space, unsigned threads) {
    SearchTables tables(space);
    threads = std::max(1u, threads);
    std::vector<std::vector<Pentad>> parts(threads);
    auto work = [&](unsigned worker) {
        PentadSearch search(space, tables);
        for (int first = static_cast<int>(worker); first < kNumPlanes; first += static_cast<int>(threads)) {
            search.run_from(first, parts[worker]);
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
    }
    std::vector<Pentad> result;
    for (auto &part : parts) {
        result.insert(result.end(), part.begin(), part.end());
    }
    std::sort(result.begin(), result.end());
    return result;
}

int Pentagram::negative_edges() const {
    return static_cast<int>(std::count(edge_signs.begin(), edge_signs.end(), Sign::Minus));
}

Pentagram make_pentagram(const std::array<std::array<Observable, 4>, 5> &edges) {
    Pentagram g;
    g.edges = edges;
    for (auto &e : g.edges) {
        std::sort(e.begin(), e.end());
    }
    std::sort(g.edges.begin(), g.edges.end());

    std::map<Observable, int> occurrences;
    for (int k = 0; k < 5; k++) {
        ContextEvaluation eval = evaluate_context(g.edges[k]);
        if (!eval.sign.has_value()) {
            throw Error(
                ErrorCode::NotAPentagram,
                "edge " + std::to_string(k) + " is not a commuting set of distinct observables with product +-I");
        }
        g.edge_signs[k] = *eval.sign;
        for (const auto &o : g.edges[k]) {
            occurrences[o]++;
        }
    }
    if (occurrences.size() != 10) {
        throw Error(ErrorCode::NotAPentagram, "expected 10 observables, got " + std::to_string(occurrences.size()));
    }
    int n = 0;
    for (const auto &[o, count] : occurrences) {
        if (count != 2) {
            throw Error(ErrorCode::NotAPentagram, o.str() + " lies on " + std::to_string(count) + " edges instead of 2");
        }
        g.observables[n++] = o;
    }
    if (g.negative_edges() % 2 == 0) {
        throw Error(ErrorCode::NotAPentagram, "even number of negative edges");
    }
    return g;
}

Pentagram pentad_to_pentagram(const Pentad &p) {
    std::array<std::array<Observable, 4>, 5> edges;
    for (int k = 0; k < 5; k++) {
        edges[k] = p.shared_points(k);
    }
    try {
        return make_pentagram(edges);
    } catch (const Error &e) {
        throw Error(ErrorCode::TaxonomyViolation, "pentad {" + plane_list(p.planes) + "}: " + e.what());
    }
}

Pentad pentagram_to_pentad(const Space &space, const Pentagram &g) {
    std::array<PlaneId, 5> planes{};
    for (int k = 0; k < 5; k++) {
        const auto &e = g.edges[k];
        PointMask closure = 0;
        for (size_t i = 0; i < e.size(); i++) {
            closure |= point_bit(e[i]);
            for (size_t j = i + 1; j < e.size(); j++) {
                auto sum = static_cast<Coords>(e[i].coords() ^ e[j].coords());
                if (sum == 0) {
                    throw Error(ErrorCode::ClosureNotIsotropicPlane, "edge repeats an observable");
                }
                closure |= point_bit(Observable::from_coords(sum));
            }
        }
        auto plane = space.find_plane(closure);
        if (!plane.has_value()) {
            throw Error(
                ErrorCode::ClosureNotIsotropicPlane,
                "closure of edge " + std::to_string(k) + " is not a plane of W(5,2)");
        }
        planes[k] = *plane;
    }
    return make_pentad(space, planes);
}

int ContextualConfig::negative_contexts() const {
    return static_cast<int>(std::count(context_signs.begin(), context_signs.end(), Sign::Minus));
}

ContextualConfig pentad_to_config(const Space &space, const Pentad &p) {
    ContextualConfig c;
    PointMask all = 0;
    int n = 0;
    for (int k = 0; k < 5; k++) {
        const Plane &plane = space.plane(p.planes[k]);
        all |= plane.mask();
        std::array<LineId, 7> lines = plane.lines;
        std::sort(lines.begin(), lines.end());
        for (LineId l : lines) {
            if (l != p.distinguished[k]) {
                c.contexts[n] = l;
                c.context_signs[n] = space.line(l).sign;
                n++;
            }
        }
    }
    if (std::popcount(all) != 25) {
        throw Error(
            ErrorCode::TaxonomyViolation,
            "pentad {" + plane_list(p.planes) + "} covers " + std::to_string(std::popcount(all)) + " points");
    }
    for (int k = 0; all != 0; k++, all &= all - 1) {
        c.observables[k] = lowest_point(all);
    }
    return c;
}

}  // namespace w52
