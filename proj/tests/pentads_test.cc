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
#include <set>

#include "gtest/gtest.h"
#include "oracle/dense.hpp"
#include "test_util.hpp"
#include "w52/error.hpp"

using namespace w52;
using w52::testing::canonical_pentagram_edges;
using w52::testing::census_pentads;
using w52::testing::obs;

namespace {

ErrorCode error_code(auto &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    return ErrorCode::Io;
}

}  // namespace

TEST(pentads, count_and_order) {
    const auto &pentads = census_pentads();
    ASSERT_EQ(pentads.size(), static_cast<size_t>(kNumPentads));
    ASSERT_TRUE(std::is_sorted(pentads.begin(), pentads.end()));
    ASSERT_EQ(std::adjacent_find(pentads.begin(), pentads.end()), pentads.end());
    for (const auto &p : pentads) {
        ASSERT_TRUE(std::is_sorted(p.planes.begin(), p.planes.end()));
    }
}

TEST(pentads, enumeration_is_independent_of_thread_count) {
    auto sequential = enumerate_pentads(Space::get(), 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        auto parallel = enumerate_pentads(Space::get(), threads);
        ASSERT_EQ(parallel.size(), sequential.size());
        for (size_t k = 0; k < sequential.size(); k++) {
            ASSERT_EQ(parallel[k].planes, sequential[k].planes);
            ASSERT_EQ(parallel[k].meets, sequential[k].meets);
            ASSERT_EQ(parallel[k].distinguished, sequential[k].distinguished);
        }
    }
}

TEST(pentads, structure_of_every_pentad) {
    const Space &s = Space::get();
    std::map<PlaneId, int> through_plane;
    for (const auto &p : census_pentads()) {
        std::set<Observable> meets(p.meets.begin(), p.meets.end());
        ASSERT_EQ(meets.size(), 10u);
        PointMask distinguished_points = 0;
        for (int k = 0; k < 5; k++) {
            through_plane[p.planes[k]]++;
            const Plane &plane = s.plane(p.planes[k]);
            ASSERT_TRUE(plane.has_line(p.distinguished[k]));
            PointMask shared = 0;
            for (const auto &o : p.shared_points(k)) {
                shared |= point_bit(o);
            }
            ASSERT_EQ(shared | s.line(p.distinguished[k]).mask(), plane.mask());
            ASSERT_EQ(shared & s.line(p.distinguished[k]).mask(), 0u);
            for (int j = 0; j < 5; j++) {
                if (j != k) {
                    ASSERT_EQ(
                        plane.mask() & s.plane(p.planes[j]).mask(), point_bit(p.meet(k, j)));
                }
            }
            ASSERT_EQ(distinguished_points & s.line(p.distinguished[k]).mask(), 0u);
            distinguished_points |= s.line(p.distinguished[k]).mask();
        }
        // 15 distinct distinguished-line points, disjoint from the 10 meets.
        ASSERT_EQ(std::popcount(distinguished_points), 15);
        for (const auto &m : p.meets) {
            ASSERT_EQ(distinguished_points & point_bit(m), 0u);
        }
        ASSERT_EQ(make_pentad(s, p.planes).meets, p.meets);
    }
    // Observed: every plane lies in exactly 12096 * 5 / 135 = 448 pentads.
    ASSERT_EQ(through_plane.size(), static_cast<size_t>(kNumPlanes));
    for (const auto &[plane, n] : through_plane) {
        ASSERT_EQ(n, 448) << "plane " << plane;
    }
}

TEST(pentads, canonical_pentagram) {
    const Space &s = Space::get();
    auto edges = canonical_pentagram_edges();
    for (int k = 0; k < 5; k++) {
        Sign expected = k == 4 ? Sign::Minus : Sign::Plus;
        ASSERT_EQ(oracle::dense_product_sign(edges[k]), expected);
    }
    Pentagram g = make_pentagram(edges);
    ASSERT_EQ(g.negative_edges(), 1);
    for (size_t k = 0; k < 5; k++) {
        std::array<Observable, 4> mermin = {obs("XXX"), obs("XYY"), obs("YXY"), obs("YYX")};
        std::sort(mermin.begin(), mermin.end());
        ASSERT_EQ(g.edge_signs[k] == Sign::Minus, g.edges[k] == mermin);
    }

    Pentad p = pentagram_to_pentad(s, g);
    ASSERT_EQ(pentad_to_pentagram(p), g);
    ASSERT_TRUE(std::binary_search(census_pentads().begin(), census_pentads().end(), p));
    for (int k = 0; k < 5; k++) {
        ASSERT_EQ(oracle::dense_product_sign(s.plane(p.planes[k]).points), s.plane(p.planes[k]).sign);
    }
}

TEST(pentads, pentagram_round_trip_and_injectivity) {
    const Space &s = Space::get();
    std::set<std::array<std::array<Observable, 4>, 5>> seen;
    for (const auto &p : census_pentads()) {
        Pentagram g = pentad_to_pentagram(p);
        ASSERT_EQ(g.negative_edges() % 2, 1);
        std::map<Observable, int> occurrences;
        for (const auto &e : g.edges) {
            for (const auto &o : e) {
                occurrences[o]++;
            }
        }
        ASSERT_EQ(occurrences.size(), 10u);
        for (const auto &[o, n] : occurrences) {
            ASSERT_EQ(n, 2);
        }
        ASSERT_EQ(pentagram_to_pentad(s, g), p);
        seen.insert(g.edges);
    }
    ASSERT_EQ(seen.size(), static_cast<size_t>(kNumPentads));
}

TEST(pentads, configuration_of_every_pentad) {
    const Space &s = Space::get();
    for (const auto &p : census_pentads()) {
        ContextualConfig c = pentad_to_config(s, p);
        ASSERT_TRUE(std::is_sorted(c.observables.begin(), c.observables.end()));
        ASSERT_EQ(std::adjacent_find(c.observables.begin(), c.observables.end()), c.observables.end());
        std::set<LineId> lines(c.contexts.begin(), c.contexts.end());
        ASSERT_EQ(lines.size(), 30u);

        std::map<Observable, int> occurrences;
        for (size_t k = 0; k < c.contexts.size(); k++) {
            const Line &l = s.line(c.contexts[k]);
            ASSERT_EQ(c.context_signs[k], l.sign);
            for (const auto &o : l.points) {
                occurrences[o]++;
            }
        }
        ASSERT_EQ(occurrences.size(), 25u);
        std::set<Observable> meets(p.meets.begin(), p.meets.end());
        for (const auto &[o, n] : occurrences) {
            ASSERT_EQ(n, meets.contains(o) ? 6 : 2);
        }
        int negative = c.negative_contexts();
        ASSERT_EQ(negative % 2, 1);
        ASSERT_GE(negative, 3);
        ASSERT_LE(negative, 17);
    }
}

TEST(pentads, make_pentad_errors) {
    const Space &s = Space::get();
    ASSERT_EQ(error_code([&] { make_pentad(s, {0, 1, 2, 3, 4}); }), ErrorCode::NotAPentad);
    ASSERT_EQ(error_code([&] { make_pentad(s, {0, 1, 2, 3, 135}); }), ErrorCode::UnknownId);
    // Any order of a valid pentad's planes is accepted.
    auto planes = census_pentads()[17].planes;
    std::reverse(planes.begin(), planes.end());
    ASSERT_EQ(make_pentad(s, planes), census_pentads()[17]);
}

TEST(pentads, make_pentagram_errors) {
    auto edges = canonical_pentagram_edges();
    auto bad_edge = edges;
    bad_edge[0] = {obs("XII"), obs("ZII"), obs("IIY"), obs("XYY")};
    ASSERT_EQ(error_code([&] { make_pentagram(bad_edge); }), ErrorCode::NotAPentagram);

    // A valid context used twice breaks the occurrence profile.
    auto repeated = edges;
    repeated[1] = edges[0];
    ASSERT_EQ(error_code([&] { make_pentagram(repeated); }), ErrorCode::NotAPentagram);
}

TEST(pentads, pentagram_to_pentad_errors) {
    const Space &s = Space::get();
    Pentagram g = make_pentagram(canonical_pentagram_edges());
    Pentagram not_isotropic = g;
    not_isotropic.edges[0] = {obs("XII"), obs("ZII"), obs("IIY"), obs("XYY")};
    ASSERT_EQ(error_code([&] { pentagram_to_pentad(s, not_isotropic); }), ErrorCode::ClosureNotIsotropicPlane);

    // Five contexts spanning planes that do not form a pentad.
    Pentagram same_plane = g;
    for (auto &e : same_plane.edges) {
        e = g.edges[0];
    }
    ASSERT_EQ(error_code([&] { pentagram_to_pentad(s, same_plane); }), ErrorCode::NotAPentad);
}
