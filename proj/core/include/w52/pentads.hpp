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

#ifndef W52_PENTADS_HPP
#define W52_PENTADS_HPP

#include <array>
#include <compare>
#include <vector>

#include "w52/geometry.hpp"

namespace w52 {

inline constexpr int kNumPentads = 12096;

/// Five Fano planes meeting pairwise in single, pairwise distinct points such
/// that the four meet points inside each plane are the complement of one of
/// its lines (the distinguished line).
///
/// Planes are kept in increasing id order. `meets` lists the meet point of
/// every plane pair (i, j), i < j, in the order (0,1) (0,2) (0,3) (0,4) (1,2)
/// (1,3) (1,4) (2,3) (2,4) (3,4).
struct Pentad {
    std::array<PlaneId, 5> planes{};
    std::array<Observable, 10> meets;
    std::array<LineId, 5> distinguished{};

    Observable meet(int i, int j) const;
    /// The four meet points lying in plane slot k, in increasing point order.
    std::array<Observable, 4> shared_points(int k) const;

    bool operator==(const Pentad &other) const {
        return planes == other.planes;
    }
    auto operator<=>(const Pentad &other) const {
        return planes <=> other.planes;
    }
};

/// Index into `Pentad::meets` of the pair (i, j), i != j.
int meet_index(int i, int j);

/// Validates five plane ids as a pentad and fills in meets and distinguished
/// lines. The ids may come in any order. Throws NotAPentad when the planes do
/// not form a pentad and UnknownId on a bad plane id.
Pentad make_pentad(const Space &space, std::array<PlaneId, 5> planes);

/// All pentads sorted by plane 5-tuple. The search is a depth-first extension
/// of increasing plane sequences over the "meet in exactly one point" graph,
/// pruned as soon as two plane pairs share a meet point. With threads > 1 the
/// work is split by the first plane; the result is identical for any count.
std::vector<Pentad> enumerate_pentads(const Space &space, unsigned threads = 1);

/// Ten observables on five 4-element contexts. Edges are kept with their
/// points sorted and the edges themselves in lexicographic order, so equal
/// pentagrams compare equal.
struct Pentagram {
    std::array<Observable, 10> observables;
    std::array<std::array<Observable, 4>, 5> edges;
    std::array<Sign, 5> edge_signs{};

    int negative_edges() const;
    bool operator==(const Pentagram &) const = default;
};

/// Builds a pentagram from five edges, checking that every edge is a
/// commuting set with product +-I, that ten observables each appear on two
/// edges and that the number of negative edges is odd. Throws NotAPentagram.
Pentagram make_pentagram(const std::array<std::array<Observable, 4>, 5> &edges);

Pentagram pentad_to_pentagram(const Pentad &p);

/// Closes every edge to a Fano plane and rebuilds the pentad. Throws
/// ClosureNotIsotropicPlane when an edge does not span a plane of the space
/// and NotAPentad when the five planes are not a pentad.
Pentad pentagram_to_pentad(const Space &space, const Pentagram &g);

/// The 25-observable, 30-context configuration obtained by dropping each
/// plane's distinguished line while keeping its points.
struct ContextualConfig {
    /// Increasing point order.
    std::array<Observable, 25> observables;
    /// Plane-major: six lines per pentad plane slot, each group in line order.
    std::array<LineId, 30> contexts{};
    std::array<Sign, 30> context_signs{};

    int negative_contexts() const;
    bool operator==(const ContextualConfig &) const = default;
};

ContextualConfig pentad_to_config(const Space &space, const Pentad &p);

}  // namespace w52

#endif
