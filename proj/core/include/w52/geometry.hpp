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

#ifndef W52_GEOMETRY_HPP
#define W52_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "w52/pauli.hpp"

namespace w52 {

inline constexpr int kNumLines = 315;
inline constexpr int kNumPlanes = 135;

using LineId = std::uint16_t;
using PlaneId = std::uint16_t;

/// Set of points as a 64-bit mask, bit k standing for point id k.
using PointMask = std::uint64_t;

constexpr PointMask point_bit(const Observable &o) {
    return PointMask{1} << o.point_id();
}

/// A totally isotropic line: three pairwise commuting points summing to zero.
struct Line {
    LineId id = 0;
    std::array<Observable, 3> points;
    Sign sign = Sign::Plus;

    PointMask mask() const;
    bool contains(const Observable &o) const;
};

enum class PlaneClass : std::uint8_t { Negative, PosA, PosB, PosC };

std::string_view plane_class_name(PlaneClass c);

/// A Fano plane of W(5,2) with its seven lines, the line carrying its three
/// type-B observables, its sign and its class.
struct Plane {
    PlaneId id = 0;
    std::array<Observable, 7> points;
    std::array<LineId, 7> lines{};
    Sign sign = Sign::Plus;
    LineId b_line = 0;
    PlaneClass cls = PlaneClass::Negative;

    PointMask mask() const;
    bool contains(const Observable &o) const;
    bool has_line(LineId l) const;
};

/// Every line {a, b, a^b} with sigma(a, b) = 0, sorted by point triple, with
/// ids equal to their rank.
std::vector<Line> enumerate_lines();

/// Every totally isotropic plane, sorted by point 7-tuple, with lines, sign,
/// b_line and class filled in. `lines` must be the output of enumerate_lines.
std::vector<Plane> enumerate_planes(std::span<const Line> lines);

/// Product sign of the seven observables of a plane.
Sign plane_sign(const Plane &p);

/// The four points of `p` off line `l`. Throws LineNotInPlane.
std::array<Observable, 4> affine_part(const Plane &p, const Line &l);

/// Classifies a plane whose points, lines, sign and b_line are set. Throws
/// TaxonomyViolation when the plane does not fit the four known classes.
PlaneClass classify_plane(const Plane &p, std::span<const Line> lines);

/// Immutable indexed tables of points, lines and planes of W(5,2).
class Space {
   public:
    Space();

    /// Process-wide instance, built on first use.
    static const Space &get();

    std::span<const Line> lines() const {
        return lines_;
    }
    std::span<const Plane> planes() const {
        return planes_;
    }

    /// Throws UnknownId.
    const Line &line(int id) const;
    const Plane &plane(int id) const;

    std::span<const LineId> lines_through(const Observable &o) const;
    std::span<const PlaneId> planes_through(const Observable &o) const;
    const std::array<PlaneId, 3> &planes_through(const Line &l) const;

    /// Incidence by raw id; throws UnknownId.
    std::span<const LineId> lines_through_point(int point_id) const;
    std::span<const PlaneId> planes_through_point(int point_id) const;
    const std::array<PlaneId, 3> &planes_through_line(int line_id) const;

    /// The line through two distinct commuting points, if any.
    std::optional<LineId> line_through(const Observable &a, const Observable &b) const;
    /// The plane with exactly this point set, if any.
    std::optional<PlaneId> find_plane(PointMask mask) const;

    std::array<Observable, 4> affine_part(const Plane &p, LineId l) const;

   private:
    std::vector<Line> lines_;
    std::vector<Plane> planes_;
    std::array<std::vector<LineId>, kNumPoints + 1> lines_by_point_;
    std::array<std::vector<PlaneId>, kNumPoints + 1> planes_by_point_;
    std::vector<std::array<PlaneId, 3>> planes_by_line_;
    std::vector<std::pair<PointMask, PlaneId>> plane_index_;
    std::array<std::array<std::int16_t, kNumPoints + 1>, kNumPoints + 1> line_by_pair_{};
};

}  // namespace w52

#endif
