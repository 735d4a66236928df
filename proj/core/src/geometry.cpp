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

#include "w52/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "w52/error.hpp"

namespace w52 {

namespace {

template <size_t N>
std::array<int, N> point_ids(const std::array<Observable, N> &pts) {
    std::array<int, N> ids{};
    for (size_t k = 0; k < N; k++) {
        ids[k] = pts[k].point_id();
    }
    return ids;
}

[[noreturn]] void taxonomy_violation(const Plane &p, const std::string &what) {
    std::string pts;
    for (const auto &o : p.points) {
        pts += ' ';
        pts += o.str();
    }
    throw Error(ErrorCode::TaxonomyViolation, "plane {" + pts + " }: " + what);
}

}  // namespace

std::string_view plane_class_name(PlaneClass c) {
    switch (c) {
        case PlaneClass::Negative:
            return "negative";
        case PlaneClass::PosA:
            return "a";
        case PlaneClass::PosB:
            return "b";
        case PlaneClass::PosC:
            return "c";
    }
    return "?";
}

PointMask Line::mask() const {
    return point_bit(points[0]) | point_bit(points[1]) | point_bit(points[2]);
}

bool Line::contains(const Observable &o) const {
    return (mask() & point_bit(o)) != 0;
}

PointMask Plane::mask() const {
    PointMask m = 0;
    for (const auto &o : points) {
        m |= point_bit(o);
    }
    return m;
}

bool Plane::contains(const Observable &o) const {
    return (mask() & point_bit(o)) != 0;
}

bool Plane::has_line(LineId l) const {
    return std::find(lines.begin(), lines.end(), l) != lines.end();
}

std::vector<Line> enumerate_lines() {
    std::vector<Line> result;
    for (int a = 1; a <= kNumPoints; a++) {
        for (int b = a + 1; b <= kNumPoints; b++) {
            int c = a ^ b;
            // Each line is visited three times; keep the visit with a < b < c.
            if (c < b || symplectic_form(static_cast<Coords>(a), static_cast<Coords>(b)) != 0) {
                continue;
            }
            Line line{
                0,
                {Observable::from_point_id(a), Observable::from_point_id(b), Observable::from_point_id(c)},
                Sign::Plus};
            line.sign = context_sign(line.points);
            result.push_back(line);
        }
    }
    std::sort(result.begin(), result.end(), [](const Line &x, const Line &y) {
        return point_ids(x.points) < point_ids(y.points);
    });
    for (size_t k = 0; k < result.size(); k++) {
        result[k].id = static_cast<LineId>(k);
    }
    return result;
}

std::vector<Plane> enumerate_planes(std::span<const Line> lines) {
    std::set<std::array<int, 7>> seen;
    for (const auto &line : lines) {
        Coords a = line.points[0].coords();
        Coords b = line.points[1].coords();
        for (int c = 1; c <= kNumPoints; c++) {
            auto cc = static_cast<Coords>(c);
            if (line.contains(Observable::from_point_id(c)) || symplectic_form(a, cc) != 0 ||
                symplectic_form(b, cc) != 0) {
                continue;
            }
            std::array<int, 7> pts{a, b, a ^ b, c, a ^ c, b ^ c, a ^ b ^ c};
            std::sort(pts.begin(), pts.end());
            seen.insert(pts);
        }
    }

    std::vector<Plane> result;
    result.reserve(seen.size());
    for (const auto &pts : seen) {
        Plane p;
        p.id = static_cast<PlaneId>(result.size());
        for (size_t k = 0; k < 7; k++) {
            p.points[k] = Observable::from_point_id(pts[k]);
        }
        PointMask mask = p.mask();
        size_t n = 0;
        for (const auto &line : lines) {
            if ((line.mask() & ~mask) == 0) {
                if (n == 7) {
                    taxonomy_violation(p, "more than seven lines");
                }
                p.lines[n++] = line.id;
            }
        }
        if (n != 7) {
            taxonomy_violation(p, "fewer than seven lines");
        }
        p.sign = plane_sign(p);

        PointMask b_points = 0;
        for (const auto &o : p.points) {
            if (o.type() == ObservableType::B) {
                b_points |= point_bit(o);
            }
        }
        bool found = false;
        for (LineId l : p.lines) {
            if (lines[l].mask() == b_points) {
                p.b_line = l;
                found = true;
            }
        }
        if (!found) {
            taxonomy_violation(p, "type-B observables are not exactly one line");
        }
        p.cls = classify_plane(p, lines);
        result.push_back(p);
    }
    return result;
}

Sign plane_sign(const Plane &p) {
    return context_sign(p.points);
}

std::array<Observable, 4> affine_part(const Plane &p, const Line &l) {
    if (!p.has_line(l.id) || (l.mask() & ~p.mask()) != 0) {
        throw Error(ErrorCode::LineNotInPlane, "line " + std::to_string(l.id) + " is not in plane " + std::to_string(p.id));
    }
    std::array<Observable, 4> result;
    size_t n = 0;
    for (const auto &o : p.points) {
        if (!l.contains(o)) {
            result[n++] = o;
        }
    }
    return result;
}

PlaneClass classify_plane(const Plane &p, std::span<const Line> lines) {
    auto affine = affine_part(p, lines[p.b_line]);
    int type_a = 0;
    int type_c = 0;
    for (const auto &o : affine) {
        type_a += o.type() == ObservableType::A;
        type_c += o.type() == ObservableType::C;
    }

    std::vector<const Line *> negative;
    for (LineId l : p.lines) {
        if (lines[l].sign == Sign::Minus) {
            negative.push_back(&lines[l]);
        }
    }
    // Largest number of negative lines through a single point of the plane.
    int max_concurrent = 0;
    for (const auto &o : p.points) {
        int k = 0;
        for (const Line *l : negative) {
            k += l->contains(o);
        }
        max_concurrent = std::max(max_concurrent, k);
    }

    if (p.sign == Sign::Minus) {
        if (type_c != 4) {
            taxonomy_violation(p, "negative plane with a non-C affine observable");
        }
        if (negative.size() != 3) {
            taxonomy_violation(p, "negative plane without exactly three negative lines");
        }
        PointMask common = negative[0]->mask() & negative[1]->mask() & negative[2]->mask();
        if (std::popcount(common) != 1) {
            taxonomy_violation(p, "negative lines of a negative plane are not concurrent");
        }
        return PlaneClass::Negative;
    }
    if (type_a == 1 && type_c == 3) {
        if (negative.empty()) {
            return PlaneClass::PosB;
        }
        if (negative.size() != 4 || max_concurrent > 2) {
            taxonomy_violation(p, "positive plane with negative lines other than four non-concurrent ones");
        }
        return PlaneClass::PosA;
    }
    if (type_a == 3 && type_c == 1) {
        return PlaneClass::PosC;
    }
    taxonomy_violation(p, "positive plane with an unexpected affine type pattern");
}

Space::Space() : lines_(enumerate_lines()), planes_(enumerate_planes(lines_)) {
    for (auto &row : line_by_pair_) {
        row.fill(-1);
    }
    for (const auto &l : lines_) {
        for (const auto &o : l.points) {
            lines_by_point_[o.point_id()].push_back(l.id);
        }
        for (const auto &a : l.points) {
            for (const auto &b : l.points) {
                if (a != b) {
                    line_by_pair_[a.point_id()][b.point_id()] = static_cast<std::int16_t>(l.id);
                }
            }
        }
    }
    std::vector<int> fill(lines_.size(), 0);
    planes_by_line_.assign(lines_.size(), {0, 0, 0});
    for (const auto &p : planes_) {
        for (const auto &o : p.points) {
            planes_by_point_[o.point_id()].push_back(p.id);
        }
        for (LineId l : p.lines) {
            if (fill[l] == 3) {
                throw Error(ErrorCode::TaxonomyViolation, "line " + std::to_string(l) + " lies in more than three planes");
            }
            planes_by_line_[l][fill[l]++] = p.id;
        }
        plane_index_.emplace_back(p.mask(), p.id);
    }
    std::sort(plane_index_.begin(), plane_index_.end());
}

const Space &Space::get() {
    static const Space space;
    return space;
}

const Line &Space::line(int id) const {
    if (id < 0 || id >= static_cast<int>(lines_.size())) {
        throw Error(ErrorCode::UnknownId, "line id " + std::to_string(id) + " is outside 0..314");
    }
    return lines_[id];
}

const Plane &Space::plane(int id) const {
    if (id < 0 || id >= static_cast<int>(planes_.size())) {
        throw Error(ErrorCode::UnknownId, "plane id " + std::to_string(id) + " is outside 0..134");
    }
    return planes_[id];
}

std::span<const LineId> Space::lines_through(const Observable &o) const {
    return lines_by_point_[o.point_id()];
}

std::span<const PlaneId> Space::planes_through(const Observable &o) const {
    return planes_by_point_[o.point_id()];
}

const std::array<PlaneId, 3> &Space::planes_through(const Line &l) const {
    return planes_by_line_[l.id];
}

std::span<const LineId> Space::lines_through_point(int point_id) const {
    return lines_through(Observable::from_point_id(point_id));
}

std::span<const PlaneId> Space::planes_through_point(int point_id) const {
    return planes_through(Observable::from_point_id(point_id));
}

const std::array<PlaneId, 3> &Space::planes_through_line(int line_id) const {
    return planes_through(line(line_id));
}

std::optional<LineId> Space::line_through(const Observable &a, const Observable &b) const {
    std::int16_t l = line_by_pair_[a.point_id()][b.point_id()];
    if (l < 0) {
        return std::nullopt;
    }
    return static_cast<LineId>(l);
}

std::optional<PlaneId> Space::find_plane(PointMask mask) const {
    auto it = std::lower_bound(
        plane_index_.begin(), plane_index_.end(), mask, [](const auto &entry, PointMask m) {
            return entry.first < m;
        });
    if (it == plane_index_.end() || it->first != mask) {
        return std::nullopt;
    }
    return it->second;
}

std::array<Observable, 4> Space::affine_part(const Plane &p, LineId l) const {
    return w52::affine_part(p, line(l));
}

}  // namespace w52
