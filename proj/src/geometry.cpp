// SPDX-License-Identifier: Apache-2.0
//
// acoc-sim: air-to-ground cooperative OAM link simulator
// Copyright (C) 2026 The acoc-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "acoc/geometry.hpp"

#include "acoc/beam.hpp"

#include <algorithm>

namespace acoc
{
    namespace
    {
        double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

        // Orientation of r relative to the directed line p -> q: +1 left, -1 right, 0 on the line
        // (within a tolerance relative to the segment lengths involved).
        int orientation(const GroundPoint &p, const GroundPoint &q, const GroundPoint &r)
        {
            const double ux = q.x - p.x, uy = q.y - p.y;
            const double vx = r.x - p.x, vy = r.y - p.y;
            const double c = cross2(ux, uy, vx, vy);
            const double tol = 1e-12 * std::hypot(ux, uy) * std::hypot(vx, vy);
            if (c > tol)
                return 1;
            if (c < -tol)
                return -1;
            return 0;
        }

        bool within_box(const GroundPoint &p, const GroundPoint &q, const GroundPoint &r)
        {
            return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
                   r.y <= std::max(p.y, q.y);
        }

        // Closed-segment intersection test.
        bool segments_intersect(const GroundPoint &a, const GroundPoint &b, const GroundPoint &c,
                                const GroundPoint &d)
        {
            const int o1 = orientation(a, b, c);
            const int o2 = orientation(a, b, d);
            const int o3 = orientation(c, d, a);
            const int o4 = orientation(c, d, b);
            if (o1 * o2 < 0 && o3 * o4 < 0)
                return true;
            return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
                   (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
        }

        bool simple_cycle(const std::array<GroundPoint, 4> &v)
        {
            for (std::size_t i = 0; i < 4; ++i)
                if (orientation(v[(i + 3) % 4], v[i], v[(i + 1) % 4]) == 0)
                    return false;
            return !segments_intersect(v[0], v[1], v[2], v[3]) && !segments_intersect(v[1], v[2], v[3], v[0]);
        }
    } // namespace

    double distance(const GroundPoint &a, const GroundPoint &b) { return std::hypot(b.x - a.x, b.y - a.y); }

    GroundPoint chord_midpoint(const GroundPoint &p, const GroundPoint &q)
    {
        if (p == q)
            throw GeometryError("degenerate chord");
        return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    }

    GroundPoint bisector_intersection(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                      const GroundPoint &u4)
    {
        if (u1 == u2 || u3 == u4)
            throw GeometryError("degenerate chord");

        const double cx = 0.25 * (u1.x + u2.x + u3.x + u4.x);
        const double cy = 0.25 * (u1.y + u2.y + u3.y + u4.y);

        // Row i: chord direction; right-hand side: direction . midpoint (both centred).
        const double a1x = u2.x - u1.x, a1y = u2.y - u1.y;
        const double a2x = u4.x - u3.x, a2y = u4.y - u3.y;
        const double b1 = a1x * (0.5 * (u1.x + u2.x) - cx) + a1y * (0.5 * (u1.y + u2.y) - cy);
        const double b2 = a2x * (0.5 * (u3.x + u4.x) - cx) + a2y * (0.5 * (u3.y + u4.y) - cy);

        const double det = a1x * a2y - a1y * a2x;
        if (std::abs(det) < 1e-12 * std::hypot(a1x, a1y) * std::hypot(a2x, a2y))
            throw GeometryError("no unique intersection: chords are parallel");

        const double x = (b1 * a2y - a1y * b2) / det;
        const double y = (a1x * b2 - b1 * a2x) / det;
        return {x + cx, y + cy};
    }

    GroundPoint alignment_point(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                const GroundPoint &u4)
    {
        try
        {
            return bisector_intersection(u1, u2, u3, u4);
        }
        catch (const GeometryError &)
        {
            if (u1 == u2 || u3 == u4)
                throw;
        }
        const GroundPoint m1 = chord_midpoint(u1, u2), m2 = chord_midpoint(u3, u4);
        const double nx = u2.x - u1.x, ny = u2.y - u1.y;
        const double offset = std::abs(nx * (m2.x - m1.x) + ny * (m2.y - m1.y)) / std::hypot(nx, ny);
        const double scale = std::max({distance(m1, m2), distance(u1, u2), distance(u3, u4)});
        if (offset > 1e-9 * scale)
            throw GeometryError("no alignment point: parallel chords with distinct bisectors");
        return {0.5 * (m1.x + m2.x), 0.5 * (m1.y + m2.y)};
    }

    double transmission_distance(const Point3 &position, const GroundPoint &midpoint)
    {
        if (!(position.z > 0.0))
            throw std::invalid_argument("transmitter height must be positive");
        return (position - lift(midpoint)).norm();
    }

    Placement make_placement(const Point3 &position, const GroundPoint &midpoint1, const GroundPoint &midpoint2)
    {
        Placement p;
        p.position = position;
        p.midpoints = {midpoint1, midpoint2};
        for (std::size_t i = 0; i < 2; ++i)
        {
            p.distances[i] = transmission_distance(position, p.midpoints[i]);
            p.axes[i] = (lift(p.midpoints[i]) - position) * (1.0 / p.distances[i]);
        }
        return p;
    }

    BeamFrameCoords beam_frame_coords(const Point3 &position, const GroundPoint &midpoint, const GroundPoint &cu)
    {
        const Vec3 to_mid = lift(midpoint) - position;
        const double length = to_mid.norm();
        if (!(length > 0.0))
            throw GeometryError("beam axis undefined: transmitter at the midpoint");
        const Vec3 axis = to_mid * (1.0 / length);

        const Vec3 v = lift(cu) - position;
        const double axial = v.dot(axis);
        const Vec3 perp = v - axis * axial;
        const double rho = perp.norm();
        if (rho <= 1e-12 * v.norm())
            return {0.0, 0.0, axial, true};

        Vec3 e1 = Vec3{1.0, 0.0, 0.0} - axis * axis.x;
        if (e1.norm() < 1e-9)
            e1 = Vec3{0.0, 1.0, 0.0} - axis * axis.y;
        e1 = e1 * (1.0 / e1.norm());
        const Vec3 e2 = axis.cross(e1);

        return {rho, std::atan2(perp.dot(e2), perp.dot(e1)), axial, false};
    }

    bool is_simple_quadrilateral(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                 const GroundPoint &u4)
    {
        return simple_cycle({u1, u2, u3, u4});
    }

    QuadAngles quad_inner_angles(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                 const GroundPoint &u4)
    {
        const std::array<GroundPoint, 4> v{u1, u2, u3, u4};
        if (!simple_cycle(v))
            throw GeometryError("not a simple quadrilateral");

        double twice_area = 0.0;
        for (std::size_t i = 0; i < 4; ++i)
            twice_area += cross2(v[i].x, v[i].y, v[(i + 1) % 4].x, v[(i + 1) % 4].y);
        const bool ccw = twice_area > 0.0;

        QuadAngles out;
        for (std::size_t i = 0; i < 4; ++i)
        {
            const GroundPoint &a = v[(i + 3) % 4];
            const GroundPoint &b = v[i];
            const GroundPoint &c = v[(i + 1) % 4];
            const double ux = a.x - b.x, uy = a.y - b.y;
            const double wx = c.x - b.x, wy = c.y - b.y;
            const double opening = std::atan2(std::abs(cross2(ux, uy, wx, wy)), ux * wx + uy * wy);
            // Left turn in a counter-clockwise polygon (or right turn in a clockwise one) is convex.
            const bool left_turn = cross2(b.x - a.x, b.y - a.y, wx, wy) > 0.0;
            out.angles[i] = (left_turn == ccw) ? opening : 2.0 * pi - opening;
        }
        return out;
    }

    double angle_square_difference(const QuadAngles &angles)
    {
        double sum = 0.0;
        for (const double a : angles.angles)
        {
            const double d = a - 0.5 * pi;
            sum += d * d;
        }
        return sum;
    }

} // namespace acoc
