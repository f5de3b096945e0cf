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

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace acoc
{
    /// Point on the ground plane z = 0, meters.
    struct GroundPoint
    {
        double x = 0.0;
        double y = 0.0;

        friend bool operator==(const GroundPoint &, const GroundPoint &) = default;
    };

    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        friend bool operator==(const Vec3 &, const Vec3 &) = default;

        Vec3 operator+(const Vec3 &o) const { return {x + o.x, y + o.y, z + o.z}; }
        Vec3 operator-(const Vec3 &o) const { return {x - o.x, y - o.y, z - o.z}; }
        Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
        double dot(const Vec3 &o) const { return x * o.x + y * o.y + z * o.z; }
        Vec3 cross(const Vec3 &o) const { return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x}; }
        double norm() const { return std::sqrt(dot(*this)); }
    };

    using Point3 = Vec3;

    inline Point3 lift(const GroundPoint &p) { return {p.x, p.y, 0.0}; }
    inline Point3 at_height(const GroundPoint &p, double h) { return {p.x, p.y, h}; }
    double distance(const GroundPoint &a, const GroundPoint &b);

    class GeometryError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    /// Inner angles (radians) of the cycle u1 -> u2 -> u3 -> u4, one per vertex.
    struct QuadAngles
    {
        std::array<double, 4> angles{};
    };

    /// Position of a CU in the cross-section of a beam aimed at its group's chord midpoint.
    struct BeamFrameCoords
    {
        double rho = 0.0;     // m, distance from the beam axis
        double phi = 0.0;     // rad, azimuth in the cross-section plane
        double axial = 0.0;   // m, distance along the axis to the cross-section plane
        bool degenerate = false; // CU on the axis; phi is meaningless and reported as 0
    };

    /// Transmitter position with one beam per CUG, each aimed at that group's chord midpoint.
    struct Placement
    {
        Point3 position;
        std::array<GroundPoint, 2> midpoints{};
        std::array<Vec3, 2> axes{};         // unit vectors from position towards each midpoint
        std::array<double, 2> distances{};  // m, transmission distance to each midpoint
    };

    /// Builds axes and distances for a transmitter at `position` (height > 0).
    Placement make_placement(const Point3 &position, const GroundPoint &midpoint1, const GroundPoint &midpoint2);

    /// Throws GeometryError("degenerate chord") when p == q.
    GroundPoint chord_midpoint(const GroundPoint &p, const GroundPoint &q);

    /// Ground point equidistant from u1, u2 and from u3, u4.
    ///
    /// Solved as the 2x2 system (q - p) . X = (|q|^2 - |p|^2) / 2 per chord, in coordinates
    /// centred on the four points. Throws GeometryError when the chords are parallel:
    /// |det| < 1e-12 * |u2 - u1| * |u4 - u3|.
    GroundPoint bisector_intersection(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                      const GroundPoint &u4);

    /// Ground point that aligns both CUGs: the bisector intersection, or for parallel chords
    /// sharing one perpendicular bisector, the midpoint between the two chord midpoints (the
    /// point on that bisector closest to both). Throws GeometryError for parallel chords with
    /// distinct bisectors.
    GroundPoint alignment_point(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                const GroundPoint &u4);

    /// Euclidean distance from an elevated position to a ground point. Requires position.z > 0.
    double transmission_distance(const Point3 &position, const GroundPoint &midpoint);

    /// Maps a CU into the cross-section of the beam from `position` towards `midpoint`.
    ///
    /// The azimuth reference is the projection of the global +x axis onto the cross-section
    /// plane (+y when that projection vanishes); the frame (e1, e2, axis) is right-handed.
    BeamFrameCoords beam_frame_coords(const Point3 &position, const GroundPoint &midpoint, const GroundPoint &cu);

    /// Interior angles of the polygon u1 -> u2 -> u3 -> u4.
    /// Throws GeometryError("not a simple quadrilateral") for self-intersecting cycles or
    /// collinear consecutive vertices.
    QuadAngles quad_inner_angles(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                 const GroundPoint &u4);

    /// True when quad_inner_angles would succeed.
    bool is_simple_quadrilateral(const GroundPoint &u1, const GroundPoint &u2, const GroundPoint &u3,
                                 const GroundPoint &u4);

    /// Sum of squared deviations of the inner angles from pi/2.
    double angle_square_difference(const QuadAngles &angles);

} // namespace acoc
