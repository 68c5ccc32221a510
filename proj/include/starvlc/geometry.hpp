// SPDX-License-Identifier: Apache-2.0
//
// starvlc: STAR-RIS assisted uplink visible-light link modelling and optimization
// Copyright (C) 2026 The starvlc Authors
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

#ifndef STARVLC_GEOMETRY_HPP
#define STARVLC_GEOMETRY_HPP

#include "error.hpp"

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace starvlc
{
    // Point or direction in the room frame [m]. x runs across both rooms (the wall
    // between them is a plane x = const), y along the wall, z up from the floor.
    struct Vec3
    {
        double x = 0.0;
        double y = 0.0;
        double z = 0.0;

        constexpr Vec3 &operator+=(const Vec3 &o) noexcept
        {
            x += o.x, y += o.y, z += o.z;
            return *this;
        }
        constexpr Vec3 &operator-=(const Vec3 &o) noexcept
        {
            x -= o.x, y -= o.y, z -= o.z;
            return *this;
        }
        constexpr Vec3 &operator*=(double s) noexcept
        {
            x *= s, y *= s, z *= s;
            return *this;
        }

        friend constexpr Vec3 operator+(Vec3 a, const Vec3 &b) noexcept { return a += b; }
        friend constexpr Vec3 operator-(Vec3 a, const Vec3 &b) noexcept { return a -= b; }
        friend constexpr Vec3 operator*(Vec3 a, double s) noexcept { return a *= s; }
        friend constexpr Vec3 operator*(double s, Vec3 a) noexcept { return a *= s; }
        friend constexpr Vec3 operator-(const Vec3 &a) noexcept { return {-a.x, -a.y, -a.z}; }
        friend constexpr bool operator==(const Vec3 &, const Vec3 &) = default;
    };

    constexpr double dot(const Vec3 &a, const Vec3 &b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }

    constexpr Vec3 cross(const Vec3 &a, const Vec3 &b) noexcept
    {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }

    inline double norm(const Vec3 &a) noexcept { return std::sqrt(dot(a, a)); }

    inline double distance(const Vec3 &a, const Vec3 &b) noexcept { return norm(a - b); }

    inline bool is_finite(const Vec3 &a) noexcept
    {
        return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
    }

    inline Vec3 normalized(const Vec3 &a)
    {
        const double n = norm(a);
        if (!(n > 0.0) || !std::isfinite(n))
            throw GeometryError("cannot normalize a zero or non-finite vector");
        return a * (1.0 / n);
    }

    // Cosine of the angle between two non-zero vectors, clamped to [-1, 1].
    inline double cos_angle(const Vec3 &a, const Vec3 &b)
    {
        const double na = norm(a), nb = norm(b);
        if (!(na > 0.0) || !(nb > 0.0))
            throw GeometryError("angle with a zero-length vector is undefined");
        const double c = dot(a, b) / (na * nb);
        return std::fmax(-1.0, std::fmin(1.0, c));
    }

    // Angle between a and b in [0, pi].
    inline double angle_between(const Vec3 &a, const Vec3 &b) { return std::acos(cos_angle(a, b)); }

    inline double deg_to_rad(double deg) noexcept { return deg * (std::numbers::pi / 180.0); }
    inline double rad_to_deg(double rad) noexcept { return rad * (180.0 / std::numbers::pi); }

    // Position with a facing direction (LED, photodetector).
    struct OrientedPoint
    {
        Vec3 position;
        Vec3 normal{0.0, 0.0, 1.0}; // unit length

        friend bool operator==(const OrientedPoint &, const OrientedPoint &) = default;
    };

    inline constexpr double unit_normal_tolerance = 1e-9;

    inline bool has_unit_normal(const OrientedPoint &p) noexcept
    {
        return std::fabs(norm(p.normal) - 1.0) <= unit_normal_tolerance;
    }

    // Lambertian order m of an emitter with half-intensity angle `half_angle` [rad].
    inline double lambertian_order(double half_angle)
    {
        if (!(half_angle > 0.0) || !(half_angle < std::numbers::pi / 2))
            throw DomainError("half-intensity angle must lie in (0, pi/2)");
        return -std::numbers::ln2 / std::log(std::cos(half_angle));
    }

    struct LambertianSource
    {
        double half_intensity_angle = deg_to_rad(60.0); // [rad]

        double order() const { return lambertian_order(half_intensity_angle); }

        friend bool operator==(const LambertianSource &, const LambertianSource &) = default;
    };

    // Rectangular STAR-RIS panel of rows x cols elements on a regular grid.
    //
    // Element k = r * cols + c sits at
    //     center + (c - (cols-1)/2) * pitch * col_axis + (r - (rows-1)/2) * pitch * row_axis,
    // where col_axis is the projection of +y onto the panel plane and row_axis = normal x col_axis.
    // For the default +x normal this gives increasing y along a row and increasing z across rows.
    struct RisPanel
    {
        Vec3 center{5.0, 2.5, 1.5};
        int rows = 10;
        int cols = 8;
        double pitch = 0.1;         // [m]
        Vec3 normal{1.0, 0.0, 0.0}; // unit length

        std::size_t element_count() const noexcept
        {
            return rows > 0 && cols > 0 ? static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) : 0;
        }

        friend bool operator==(const RisPanel &, const RisPanel &) = default;
    };

    namespace detail
    {
        // In-plane axes (col_axis, row_axis) of a panel with unit normal n.
        inline std::pair<Vec3, Vec3> panel_axes(const Vec3 &n)
        {
            const Vec3 n_hat = normalized(n);
            Vec3 ref{0.0, 1.0, 0.0};
            Vec3 col = ref - n_hat * dot(ref, n_hat);
            if (norm(col) < 1e-12) // normal along y: fall back to z as the reference
            {
                ref = {0.0, 0.0, 1.0};
                col = ref - n_hat * dot(ref, n_hat);
            }
            col = normalized(col);
            return {col, cross(n_hat, col)};
        }
    }

    // Element positions of `panel` in row-major order. Rows or cols of 0 yield an empty panel.
    inline std::vector<Vec3> build_ris_grid(const RisPanel &panel)
    {
        if (panel.rows < 0 || panel.cols < 0)
            throw DomainError("panel rows and cols must be non-negative");
        if (panel.element_count() == 0)
            return {};
        if (!(panel.pitch > 0.0))
            throw DomainError("panel pitch must be positive");

        const auto [col_axis, row_axis] = detail::panel_axes(panel.normal);
        const double c0 = 0.5 * (panel.cols - 1);
        const double r0 = 0.5 * (panel.rows - 1);

        std::vector<Vec3> out;
        out.reserve(panel.element_count());
        for (int r = 0; r < panel.rows; ++r)
            for (int c = 0; c < panel.cols; ++c)
                out.push_back(panel.center + col_axis * ((c - c0) * panel.pitch) + row_axis * ((r - r0) * panel.pitch));
        return out;
    }
}

#endif
