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

#ifndef STARVLC_CHANNEL_HPP
#define STARVLC_CHANNEL_HPP

#include "geometry.hpp"

#include <cmath>
#include <numbers>
#include <vector>

namespace starvlc
{
    // Receiver optics at the access point.
    struct OpticalFrontEnd
    {
        double detector_area = 1.5e-4;          // A_r [m^2]
        double fov_half_angle = deg_to_rad(85); // Psi_c [rad]
        double concentrator_filter_gain = 10.0; // G, constant inside the field of view
        double responsivity = 0.7;              // rho [A/W]

        friend bool operator==(const OpticalFrontEnd &, const OpticalFrontEnd &) = default;
    };

    // Complete physical setup. Default-constructed values are the reference two-room
    // configuration: AP on the ceiling of room 1, UE1 in room 1, UE2 behind the panel in room 2.
    struct Scenario
    {
        OrientedPoint ap{{4.5, 2.5, 3.0}, {0.0, 0.0, -1.0}};
        OrientedPoint ue1{{3.5, 2.5, 1.0}, {0.0, 0.0, 1.0}};
        OrientedPoint ue2{{6.0, 2.5, 1.0}, {0.0, 0.0, 1.0}};
        LambertianSource source{};
        RisPanel panel{};
        OpticalFrontEnd front_end{};
        double power1 = 0.1;            // P_1 [W]
        double power2 = 0.1;            // P_2 [W]
        double noise_variance = 1e-10;  // sigma_n^2, unit bandwidth

        std::size_t element_count() const noexcept { return panel.element_count(); }

        friend bool operator==(const Scenario &, const Scenario &) = default;
    };

    // Throws ValidationError naming the first violated invariant.
    inline void validate(const Scenario &s)
    {
        const auto check_point = [](const OrientedPoint &p, const char *name) {
            if (!is_finite(p.position))
                throw ValidationError(std::string(name) + ".position", "components must be finite");
            if (!is_finite(p.normal) || !has_unit_normal(p))
                throw ValidationError(std::string(name) + ".normal", "must be unit length within 1e-9");
        };
        check_point(s.ap, "ap");
        check_point(s.ue1, "ue1");
        check_point(s.ue2, "ue2");

        const double phi = s.source.half_intensity_angle;
        if (!(phi > 0.0 && phi < std::numbers::pi / 2))
            throw ValidationError("source.half_angle", "must lie strictly between 0 and 90 degrees");

        const RisPanel &p = s.panel;
        if (!is_finite(p.center))
            throw ValidationError("ris.center", "components must be finite");
        if (!is_finite(p.normal) || std::fabs(norm(p.normal) - 1.0) > unit_normal_tolerance)
            throw ValidationError("ris.normal", "must be unit length within 1e-9");
        if (p.rows < 0 || p.cols < 0)
            throw ValidationError("ris.rows/ris.cols", "must be non-negative");
        if (!(p.pitch > 0.0) || !std::isfinite(p.pitch))
            throw ValidationError("ris.pitch", "must be positive");

        const OpticalFrontEnd &f = s.front_end;
        if (!(f.detector_area > 0.0) || !std::isfinite(f.detector_area))
            throw ValidationError("frontend.area", "must be positive");
        if (!(f.fov_half_angle > 0.0 && f.fov_half_angle <= std::numbers::pi / 2))
            throw ValidationError("frontend.fov_half_angle", "must lie in (0, 90] degrees");
        if (!(f.concentrator_filter_gain > 0.0) || !std::isfinite(f.concentrator_filter_gain))
            throw ValidationError("frontend.gain", "must be positive");
        if (!(f.responsivity > 0.0) || !std::isfinite(f.responsivity))
            throw ValidationError("frontend.responsivity", "must be positive");

        if (!(s.power1 >= 0.0) || !std::isfinite(s.power1))
            throw ValidationError("power.ue1", "must be non-negative");
        if (!(s.power2 >= 0.0) || !std::isfinite(s.power2))
            throw ValidationError("power.ue2", "must be non-negative");
        if (!(s.noise_variance > 0.0) || !std::isfinite(s.noise_variance))
            throw ValidationError("noise.variance", "must be positive");

        // Room structure: AP and UE1 share a side of the panel plane, UE2 is on the other side.
        const double side_ap = dot(s.ap.position - p.center, p.normal);
        const double side_ue1 = dot(s.ue1.position - p.center, p.normal);
        const double side_ue2 = dot(s.ue2.position - p.center, p.normal);
        if (side_ap == 0.0 || side_ue1 == 0.0 || side_ue2 == 0.0)
            throw ValidationError("room sides", "AP and UEs must not lie in the panel plane");
        if ((side_ap > 0.0) != (side_ue1 > 0.0))
            throw ValidationError("room sides", "UE1 and AP must be on the same side of the panel");
        if ((side_ue2 > 0.0) == (side_ap > 0.0))
            throw ValidationError("room sides", "UE2 must be on the opposite side of the panel from the AP");
    }

    // Per-element decomposition of the two effective channels.
    struct ChannelSet
    {
        double h_los = 0.0;
        std::vector<double> h_reflect;  // UE1 -> element i -> AP
        std::vector<double> h_transmit; // UE2 -> element i -> AP

        std::size_t size() const noexcept { return h_reflect.size(); }

        friend bool operator==(const ChannelSet &, const ChannelSet &) = default;
    };

    namespace detail
    {
        // Lambertian path gain from `emitter` to the AP along a path of total length
        // `path_length`; the emission leg leaves towards `first_hop`, the last leg arrives
        // from `last_hop`. Zero outside the AP field of view or behind the emitter.
        inline double path_gain(const Scenario &s, double order, const OrientedPoint &emitter, const Vec3 &first_hop,
                                const Vec3 &last_hop, double path_length)
        {
            const Vec3 emit_dir = first_hop - emitter.position;
            const Vec3 arrive_dir = last_hop - s.ap.position;
            if (norm(emit_dir) == 0.0 || norm(arrive_dir) == 0.0 || !(path_length > 0.0))
                throw GeometryError("coincident points on a propagation path");

            const double cos_incidence = cos_angle(s.ap.normal, arrive_dir);
            if (std::acos(cos_incidence) > s.front_end.fov_half_angle)
                return 0.0;

            const double cos_emission = cos_angle(emitter.normal, emit_dir);
            if (cos_emission <= 0.0) // a Lambertian source emits nothing backwards
                return 0.0;

            const OpticalFrontEnd &f = s.front_end;
            return f.detector_area * (order + 1.0) / (2.0 * std::numbers::pi * path_length * path_length) *
                   std::pow(cos_emission, order) * cos_incidence * f.concentrator_filter_gain;
        }

        inline double reflect_gain(const Scenario &s, double order, const Vec3 &element)
        {
            const double len = distance(s.ue1.position, element) + distance(element, s.ap.position);
            return path_gain(s, order, s.ue1, element, element, len);
        }

        inline double transmit_gain(const Scenario &s, double order, const Vec3 &element)
        {
            const double len = distance(s.ue2.position, element) + distance(element, s.ap.position);
            return path_gain(s, order, s.ue2, element, element, len);
        }

        inline Vec3 element_position(const Scenario &s, std::size_t i)
        {
            const auto grid = build_ris_grid(s.panel);
            if (i >= grid.size())
                throw DomainError("element index out of range");
            return grid[i];
        }
    }

    // Direct UE1 -> AP gain.
    inline double h_los(const Scenario &s)
    {
        if (s.ue1.position == s.ap.position)
            throw GeometryError("UE1 and AP coincide");
        const double order = s.source.order();
        return detail::path_gain(s, order, s.ue1, s.ap.position, s.ue1.position, distance(s.ue1.position, s.ap.position));
    }

    inline double h_reflect(const Scenario &s, std::size_t element_index)
    {
        return detail::reflect_gain(s, s.source.order(), detail::element_position(s, element_index));
    }

    inline double h_transmit(const Scenario &s, std::size_t element_index)
    {
        return detail::transmit_gain(s, s.source.order(), detail::element_position(s, element_index));
    }

    inline ChannelSet channel_set(const Scenario &s)
    {
        const double order = s.source.order();
        const auto grid = build_ris_grid(s.panel);

        ChannelSet out;
        out.h_los = h_los(s);
        out.h_reflect.reserve(grid.size());
        out.h_transmit.reserve(grid.size());
        for (const Vec3 &e : grid)
        {
            out.h_reflect.push_back(detail::reflect_gain(s, order, e));
            out.h_transmit.push_back(detail::transmit_gain(s, order, e));
        }
        return out;
    }
}

#endif
