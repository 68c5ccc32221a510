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

#ifndef STARVLC_CONFIG_HPP
#define STARVLC_CONFIG_HPP

#include "spca.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace starvlc
{
    // Flat `dotted.key = value` text. Values are numbers, booleans, bare or quoted strings, or
    // bracketed number lists such as `[3.5, 2.5, 1.0]`. `#` starts a comment.
    class KeyValueDocument
    {
    public:
        struct Entry
        {
            std::string value;
            std::size_t line = 0;
        };

        static KeyValueDocument parse(std::string_view text)
        {
            KeyValueDocument doc;
            std::size_t line_no = 0;
            std::size_t pos = 0;
            while (pos <= text.size())
            {
                const std::size_t end = std::min(text.find('\n', pos), text.size());
                std::string_view line = text.substr(pos, end - pos);
                pos = end + 1;
                ++line_no;

                line = strip_comment(line);
                line = trim(line);
                if (line.empty())
                {
                    if (end == text.size())
                        break;
                    continue;
                }
                const std::size_t eq = line.find('=');
                if (eq == std::string_view::npos)
                    throw ParseError(line_no, "", "expected 'key = value'");
                const std::string key(trim(line.substr(0, eq)));
                const std::string value(trim(line.substr(eq + 1)));
                if (key.empty())
                    throw ParseError(line_no, "", "empty key");
                for (char c : key)
                    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '_'))
                        throw ParseError(line_no, key, "keys may only contain letters, digits, '.' and '_'");
                if (value.empty())
                    throw ParseError(line_no, key, "missing value");
                if (!doc.entries_.emplace(key, Entry{value, line_no}).second)
                    throw ParseError(line_no, key, "duplicate key");
                if (end == text.size())
                    break;
            }
            return doc;
        }

        bool has(const std::string &key) const { return entries_.count(key) != 0; }
        const std::map<std::string, Entry> &entries() const noexcept { return entries_; }

        // Typed accessors mark the key as used; `unused_keys` reports the rest.
        std::optional<double> number(const std::string &key) const
        {
            const Entry *e = find(key);
            if (!e)
                return std::nullopt;
            return parse_number(*e, key);
        }

        std::optional<int> integer(const std::string &key) const
        {
            const auto v = number(key);
            if (!v)
                return std::nullopt;
            if (*v != std::floor(*v) || std::fabs(*v) > 1e9)
                throw ParseError(entries_.at(key).line, key, "expected an integer");
            return static_cast<int>(*v);
        }

        std::optional<bool> boolean(const std::string &key) const
        {
            const Entry *e = find(key);
            if (!e)
                return std::nullopt;
            if (e->value == "true")
                return true;
            if (e->value == "false")
                return false;
            throw ParseError(e->line, key, "expected true or false");
        }

        std::optional<std::string> string(const std::string &key) const
        {
            const Entry *e = find(key);
            if (!e)
                return std::nullopt;
            std::string v = e->value;
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"')
                v = v.substr(1, v.size() - 2);
            return v;
        }

        std::optional<Vec3> vec3(const std::string &key) const
        {
            const Entry *e = find(key);
            if (!e)
                return std::nullopt;
            std::string_view v = e->value;
            if (v.size() < 2 || v.front() != '[' || v.back() != ']')
                throw ParseError(e->line, key, "expected a list like [x, y, z]");
            v = v.substr(1, v.size() - 2);
            std::vector<double> parts;
            while (true)
            {
                const std::size_t comma = v.find(',');
                parts.push_back(parse_number(Entry{std::string(trim(v.substr(0, comma))), e->line}, key));
                if (comma == std::string_view::npos)
                    break;
                v = v.substr(comma + 1);
            }
            if (parts.size() != 3)
                throw ParseError(e->line, key, "expected exactly 3 components");
            return Vec3{parts[0], parts[1], parts[2]};
        }

        std::vector<std::string> unused_keys() const
        {
            std::vector<std::string> out;
            for (const auto &[k, e] : entries_)
                if (!used_.count(k))
                    out.push_back(k);
            return out;
        }

        void reject_unused() const
        {
            for (const auto &k : unused_keys())
                throw ParseError(entries_.at(k).line, k, "unknown key");
        }

    private:
        static std::string_view trim(std::string_view s)
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        static std::string_view strip_comment(std::string_view s)
        {
            bool quoted = false;
            for (std::size_t i = 0; i < s.size(); ++i)
            {
                if (s[i] == '"')
                    quoted = !quoted;
                else if (s[i] == '#' && !quoted)
                    return s.substr(0, i);
            }
            return s;
        }

        static double parse_number(const Entry &e, const std::string &key)
        {
            const std::string &v = e.value;
            double out = 0.0;
            const char *first = v.data();
            const char *last = v.data() + v.size();
            if (!v.empty() && v.front() == '+')
                ++first;
            const auto [ptr, ec] = std::from_chars(first, last, out);
            if (ec != std::errc() || ptr != last || !std::isfinite(out))
                throw ParseError(e.line, key, "expected a finite number, got '" + v + "'");
            return out;
        }

        const Entry *find(const std::string &key) const
        {
            const auto it = entries_.find(key);
            if (it == entries_.end())
                return nullptr;
            used_.insert(key);
            return &it->second;
        }

        std::map<std::string, Entry> entries_;
        mutable std::set<std::string> used_;
    };

    namespace detail
    {
        // Shortest text that reads back as exactly `v`.
        inline std::string format_double(double v)
        {
            char buf[40];
            const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
            return std::string(buf, end);
        }

        inline std::string format_vec(const Vec3 &v)
        {
            return "[" + format_double(v.x) + ", " + format_double(v.y) + ", " + format_double(v.z) + "]";
        }

        // The shortest degree value that converts back to exactly `rad`, if there is one nearby.
        inline std::optional<double> degrees_for(double rad)
        {
            const double d0 = rad_to_deg(rad);
            std::optional<double> best;
            std::size_t best_len = SIZE_MAX;
            double up = d0, down = d0;
            for (int i = 0; i < 64; ++i)
            {
                for (double d : {up, down})
                    if (deg_to_rad(d) == rad && format_double(d).size() < best_len)
                    {
                        best = d;
                        best_len = format_double(d).size();
                    }
                up = std::nextafter(up, HUGE_VAL);
                down = std::nextafter(down, -HUGE_VAL);
            }
            return best;
        }

        inline std::string format_angle(const std::string &stem, double rad)
        {
            if (const auto d = degrees_for(rad))
                return stem + "_deg = " + format_double(*d) + "\n";
            return stem + "_rad = " + format_double(rad) + "\n";
        }

        inline std::string read_file(const std::string &path)
        {
            std::ifstream in(path, std::ios::binary);
            if (!in)
                throw ParseError(0, "", "cannot open '" + path + "'");
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }

    // Applies every scenario key present in `doc` on top of `s`. Angles are in degrees.
    inline void apply_scenario_keys(const KeyValueDocument &doc, Scenario &s)
    {
        auto point = [&](const std::string &name, OrientedPoint &p) {
            if (auto v = doc.vec3(name + ".position"))
                p.position = *v;
            if (auto v = doc.vec3(name + ".normal"))
                p.normal = *v;
        };
        point("ap", s.ap);
        point("ue1", s.ue1);
        point("ue2", s.ue2);

        // Angles are given in degrees; the `_rad` form exists for values no degree number maps to exactly.
        auto angle = [&](const std::string &stem, double &out) {
            const auto deg = doc.number(stem + "_deg");
            const auto rad = doc.number(stem + "_rad");
            if (deg && rad)
                throw ParseError(doc.entries().at(stem + "_rad").line, stem + "_rad",
                                 "give either " + stem + "_deg or " + stem + "_rad, not both");
            if (deg)
                out = deg_to_rad(*deg);
            if (rad)
                out = *rad;
        };
        angle("source.half_angle", s.source.half_intensity_angle);

        if (auto v = doc.vec3("ris.center"))
            s.panel.center = *v;
        if (auto v = doc.integer("ris.rows"))
            s.panel.rows = *v;
        if (auto v = doc.integer("ris.cols"))
            s.panel.cols = *v;
        if (auto v = doc.number("ris.pitch"))
            s.panel.pitch = *v;
        if (auto v = doc.vec3("ris.normal"))
            s.panel.normal = *v;

        if (auto v = doc.number("frontend.area_m2"))
            s.front_end.detector_area = *v;
        angle("frontend.fov_half_angle", s.front_end.fov_half_angle);
        if (auto v = doc.number("frontend.gain"))
            s.front_end.concentrator_filter_gain = *v;
        if (auto v = doc.number("frontend.responsivity"))
            s.front_end.responsivity = *v;

        if (auto v = doc.number("power.ue1_w"))
            s.power1 = *v;
        if (auto v = doc.number("power.ue2_w"))
            s.power2 = *v;
        if (auto v = doc.number("noise.variance"))
            s.noise_variance = *v;
    }

    // Reference scenario overridden by the keys in `text`, validated.
    inline Scenario parse_scenario(std::string_view text)
    {
        const KeyValueDocument doc = KeyValueDocument::parse(text);
        Scenario s;
        apply_scenario_keys(doc, s);
        doc.reject_unused();
        validate(s);
        return s;
    }

    inline Scenario load_scenario(const std::string &path) { return parse_scenario(detail::read_file(path)); }

    // Every scenario field as key-value text; parse_scenario(write_scenario(s)) == s.
    inline std::string write_scenario(const Scenario &s)
    {
        using detail::format_double;
        using detail::format_vec;
        std::ostringstream o;
        auto point = [&](const char *name, const OrientedPoint &p) {
            o << name << ".position = " << format_vec(p.position) << "\n";
            o << name << ".normal = " << format_vec(p.normal) << "\n";
        };
        point("ap", s.ap);
        point("ue1", s.ue1);
        point("ue2", s.ue2);
        o << detail::format_angle("source.half_angle", s.source.half_intensity_angle);
        o << "ris.center = " << format_vec(s.panel.center) << "\n";
        o << "ris.rows = " << s.panel.rows << "\n";
        o << "ris.cols = " << s.panel.cols << "\n";
        o << "ris.pitch = " << format_double(s.panel.pitch) << "\n";
        o << "ris.normal = " << format_vec(s.panel.normal) << "\n";
        o << "frontend.area_m2 = " << format_double(s.front_end.detector_area) << "\n";
        o << detail::format_angle("frontend.fov_half_angle", s.front_end.fov_half_angle);
        o << "frontend.gain = " << format_double(s.front_end.concentrator_filter_gain) << "\n";
        o << "frontend.responsivity = " << format_double(s.front_end.responsivity) << "\n";
        o << "power.ue1_w = " << format_double(s.power1) << "\n";
        o << "power.ue2_w = " << format_double(s.power2) << "\n";
        o << "noise.variance = " << format_double(s.noise_variance) << "\n";
        return o.str();
    }

    inline void apply_spca_keys(const KeyValueDocument &doc, SpcaConfig &c)
    {
        if (auto v = doc.number("spca.theta_init"))
            c.theta_init = *v;
        if (auto v = doc.number("spca.tolerance"))
            c.tolerance = *v;
        if (auto v = doc.integer("spca.max_outer_iterations"))
            c.max_outer_iterations = *v;
        if (auto v = doc.number("spca.beta_init"))
            c.beta_init = *v;
        if (auto v = doc.boolean("spca.vertex_starts"))
            c.vertex_starts = *v;
        if (auto v = doc.number("spca.inner.initial_step"))
            c.inner.initial_step = *v;
        if (auto v = doc.number("spca.inner.shrink"))
            c.inner.shrink = *v;
        if (auto v = doc.number("spca.inner.armijo_slope"))
            c.inner.armijo_slope = *v;
        if (auto v = doc.number("spca.inner.tolerance"))
            c.inner.tolerance = *v;
        if (auto v = doc.integer("spca.inner.max_iterations"))
            c.inner.max_iterations = *v;
        c.validate();
    }

    inline std::string write_spca_config(const SpcaConfig &c)
    {
        using detail::format_double;
        std::ostringstream o;
        o << "spca.theta_init = " << format_double(c.theta_init) << "\n";
        o << "spca.tolerance = " << format_double(c.tolerance) << "\n";
        o << "spca.max_outer_iterations = " << c.max_outer_iterations << "\n";
        o << "spca.beta_init = " << format_double(c.beta_init) << "\n";
        o << "spca.vertex_starts = " << (c.vertex_starts ? "true" : "false") << "\n";
        o << "spca.inner.initial_step = " << format_double(c.inner.initial_step) << "\n";
        o << "spca.inner.shrink = " << format_double(c.inner.shrink) << "\n";
        o << "spca.inner.armijo_slope = " << format_double(c.inner.armijo_slope) << "\n";
        o << "spca.inner.tolerance = " << format_double(c.inner.tolerance) << "\n";
        o << "spca.inner.max_iterations = " << c.inner.max_iterations << "\n";
        return o.str();
    }

    inline DetectorScheme parse_scheme(const std::string &s, std::size_t line = 0)
    {
        if (s == "sic")
            return DetectorScheme::SIC;
        if (s == "sud")
            return DetectorScheme::SUD;
        throw ParseError(line, "scheme", "expected sud or sic, got '" + s + "'");
    }

    inline Objective parse_objective(const std::string &s, std::size_t line = 0)
    {
        if (s == "sum")
            return Objective::SumRate;
        if (s == "timeshare")
            return Objective::TimeSharing;
        if (s == "maxmin")
            return Objective::MaxMin;
        throw ParseError(line, "objective", "expected sum, timeshare or maxmin, got '" + s + "'");
    }

    enum class PanelMode
    {
        EnergySplitting, // continuous beta in [0, 1]
        ModeSwitching    // beta in {0, 1}
    };

    inline const char *to_string(PanelMode m) noexcept { return m == PanelMode::ModeSwitching ? "ms" : "es"; }

    inline PanelMode parse_mode(const std::string &s, std::size_t line = 0)
    {
        if (s == "es")
            return PanelMode::EnergySplitting;
        if (s == "ms")
            return PanelMode::ModeSwitching;
        throw ParseError(line, "mode", "expected es or ms, got '" + s + "'");
    }

    enum class SweptParameter
    {
        Ue1X,
        Ue2X,
        ApX,
        ElementCount,
        PowerBoth
    };

    inline const char *to_string(SweptParameter p) noexcept
    {
        switch (p)
        {
        case SweptParameter::Ue1X:
            return "ue1_x";
        case SweptParameter::Ue2X:
            return "ue2_x";
        case SweptParameter::ApX:
            return "ap_x";
        case SweptParameter::ElementCount:
            return "element_count";
        default:
            return "power_both";
        }
    }

    inline SweptParameter parse_swept(const std::string &s, std::size_t line = 0)
    {
        for (auto p : {SweptParameter::Ue1X, SweptParameter::Ue2X, SweptParameter::ApX, SweptParameter::ElementCount,
                       SweptParameter::PowerBoth})
            if (s == to_string(p))
                return p;
        throw ParseError(line, "sweep.parameter",
                         "expected ue1_x, ue2_x, ap_x, element_count or power_both, got '" + s + "'");
    }

    // Columns of the panel in element-count sweeps; the count sets the number of rows.
    inline constexpr int element_sweep_cols = 8;

    struct SweepSpec
    {
        SweptParameter parameter = SweptParameter::Ue1X;
        double start = 3.0;
        double stop = 4.5;
        int steps = 16;
        Objective objective = Objective::SumRate;
        DetectorScheme scheme = DetectorScheme::SIC;
        PanelMode mode = PanelMode::EnergySplitting;
        bool oracle_check = false;
        Scenario base{};  // fixed scenario fields; the swept field is overwritten per point
        SpcaConfig spca{};

        // Uniform points from start to stop inclusive.
        std::vector<double> values() const
        {
            std::vector<double> out(static_cast<std::size_t>(steps));
            for (int i = 0; i < steps; ++i)
                out[static_cast<std::size_t>(i)] =
                    i == steps - 1 ? stop : start + (stop - start) * static_cast<double>(i) / (steps - 1);
            return out;
        }

        // Throws ValidationError on a bad range or an unsupported combination.
        void validate() const
        {
            if (!(start <= stop) || !std::isfinite(start) || !std::isfinite(stop))
                throw ValidationError("sweep.range", "start must not exceed stop");
            if (steps < 2)
                throw ValidationError("sweep.steps", "at least 2 points are required");
            if (mode == PanelMode::ModeSwitching && objective == Objective::MaxMin)
                throw ValidationError("sweep.mode", "mode-switching is only defined for the sum and timeshare objectives");
            if (parameter == SweptParameter::PowerBoth && !(start > 0.0))
                throw ValidationError("sweep.start", "power sweeps must start above 0 W (energy efficiency is undefined at 0)");
            if (parameter == SweptParameter::ElementCount)
            {
                for (double v : values())
                {
                    const double rows = v / element_sweep_cols;
                    if (!(v > 0.0) || std::fabs(rows - std::round(rows)) > 1e-9)
                        throw ValidationError("sweep.range", "element counts must be positive multiples of " +
                                                                 std::to_string(element_sweep_cols));
                }
            }
            base_checked();
            spca.validate();
        }

        // Scenario for one sweep value.
        Scenario scenario_at(double value) const
        {
            Scenario s = base;
            switch (parameter)
            {
            case SweptParameter::Ue1X:
                s.ue1.position.x = value;
                break;
            case SweptParameter::Ue2X:
                s.ue2.position.x = value;
                break;
            case SweptParameter::ApX:
                s.ap.position.x = value;
                break;
            case SweptParameter::ElementCount:
                s.panel.cols = element_sweep_cols;
                s.panel.rows = static_cast<int>(std::lround(value / element_sweep_cols));
                break;
            case SweptParameter::PowerBoth:
                s.power1 = s.power2 = value;
                break;
            }
            return s;
        }

        bool is_position_sweep() const noexcept
        {
            return parameter == SweptParameter::Ue1X || parameter == SweptParameter::Ue2X || parameter == SweptParameter::ApX;
        }

    private:
        void base_checked() const
        {
            for (double v : values())
                starvlc::validate(scenario_at(v));
        }
    };

    inline SweepSpec parse_sweep(std::string_view text)
    {
        const KeyValueDocument doc = KeyValueDocument::parse(text);
        auto line_of = [&](const char *key) { return doc.has(key) ? doc.entries().at(key).line : std::size_t{0}; };

        SweepSpec spec;
        apply_scenario_keys(doc, spec.base);
        apply_spca_keys(doc, spec.spca);
        if (auto v = doc.string("sweep.parameter"))
            spec.parameter = parse_swept(*v, line_of("sweep.parameter"));
        else
            throw ParseError(0, "sweep.parameter", "required key missing");
        if (auto v = doc.number("sweep.start"))
            spec.start = *v;
        if (auto v = doc.number("sweep.stop"))
            spec.stop = *v;
        if (auto v = doc.integer("sweep.steps"))
            spec.steps = *v;
        if (auto v = doc.string("sweep.objective"))
            spec.objective = parse_objective(*v, line_of("sweep.objective"));
        if (auto v = doc.string("sweep.scheme"))
            spec.scheme = parse_scheme(*v, line_of("sweep.scheme"));
        if (auto v = doc.string("sweep.mode"))
            spec.mode = parse_mode(*v, line_of("sweep.mode"));
        if (auto v = doc.boolean("sweep.oracle_check"))
            spec.oracle_check = *v;
        doc.reject_unused();
        spec.validate();
        return spec;
    }

    inline SweepSpec load_sweep(const std::string &path) { return parse_sweep(detail::read_file(path)); }

    inline std::string write_sweep(const SweepSpec &spec)
    {
        using detail::format_double;
        std::ostringstream o;
        o << "sweep.parameter = " << to_string(spec.parameter) << "\n";
        o << "sweep.start = " << format_double(spec.start) << "\n";
        o << "sweep.stop = " << format_double(spec.stop) << "\n";
        o << "sweep.steps = " << spec.steps << "\n";
        o << "sweep.objective = " << to_string(spec.objective) << "\n";
        o << "sweep.scheme = " << to_string(spec.scheme) << "\n";
        o << "sweep.mode = " << to_string(spec.mode) << "\n";
        o << "sweep.oracle_check = " << (spec.oracle_check ? "true" : "false") << "\n";
        return o.str() + write_scenario(spec.base) + write_spca_config(spec.spca);
    }
}

#endif
