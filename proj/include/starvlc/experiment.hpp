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

#ifndef STARVLC_EXPERIMENT_HPP
#define STARVLC_EXPERIMENT_HPP

#include "config.hpp"
#include "oracle.hpp"

#include <atomic>
#include <chrono>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <thread>

namespace starvlc
{
    inline constexpr const char *version = "0.1.0";

    // One solved scenario under a given objective, scheme and panel mode.
    struct PointResult
    {
        BetaVector beta;
        RatePair rates;               // both users' rates at beta
        double r1 = 0.0;              // reported rates; time-sharing scales them by alpha and 1 - alpha
        double r2 = 0.0;
        double sum = 0.0;             // objective-specific total (time-sharing value for timeshare)
        std::optional<double> ee;     // sum / (P1 + P2)
        std::optional<double> alpha;  // time-sharing only
        int iterations = 0;
        bool converged = false;
        std::optional<double> oracle_sum;
        std::optional<double> oracle_gap; // oracle_sum - sum
        std::optional<double> r1_no_ris;
        double mean_beta = 0.0;
        std::string error;            // empty on success
        double wall_seconds = 0.0;
    };

    struct SolveOptions
    {
        Objective objective = Objective::SumRate;
        DetectorScheme scheme = DetectorScheme::SIC;
        PanelMode mode = PanelMode::EnergySplitting;
        SpcaConfig spca{};
        bool oracle_check = false;
        unsigned oracle_workers = 0;
    };

    // Solves `s`. Solver exceptions are caught and reported in PointResult::error.
    inline PointResult solve_point(const Scenario &s, const SolveOptions &opt)
    {
        const auto t0 = std::chrono::steady_clock::now();
        PointResult out;
        try
        {
            validate(s);
            const ChannelSet ch = channel_set(s);
            const LinkParams p = link_params(s);
            const RateWeights sum_weights{};
            SpcaResult run;
            RateWeights weights = sum_weights;

            switch (opt.objective)
            {
            case Objective::SumRate:
                run = spca_optimize(ch, p, opt.scheme, opt.spca);
                break;
            case Objective::TimeSharing: {
                TimeSharingResult ts = time_sharing_optimize(ch, p, opt.scheme, opt.spca);
                out.alpha = ts.alpha;
                weights = {ts.alpha, 1.0 - ts.alpha};
                run = std::move(ts.run);
                break;
            }
            case Objective::MaxMin:
                if (opt.mode == PanelMode::ModeSwitching)
                    throw ValidationError("mode", "mode-switching is only defined for the sum and timeshare objectives");
                run = max_min_optimize(ch, p, opt.scheme, opt.spca);
                break;
            }
            if (opt.mode == PanelMode::ModeSwitching)
            {
                run.beta = round_to_vertex(ch, run.beta, p, opt.scheme, weights);
                run.rates = rate_pair(ch, run.beta, p, opt.scheme);
            }

            out.beta = run.beta;
            out.rates = run.rates;
            out.iterations = run.iterations;
            out.converged = run.converged && run.inner_converged;
            if (out.alpha)
            {
                out.r1 = *out.alpha * run.rates.r1;
                out.r2 = (1.0 - *out.alpha) * run.rates.r2;
                out.sum = out.r1 + out.r2;
            }
            else
            {
                out.r1 = run.rates.r1;
                out.r2 = run.rates.r2;
                out.sum = run.rates.sum;
            }
            const double total_power = s.power1 + s.power2;
            if (total_power > 0.0)
                out.ee = out.sum / total_power;
            out.mean_beta = out.beta.size() ? out.beta.mean() : 0.0;
            out.r1_no_ris = los_only_rate(ch, p);

            if (opt.oracle_check && opt.objective == Objective::SumRate && ch.size() <= vertex_enumeration_cap)
            {
                const OracleReport o = vertex_enumerate(ch, p, opt.scheme, opt.oracle_workers);
                out.oracle_sum = o.best_rates.sum;
                out.oracle_gap = o.best_rates.sum - out.sum;
            }
        }
        catch (const std::exception &e)
        {
            out.error = e.what();
            out.converged = false;
        }
        out.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

    namespace detail
    {
        inline std::string csv_field(const std::string &v)
        {
            if (v.find_first_of(",\"\r\n") == std::string::npos)
                return v;
            std::string out = "\"";
            for (char c : v)
            {
                if (c == '"')
                    out += '"';
                out += c;
            }
            return out + "\"";
        }

        inline std::string csv_number(double v)
        {
            if (!std::isfinite(v))
                return "";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", v);
            return buf;
        }

        inline std::string csv_number(const std::optional<double> &v) { return v ? csv_number(*v) : std::string(); }

        inline void write_text(const std::filesystem::path &path, const std::string &text)
        {
            std::ofstream f(path, std::ios::binary);
            if (!f)
                throw Error("cannot write '" + path.string() + "'");
            f << text;
            if (!f)
                throw Error("write failed for '" + path.string() + "'");
        }
    }

    inline constexpr const char *sweep_csv_header = "swept_value,r1,r2,sum_rate,ee,iters,converged,oracle_sum,oracle_gap";

    inline std::string sweep_csv_row(double swept, const PointResult &r)
    {
        using detail::csv_number;
        const bool ok = r.error.empty();
        std::string row = csv_number(swept);
        row += "," + (ok ? csv_number(r.r1) : "");
        row += "," + (ok ? csv_number(r.r2) : "");
        row += "," + (ok ? csv_number(r.sum) : "");
        row += "," + (ok ? csv_number(r.ee) : "");
        row += "," + (ok ? std::to_string(r.iterations) : "");
        row += std::string(",") + (r.converged ? "true" : "false");
        row += "," + csv_number(r.oracle_sum);
        row += "," + csv_number(r.oracle_gap);
        return row;
    }

    struct SweepOutcome
    {
        std::vector<double> values;
        std::vector<PointResult> points;
        std::string manifest;

        bool all_converged() const
        {
            return std::all_of(points.begin(), points.end(), [](const PointResult &p) { return p.converged; });
        }
    };

    // Solves every sweep point (in parallel when workers != 1) without touching the file system.
    inline SweepOutcome evaluate_sweep(const SweepSpec &spec, unsigned workers = 0)
    {
        spec.validate();
        SweepOutcome out;
        out.values = spec.values();
        out.points.resize(out.values.size());

        if (workers == 0)
            workers = std::max(1u, std::thread::hardware_concurrency());
        workers = std::min<unsigned>(workers, static_cast<unsigned>(out.values.size()));

        SolveOptions opt{spec.objective, spec.scheme, spec.mode, spec.spca, spec.oracle_check, workers == 1 ? 0u : 1u};
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t i = next++; i < out.values.size(); i = next++)
                out.points[i] = solve_point(spec.scenario_at(out.values[i]), opt);
        };
        if (workers <= 1)
            work();
        else
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back(work);
        }

        std::ostringstream m;
        m << "tool.version = " << version << "\n";
        m << write_sweep(spec);
        m << "run.points = " << out.values.size() << "\n";
        m << "run.workers = " << workers << "\n";
        if (spec.parameter == SweptParameter::PowerBoth)
            m << "run.note = \"0 W is excluded from power sweeps: energy efficiency is 0/0 there\"\n";
        if (spec.oracle_check && spec.objective != Objective::SumRate)
            m << "run.note_oracle = \"oracle check skipped: the oracle maximizes the sum-rate only\"\n";
        for (std::size_t i = 0; i < out.points.size(); ++i)
        {
            const PointResult &p = out.points[i];
            m << "point." << i << ".value = " << detail::format_double(out.values[i]) << "\n";
            m << "point." << i << ".wall_seconds = " << detail::format_double(p.wall_seconds) << "\n";
            m << "point." << i << ".converged = " << (p.converged ? "true" : "false") << "\n";
            if (p.alpha)
                m << "point." << i << ".alpha = " << detail::format_double(*p.alpha) << "\n";
            if (spec.oracle_check && p.error.empty() && !p.oracle_sum && spec.objective == Objective::SumRate)
                m << "point." << i << ".oracle = \"skipped: more than " << vertex_enumeration_cap << " elements\"\n";
            if (!p.error.empty())
            {
                std::string e = p.error;
                std::replace(e.begin(), e.end(), '"', '\'');
                std::replace(e.begin(), e.end(), '\n', ' ');
                m << "point." << i << ".error = \"" << e << "\"\n";
            }
        }
        out.manifest = m.str();
        return out;
    }

    inline std::string sweep_csv(const SweepOutcome &o)
    {
        std::string text = std::string(sweep_csv_header) + "\n";
        for (std::size_t i = 0; i < o.points.size(); ++i)
            text += sweep_csv_row(o.values[i], o.points[i]) + "\n";
        return text;
    }

    inline std::string baseline_csv(const SweepOutcome &o)
    {
        std::string text = "swept_value,r1_no_ris\n";
        for (std::size_t i = 0; i < o.points.size(); ++i)
            text += detail::csv_number(o.values[i]) + "," + detail::csv_number(o.points[i].r1_no_ris) + "\n";
        return text;
    }

    // Runs the sweep and writes sweep.csv, manifest and (for position sweeps) baseline.csv into out_dir.
    inline SweepOutcome run_sweep(const SweepSpec &spec, const std::filesystem::path &out_dir, unsigned workers = 0)
    {
        SweepOutcome o = evaluate_sweep(spec, workers);
        std::filesystem::create_directories(out_dir);
        detail::write_text(out_dir / "sweep.csv", sweep_csv(o));
        if (spec.is_position_sweep())
            detail::write_text(out_dir / "baseline.csv", baseline_csv(o));
        detail::write_text(out_dir / "manifest", o.manifest);
        return o;
    }

    // rows x cols matrix of beta, row-major in element order.
    inline std::string beta_grid_csv(const BetaVector &beta, const RisPanel &panel)
    {
        if (beta.size() != panel.element_count())
            throw LengthMismatch("beta has " + std::to_string(beta.size()) + " entries, panel has " +
                                 std::to_string(panel.element_count()));
        std::string text;
        const auto cols = static_cast<std::size_t>(panel.cols);
        for (std::size_t r = 0; r < static_cast<std::size_t>(panel.rows); ++r)
        {
            for (std::size_t c = 0; c < cols; ++c)
            {
                if (c)
                    text += ",";
                text += detail::csv_number(beta[r * cols + c]);
            }
            text += "\n";
        }
        return text;
    }

    inline void dump_beta(const BetaVector &beta, const RisPanel &panel, const std::filesystem::path &out_path)
    {
        detail::write_text(out_path, beta_grid_csv(beta, panel));
    }

    // Solves `s` and writes its coefficient grid.
    inline PointResult dump_beta(const Scenario &s, const SolveOptions &opt, const std::filesystem::path &out_path)
    {
        PointResult r = solve_point(s, opt);
        if (!r.error.empty())
            throw Error(r.error);
        dump_beta(r.beta, s.panel, out_path);
        return r;
    }
}

#endif
