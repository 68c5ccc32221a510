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

// Command-line front end: solve, sweep, oracle and scan.

#include <starvlc/starvlc.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

using namespace starvlc;

namespace
{
    constexpr int exit_ok = 0;
    constexpr int exit_config = 1;
    constexpr int exit_not_converged = 2;

    struct Common
    {
        std::string config;
        std::string scheme = "sic";
        std::string mode = "es";
        std::string objective = "sum";
        std::optional<std::uint64_t> seed;
        int rows = 2;
        int cols = 4;
        std::string out;
    };

    void add_scenario_flags(CLI::App *cmd, Common &c)
    {
        cmd->add_option("--config", c.config, "scenario file (key = value); omitted keys keep the reference values");
        cmd->add_option("--seed", c.seed, "use a random scenario drawn with this seed instead of --config");
        cmd->add_option("--rows", c.rows, "panel rows for --seed scenarios")->check(CLI::PositiveNumber);
        cmd->add_option("--cols", c.cols, "panel columns for --seed scenarios")->check(CLI::PositiveNumber);
        cmd->add_option("--scheme", c.scheme, "detector scheme")->check(CLI::IsMember({"sud", "sic"}));
    }

    Scenario resolve_scenario(const Common &c)
    {
        if (c.seed)
        {
            std::mt19937_64 rng(*c.seed);
            return random_scenario(rng, c.rows, c.cols);
        }
        return c.config.empty() ? Scenario{} : load_scenario(c.config);
    }

    // Reads spca.* keys from the scenario file, if any, so `solve` honours the same settings as a sweep.
    SpcaConfig resolve_spca(const Common &c)
    {
        SpcaConfig cfg;
        if (!c.config.empty() && !c.seed)
        {
            const KeyValueDocument doc = KeyValueDocument::parse(detail::read_file(c.config));
            apply_spca_keys(doc, cfg);
        }
        return cfg;
    }

    std::string fmt(double v)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return buf;
    }

    void print_point(const PointResult &r)
    {
        std::cout << "r1            " << fmt(r.r1) << " bpcu\n";
        std::cout << "r2            " << fmt(r.r2) << " bpcu\n";
        std::cout << "sum           " << fmt(r.sum) << " bpcu\n";
        if (r.ee)
            std::cout << "ee            " << fmt(*r.ee) << " bpcu/W\n";
        if (r.alpha)
            std::cout << "alpha         " << *r.alpha << "\n";
        std::cout << "mean beta     " << fmt(r.mean_beta) << "\n";
        std::cout << "iterations    " << r.iterations << (r.converged ? "" : " (not converged)") << "\n";
        if (r.oracle_sum)
            std::cout << "oracle sum    " << fmt(*r.oracle_sum) << " (gap " << *r.oracle_gap << ")\n";
    }

    int run_solve(const Common &c)
    {
        const Scenario s = resolve_scenario(c);
        SolveOptions opt;
        opt.objective = parse_objective(c.objective);
        opt.scheme = parse_scheme(c.scheme);
        opt.mode = parse_mode(c.mode);
        opt.spca = resolve_spca(c);
        if (opt.mode == PanelMode::ModeSwitching && opt.objective == Objective::MaxMin)
            throw ValidationError("mode", "mode-switching is only defined for the sum and timeshare objectives");

        const PointResult r = solve_point(s, opt);
        if (!r.error.empty())
        {
            std::cerr << "error: " << r.error << "\n";
            return exit_not_converged;
        }
        print_point(r);
        if (!c.out.empty())
        {
            std::filesystem::create_directories(c.out);
            dump_beta(r.beta, s.panel, std::filesystem::path(c.out) / "beta.csv");
            detail::write_text(std::filesystem::path(c.out) / "scenario.cfg", write_scenario(s));
            std::cout << "wrote " << c.out << "/beta.csv\n";
        }
        return r.converged ? exit_ok : exit_not_converged;
    }

    int run_sweep_cmd(const Common &c, CLI::App *cmd, unsigned workers)
    {
        if (c.config.empty())
            throw ParseError(0, "", "sweep needs --config");
        SweepSpec spec = load_sweep(c.config);
        if (cmd->count("--scheme"))
            spec.scheme = parse_scheme(c.scheme);
        if (cmd->count("--mode"))
            spec.mode = parse_mode(c.mode);
        if (cmd->count("--objective"))
            spec.objective = parse_objective(c.objective);
        spec.validate();

        const std::string out = c.out.empty() ? "out" : c.out;
        const SweepOutcome o = run_sweep(spec, out, workers);
        std::cout << "swept " << to_string(spec.parameter) << " over " << o.values.size() << " points -> " << out
                  << "/sweep.csv\n";
        for (std::size_t i = 0; i < o.points.size(); ++i)
            if (!o.points[i].error.empty())
                std::cerr << "point " << i << ": " << o.points[i].error << "\n";
        if (!o.all_converged())
        {
            std::cerr << "some points did not converge; see " << out << "/manifest\n";
            return exit_not_converged;
        }
        return exit_ok;
    }

    int run_oracle(const Common &c)
    {
        const Scenario s = resolve_scenario(c);
        const DetectorScheme scheme = parse_scheme(c.scheme);
        const ChannelSet ch = channel_set(s);
        const LinkParams p = link_params(s);
        const OracleReport o = vertex_enumerate(ch, p, scheme);
        const SpcaResult r = spca_optimize(ch, p, scheme, resolve_spca(c));

        std::cout << "elements      " << ch.size() << "\n";
        std::cout << "oracle sum    " << fmt(o.best_rates.sum) << " bpcu (" << o.evaluations << " vertices, "
                  << fmt(o.runtime_seconds) << " s)\n";
        std::cout << "spca sum      " << fmt(r.rates.sum) << " bpcu (" << r.iterations << " iterations)\n";
        std::cout << "gap           " << o.best_rates.sum - r.rates.sum << "\n";
        std::cout << "oracle beta  ";
        for (std::size_t i = 0; i < o.best_beta.size(); ++i)
            std::cout << " " << o.best_beta[i];
        std::cout << "\n";
        return r.converged ? exit_ok : exit_not_converged;
    }

    int run_scan(const Common &c, std::size_t grid)
    {
        const Scenario s = resolve_scenario(c);
        const DetectorScheme scheme = parse_scheme(c.scheme);
        const ChannelSet ch = channel_set(s);
        const LinkParams p = link_params(s);
        const SpcaResult r = spca_optimize(ch, p, scheme, resolve_spca(c));
        const CoordinateScan scan = coordinate_scan(ch, p, scheme, r.beta, grid);

        std::size_t at_endpoint = 0;
        std::string csv = "element,beta,argmax,min_sum_rate,max_sum_rate\n";
        for (std::size_t i = 0; i < scan.values.size(); ++i)
        {
            const auto &row = scan.values[i];
            const double best = scan.grid[scan.argmax[i]];
            at_endpoint += best == 0.0 || best == 1.0;
            csv += std::to_string(i) + "," + detail::csv_number(r.beta[i]) + "," + detail::csv_number(best) + "," +
                   detail::csv_number(*std::min_element(row.begin(), row.end())) + "," +
                   detail::csv_number(*std::max_element(row.begin(), row.end())) + "\n";
        }
        std::cout << "sum           " << fmt(r.rates.sum) << " bpcu\n";
        std::cout << "endpoint argmax " << at_endpoint << " of " << scan.values.size() << " elements\n";
        if (!c.out.empty())
        {
            std::filesystem::create_directories(c.out);
            detail::write_text(std::filesystem::path(c.out) / "scan.csv", csv);
            std::cout << "wrote " << c.out << "/scan.csv\n";
        }
        return r.converged ? exit_ok : exit_not_converged;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"STAR-RIS uplink VLC link optimizer"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    Common c;
    unsigned workers = 0;
    std::size_t grid = 101;

    auto *solve = app.add_subcommand("solve", "optimize the panel for one scenario");
    add_scenario_flags(solve, c);
    solve->add_option("--mode", c.mode, "panel mode")->check(CLI::IsMember({"es", "ms"}));
    solve->add_option("--objective", c.objective, "objective")->check(CLI::IsMember({"sum", "timeshare", "maxmin"}));
    solve->add_option("--out", c.out, "directory for beta.csv");

    auto *sweep = app.add_subcommand("sweep", "run a parameter sweep described by a sweep file");
    sweep->add_option("--config", c.config, "sweep file")->required();
    sweep->add_option("--scheme", c.scheme, "override the file's scheme")->check(CLI::IsMember({"sud", "sic"}));
    sweep->add_option("--mode", c.mode, "override the file's mode")->check(CLI::IsMember({"es", "ms"}));
    sweep->add_option("--objective", c.objective, "override the file's objective")
        ->check(CLI::IsMember({"sum", "timeshare", "maxmin"}));
    sweep->add_option("--out", c.out, "output directory (default ./out)");
    sweep->add_option("--workers", workers, "parallel sweep points (0 = all cores)");

    auto *oracle = app.add_subcommand("oracle", "compare the optimizer against exhaustive vertex search");
    add_scenario_flags(oracle, c);

    auto *scan = app.add_subcommand("scan", "per-element sum-rate scans around the optimum");
    add_scenario_flags(scan, c);
    scan->add_option("--grid", grid, "grid points on [0, 1]")->check(CLI::Range(3, 100001));
    scan->add_option("--out", c.out, "directory for scan.csv");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try
    {
        if (*solve)
            return run_solve(c);
        if (*sweep)
            return run_sweep_cmd(c, sweep, workers);
        if (*oracle)
            return run_oracle(c);
        return run_scan(c, grid);
    }
    catch (const ParseError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_config;
    }
    catch (const ValidationError &e)
    {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return exit_config;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_config;
    }
}
