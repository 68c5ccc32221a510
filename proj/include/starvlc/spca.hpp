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

#ifndef STARVLC_SPCA_HPP
#define STARVLC_SPCA_HPP

#include "link.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

namespace starvlc
{
    // Sequential parametric convex approximation of the sum-rate problem.
    //
    // Each user k has an SINR lower bound u_k and the constraint rho H_k P_k >= sqrt(u_k) v_k, where
    // v_k = ||[rho H_j P_j, sigma_n]|| bounds the interference-plus-noise amplitude. The bilinear
    // right-hand side is replaced by its convex majorant u_k/(2 theta_k) + v_k^2 theta_k / 2. With
    // theta fixed, both constraints are tight at the optimum, so u and v can be eliminated and the
    // subproblem becomes a smooth maximization over beta in [0,1]^N:
    //
    //   SUD and SIC user 2:  u_k(beta) = max(0, 2 theta_k a_k - theta_k^2 (a_j^2 + sigma_n^2))
    //   SIC user 1:          u_1(beta) = max(0, 2 theta_1 a_1 / sigma_n - theta_1^2)
    //
    // with a_k = rho H_k(beta) P_k. The SIC user-1 constraint is the noise-normalized form, for
    // which v_1 == 1.

    struct SurrogateState
    {
        std::array<double, 2> theta{100.0, 100.0};
        std::array<double, 2> u{0.0, 0.0}; // SINR lower bounds
        std::array<double, 2> v{1.0, 1.0}; // norm bound paired with user k's constraint
    };

    // sqrt(u) v <= u/(2 theta) + v^2 theta / 2 for every theta > 0, with equality at theta = sqrt(u)/v.
    inline double surrogate_bound(double u, double v, double theta) { return u / (2.0 * theta) + v * v * theta / 2.0; }

    struct InnerSolverSettings
    {
        double initial_step = 1.0;
        double shrink = 0.5;
        double armijo_slope = 1e-4;
        double tolerance = 1e-8; // on the projected-gradient norm
        int max_iterations = 5000;
    };

    struct SpcaConfig
    {
        double theta_init = 100.0;
        double tolerance = 1e-6; // infinity norm over (beta, u, v) between outer iterations
        int max_outer_iterations = 50;
        InnerSolverSettings inner{};
        double beta_init = 0.5;
        // Also start from the all-reflect and all-transmit vertices (theta tight there) and keep
        // the best run. SPCA is a local method; these two extra runs find the global optimum
        // on instances where the default start stalls in the other basin.
        bool vertex_starts = true;

        void validate() const
        {
            if (!(theta_init > 0.0) || !(tolerance > 0.0) || max_outer_iterations <= 0)
                throw ValidationError("spca", "theta_init, tolerance and max_outer_iterations must be positive");
            if (!(inner.initial_step > 0.0) || !(inner.shrink > 0.0 && inner.shrink < 1.0) ||
                !(inner.armijo_slope > 0.0 && inner.armijo_slope < 1.0) || !(inner.tolerance > 0.0) ||
                inner.max_iterations <= 0)
                throw ValidationError("spca.inner", "step, shrink, slope, tolerance and iteration cap must be positive");
            if (!(beta_init >= 0.0 && beta_init <= 1.0))
                throw ValidationError("spca.beta_init", "must lie in [0, 1]");
        }
    };

    enum class Objective
    {
        SumRate,
        TimeSharing,
        MaxMin
    };

    inline const char *to_string(Objective o) noexcept
    {
        switch (o)
        {
        case Objective::TimeSharing:
            return "timeshare";
        case Objective::MaxMin:
            return "maxmin";
        default:
            return "sum";
        }
    }

    // Non-negative per-user weights of w1 R1 + w2 R2. Sum-rate is {1, 1}.
    struct RateWeights
    {
        double w1 = 1.0;
        double w2 = 1.0;
    };

    struct TraceEntry
    {
        double objective = 0.0; // exact objective at the iterate (sum-rate for the default weights)
        double surrogate = 0.0; // reduced (surrogate) objective at the iterate, before the theta update
        SurrogateState state;   // theta used for this iteration, u and v at the iterate
    };

    struct SpcaResult
    {
        BetaVector beta;
        RatePair rates;
        std::vector<TraceEntry> trace;
        bool converged = false;
        bool inner_converged = true; // every subproblem met its tolerance
        int iterations = 0;
        std::size_t starts = 1;        // runs attempted
        std::size_t winning_start = 0; // 0 = default start, 1 = all-reflect, 2 = all-transmit
        bool degenerate = false;       // objective is zero for every beta (e.g. a user with no channel)

        // Per start, in start order: its objective trace, outer iterations and convergence flag.
        std::vector<std::vector<double>> start_traces;
        std::vector<int> start_iterations;
        std::vector<bool> start_converged;
    };

    struct ReducedObjective
    {
        double value = 0.0;
        std::vector<double> gradient;   // d value / d beta^r
        std::array<double, 2> u{};      // eliminated SINR bounds (clamped at 0)
        std::array<double, 2> user{};   // per-user surrogate rate 1/2 log2(1 + e/(2 pi) u_k)
        std::array<std::vector<double>, 2> user_gradient;
    };

    namespace detail
    {
        inline double log2_rate_slope(double u) { return 0.5 * rate_snr_scale / ((1.0 + rate_snr_scale * u) * std::numbers::ln2); }

        inline void check_lengths(const ChannelSet &ch, std::size_t n)
        {
            if (ch.h_reflect.size() != n || ch.h_transmit.size() != n)
                throw LengthMismatch("beta length does not match the channel set");
        }

        // Signal amplitudes a_k = rho H_k P_k at beta.
        inline std::array<double, 2> amplitudes(const ChannelSet &ch, std::span<const double> beta, const LinkParams &p)
        {
            double h1 = ch.h_los, h2 = 0.0;
            for (std::size_t i = 0; i < beta.size(); ++i)
            {
                h1 += beta[i] * ch.h_reflect[i];
                h2 += (1.0 - beta[i]) * ch.h_transmit[i];
            }
            return {p.responsivity * h1 * p.power1, p.responsivity * h2 * p.power2};
        }

        inline double weighted(const RateWeights &w, double a, double b) { return w.w1 * a + w.w2 * b; }
    }

    // Reduced subproblem objective and its exact gradient. Users with zero weight are skipped.
    inline ReducedObjective reduced_objective(std::span<const double> beta, const SurrogateState &state, const ChannelSet &ch,
                                              const LinkParams &p, DetectorScheme scheme, const RateWeights &weights = {})
    {
        detail::check_lengths(ch, beta.size());
        const std::size_t n = beta.size();
        const auto [a1, a2] = detail::amplitudes(ch, beta, p);
        const double sigma = p.noise_std();
        const double noise = p.noise_variance;
        const double t1 = state.theta[0], t2 = state.theta[1];

        double u1, u2;
        if (scheme == DetectorScheme::SIC)
            u1 = 2.0 * t1 * a1 / sigma - t1 * t1;
        else
            u1 = 2.0 * t1 * a1 - t1 * t1 * (a2 * a2 + noise);
        u2 = 2.0 * t2 * a2 - t2 * t2 * (a1 * a1 + noise);

        ReducedObjective out;
        out.u = {std::max(u1, 0.0), std::max(u2, 0.0)};
        out.gradient.assign(n, 0.0);
        out.user_gradient[0].assign(n, 0.0);
        out.user_gradient[1].assign(n, 0.0);

        const double da1 = p.responsivity * p.power1;  // d a1 / d beta_i = da1 * Hr_i
        const double da2 = -p.responsivity * p.power2; // d a2 / d beta_i = da2 * Ht_i

        if (u1 > 0.0)
        {
            out.user[0] = rate(u1);
            const double s = detail::log2_rate_slope(u1);
            for (std::size_t i = 0; i < n; ++i)
            {
                double du;
                if (scheme == DetectorScheme::SIC)
                    du = 2.0 * t1 * da1 * ch.h_reflect[i] / sigma;
                else
                    du = 2.0 * t1 * da1 * ch.h_reflect[i] - 2.0 * t1 * t1 * a2 * da2 * ch.h_transmit[i];
                out.user_gradient[0][i] = s * du;
            }
        }
        if (u2 > 0.0)
        {
            out.user[1] = rate(u2);
            const double s = detail::log2_rate_slope(u2);
            for (std::size_t i = 0; i < n; ++i)
            {
                const double du = 2.0 * t2 * da2 * ch.h_transmit[i] - 2.0 * t2 * t2 * a1 * da1 * ch.h_reflect[i];
                out.user_gradient[1][i] = s * du;
            }
        }
        if (weights.w1 == 0.0)
            out.user[0] = 0.0, std::fill(out.user_gradient[0].begin(), out.user_gradient[0].end(), 0.0);
        if (weights.w2 == 0.0)
            out.user[1] = 0.0, std::fill(out.user_gradient[1].begin(), out.user_gradient[1].end(), 0.0);

        out.value = detail::weighted(weights, out.user[0], out.user[1]);
        for (std::size_t i = 0; i < n; ++i)
            out.gradient[i] = detail::weighted(weights, out.user_gradient[0][i], out.user_gradient[1][i]);
        return out;
    }

    inline ReducedObjective reduced_objective(const BetaVector &beta, const SurrogateState &state, const ChannelSet &ch,
                                              const Scenario &s, DetectorScheme scheme, const RateWeights &weights = {})
    {
        return reduced_objective(beta.values(), state, ch, link_params(s), scheme, weights);
    }

    // (u, v) at beta with every relaxed constraint tight: u_k = SINR_k(beta), v_k the matching norm.
    inline SurrogateState tight_state(std::span<const double> beta, const ChannelSet &ch, const LinkParams &p,
                                      DetectorScheme scheme)
    {
        const auto [a1, a2] = detail::amplitudes(ch, beta, p);
        const double noise = p.noise_variance;
        SurrogateState st;
        st.v[1] = std::sqrt(a1 * a1 + noise);
        st.u[1] = a2 * a2 / (a1 * a1 + noise);
        if (scheme == DetectorScheme::SIC)
        {
            st.v[0] = 1.0;
            st.u[0] = a1 * a1 / noise;
        }
        else
        {
            st.v[0] = std::sqrt(a2 * a2 + noise);
            st.u[0] = a1 * a1 / (a2 * a2 + noise);
        }
        return st;
    }

    // theta_k <- sqrt(u_k) / v_k. Keeps the previous theta when the user is silent (u_k == 0)
    // or v_k is degenerate; the majorant stays valid for any positive theta.
    inline std::array<double, 2> updated_theta(const SurrogateState &st, const std::array<double, 2> &previous)
    {
        std::array<double, 2> out = previous;
        for (std::size_t k = 0; k < 2; ++k)
            if (st.u[k] > 0.0 && st.v[k] >= 1e-30)
                out[k] = std::sqrt(st.u[k]) / st.v[k];
        return out;
    }

    struct SubproblemResult
    {
        BetaVector beta;
        double value = 0.0;
        int iterations = 0;
        bool converged = false;
    };

    namespace detail
    {
        inline double projected_gradient_norm(std::span<const double> x, std::span<const double> g)
        {
            double s = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i)
            {
                const double d = std::clamp(x[i] + g[i], 0.0, 1.0) - x[i];
                s += d * d;
            }
            return std::sqrt(s);
        }

        // Projected gradient ascent with Armijo backtracking over [0,1]^N. The first trial step
        // of every iteration after the first is the Barzilai-Borwein step, so the solver is
        // insensitive to the (widely varying) gradient scale of the reduced objective.
        template <class Eval>
        SubproblemResult projected_ascent(std::vector<double> x, const InnerSolverSettings &cfg, Eval &&eval)
        {
            auto cur = eval(std::span<const double>(x));
            double trial = cfg.initial_step;
            SubproblemResult out;
            std::vector<double> next(x.size());

            for (int it = 0;; ++it)
            {
                if (projected_gradient_norm(x, cur.gradient) < cfg.tolerance)
                {
                    out.converged = true;
                    break;
                }
                if (it >= cfg.max_iterations)
                    break;
                out.iterations = it + 1;

                double step = trial;
                bool accepted = false;
                decltype(cur) cand;
                for (int ls = 0; ls < 200; ++ls)
                {
                    double slope = 0.0;
                    for (std::size_t i = 0; i < x.size(); ++i)
                    {
                        next[i] = std::clamp(x[i] + step * cur.gradient[i], 0.0, 1.0);
                        slope += cur.gradient[i] * (next[i] - x[i]);
                    }
                    if (slope <= 0.0)
                        break;
                    cand = eval(std::span<const double>(next));
                    if (cand.value >= cur.value + cfg.armijo_slope * slope)
                    {
                        accepted = true;
                        break;
                    }
                    step *= cfg.shrink;
                }
                if (!accepted) // no ascent possible at working precision
                {
                    out.converged = projected_gradient_norm(x, cur.gradient) < std::sqrt(cfg.tolerance);
                    break;
                }

                double ss = 0.0, sy = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i)
                {
                    const double s = next[i] - x[i];
                    ss += s * s;
                    sy += s * (cand.gradient[i] - cur.gradient[i]);
                }
                trial = sy < 0.0 ? ss / -sy : 2.0 * step;
                trial = std::clamp(trial, 1e-12, 1e300);

                x.swap(next);
                cur = std::move(cand);
            }
            out.value = cur.value;
            out.beta = BetaVector(std::move(x));
            return out;
        }

        inline std::vector<double> to_vector(std::span<const double> s) { return {s.begin(), s.end()}; }
    }

    // Maximizes the reduced objective over the box for fixed theta.
    //
    // The clamp at u_k = 0 makes the objective non-concave, but each user's term alone is maximized
    // at a vertex (user 1 at all-reflect, user 2 at all-transmit) and the sum is concave where both
    // users are active. Ascending from `start` (normally the previous iterate, where both bounds
    // are tight and positive) and from the two vertices, and keeping the best, covers all three cases.
    inline SubproblemResult solve_subproblem(const SurrogateState &state, const ChannelSet &ch, const LinkParams &p,
                                             DetectorScheme scheme, const SpcaConfig &config, const BetaVector &start,
                                             const RateWeights &weights = {})
    {
        detail::check_lengths(ch, start.size());
        auto eval = [&](std::span<const double> b) { return reduced_objective(b, state, ch, p, scheme, weights); };
        SubproblemResult best = detail::projected_ascent(detail::to_vector(start.values()), config.inner, eval);
        if (start.size() == 0)
            return best;
        for (double vertex : {1.0, 0.0})
        {
            SubproblemResult r =
                detail::projected_ascent(std::vector<double>(start.size(), vertex), config.inner, eval);
            if (r.value > best.value)
            {
                r.iterations += best.iterations;
                best = std::move(r);
            }
        }
        return best;
    }

    inline BetaVector solve_subproblem(const SurrogateState &state, const ChannelSet &ch, const Scenario &s,
                                       DetectorScheme scheme, const SpcaConfig &config)
    {
        return solve_subproblem(state, ch, link_params(s), scheme, config,
                                BetaVector::constant(ch.size(), config.beta_init))
            .beta;
    }

    namespace detail
    {
        inline double weighted_rates(const RatePair &r, const RateWeights &w) { return weighted(w, r.r1, r.r2); }

        inline double max_abs_change(std::span<const double> beta, const SurrogateState &st,
                                     std::span<const double> prev_beta, const SurrogateState &prev)
        {
            double d = 0.0;
            for (std::size_t i = 0; i < beta.size(); ++i)
                d = std::max(d, std::fabs(beta[i] - prev_beta[i]));
            for (std::size_t k = 0; k < 2; ++k)
            {
                d = std::max(d, std::fabs(st.u[k] - prev.u[k]));
                d = std::max(d, std::fabs(st.v[k] - prev.v[k]));
            }
            return d;
        }

        // Per-start inner maximizer: (theta, start) -> (beta, surrogate value, converged).
        template <class Inner, class Exact>
        SpcaResult outer_loop(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme, const SpcaConfig &cfg,
                              BetaVector beta, std::array<double, 2> theta, Inner &&inner, Exact &&exact)
        {
            SpcaResult out;
            // With every panel gain zero the objective does not depend on beta at all.
            const bool inert = std::all_of(ch.h_reflect.begin(), ch.h_reflect.end(), [](double h) { return h == 0.0; }) &&
                               std::all_of(ch.h_transmit.begin(), ch.h_transmit.end(), [](double h) { return h == 0.0; });
            SurrogateState prev = tight_state(beta.values(), ch, p, scheme);
            BetaVector prev_beta = beta;

            for (int m = 1; m <= cfg.max_outer_iterations; ++m)
            {
                SurrogateState used;
                used.theta = theta;
                SubproblemResult sub = inner(used, beta);
                out.inner_converged = out.inner_converged && sub.converged;
                beta = std::move(sub.beta);

                SurrogateState st = tight_state(beta.values(), ch, p, scheme);
                st.theta = theta;
                const RatePair r = rate_pair(ch, beta, p, scheme);
                out.trace.push_back({exact(r), sub.value, st});
                out.iterations = m;

                bool done = max_abs_change(beta.values(), st, prev_beta.values(), prev) < cfg.tolerance;
                const std::array<double, 2> next = updated_theta(st, theta);
                for (std::size_t k = 0; k < 2; ++k)
                    done = done && std::fabs(next[k] - theta[k]) <= cfg.tolerance * std::max(1.0, std::fabs(theta[k]));
                theta = next;
                done = done || inert;
                prev = st;
                prev_beta = beta;
                if (done)
                {
                    out.converged = true;
                    break;
                }
            }
            out.rates = rate_pair(ch, beta, p, scheme);
            out.beta = std::move(beta);
            return out;
        }

        inline std::array<double, 2> tight_theta(const BetaVector &beta, const ChannelSet &ch, const LinkParams &p,
                                                 DetectorScheme scheme, double fallback)
        {
            return updated_theta(tight_state(beta.values(), ch, p, scheme), {fallback, fallback});
        }

        // Runs the outer loop from the default start and, if enabled, the two vertex starts;
        // returns the run with the best exact objective (earliest start on ties).
        template <class Inner, class Exact>
        SpcaResult multi_start(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme, const SpcaConfig &cfg,
                               Inner &&inner, Exact &&exact)
        {
            cfg.validate();
            const std::size_t n = ch.size();
            std::vector<std::vector<double>> traces;
            std::vector<int> iterations;
            std::vector<bool> converged;
            auto record = [&](const SpcaResult &r) {
                std::vector<double> t;
                for (const auto &e : r.trace)
                    t.push_back(e.objective);
                traces.push_back(std::move(t));
                iterations.push_back(r.iterations);
                converged.push_back(r.converged);
            };

            SpcaResult best = outer_loop(ch, p, scheme, cfg, BetaVector::constant(n, cfg.beta_init),
                                         {cfg.theta_init, cfg.theta_init}, inner, exact);
            record(best);
            std::size_t starts = 1;
            if (cfg.vertex_starts && n > 0)
            {
                for (double vertex : {1.0, 0.0})
                {
                    BetaVector b0 = BetaVector::constant(n, vertex);
                    SpcaResult r = outer_loop(ch, p, scheme, cfg, b0, tight_theta(b0, ch, p, scheme, cfg.theta_init),
                                              inner, exact);
                    record(r);
                    if (exact(r.rates) > exact(best.rates))
                    {
                        best = std::move(r);
                        best.winning_start = starts;
                    }
                    ++starts;
                }
            }
            best.start_traces = std::move(traces);
            best.start_iterations = std::move(iterations);
            best.start_converged = std::move(converged);
            best.starts = starts;
            return best;
        }
    }

    // Weighted-rate SPCA; spca_optimize is the {1, 1} case.
    inline SpcaResult spca_optimize_weighted(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                             const RateWeights &weights, const SpcaConfig &config = {})
    {
        auto inner = [&](const SurrogateState &st, const BetaVector &start) {
            return solve_subproblem(st, ch, p, scheme, config, start, weights);
        };
        auto exact = [&](const RatePair &r) { return detail::weighted_rates(r, weights); };
        SpcaResult out = detail::multi_start(ch, p, scheme, config, inner, exact);
        out.degenerate = !(exact(out.rates) > 0.0);
        return out;
    }

    inline SpcaResult spca_optimize(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                    const SpcaConfig &config = {})
    {
        return spca_optimize_weighted(ch, p, scheme, {1.0, 1.0}, config);
    }

    inline SpcaResult spca_optimize(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme,
                                    const SpcaConfig &config = {})
    {
        return spca_optimize(ch, link_params(s), scheme, config);
    }

    // Sum-rate with the given weights at a binary or fractional beta.
    inline double weighted_sum_rate(const ChannelSet &ch, const BetaVector &beta, const LinkParams &p,
                                    DetectorScheme scheme, const RateWeights &w = {})
    {
        return detail::weighted_rates(rate_pair(ch, beta, p, scheme), w);
    }

    // Rounds each coefficient to {0, 1}, sweeping in index order and keeping the endpoint with
    // the larger exact sum-rate (ties go to 1; an entry that is already binary only moves on a
    // strict improvement). Falls back to nearest rounding if that is better.
    inline BetaVector round_to_vertex(const ChannelSet &ch, const BetaVector &beta, const LinkParams &p,
                                      DetectorScheme scheme, const RateWeights &w = {})
    {
        std::vector<double> greedy(beta.values().begin(), beta.values().end());
        for (std::size_t i = 0; i < greedy.size(); ++i)
        {
            const double current = greedy[i];
            greedy[i] = 1.0;
            const double f1 = weighted_sum_rate(ch, BetaVector(greedy), p, scheme, w);
            greedy[i] = 0.0;
            const double f0 = weighted_sum_rate(ch, BetaVector(greedy), p, scheme, w);
            if (current == 0.0)
                greedy[i] = f1 > f0 ? 1.0 : 0.0;
            else if (current == 1.0)
                greedy[i] = f0 > f1 ? 0.0 : 1.0;
            else
                greedy[i] = f1 >= f0 ? 1.0 : 0.0;
        }
        std::vector<double> nearest(beta.values().begin(), beta.values().end());
        for (double &b : nearest)
            b = b >= 0.5 ? 1.0 : 0.0;

        BetaVector g(std::move(greedy)), r(std::move(nearest));
        return weighted_sum_rate(ch, g, p, scheme, w) >= weighted_sum_rate(ch, r, p, scheme, w) ? g : r;
    }

    // Binary (mode-switching) panel: energy-splitting SPCA followed by exact endpoint rounding.
    inline SpcaResult mode_switching_optimize(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                              const SpcaConfig &config = {})
    {
        SpcaResult out = spca_optimize(ch, p, scheme, config);
        out.beta = round_to_vertex(ch, out.beta, p, scheme);
        out.rates = rate_pair(ch, out.beta, p, scheme);
        return out;
    }

    inline SpcaResult mode_switching_optimize(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme,
                                              const SpcaConfig &config = {})
    {
        return mode_switching_optimize(ch, link_params(s), scheme, config);
    }

    struct TimeSharingResult
    {
        double alpha = 1.0;  // weight of user 1; always an endpoint
        double value = 0.0;  // alpha R1 + (1 - alpha) R2
        BetaVector beta;
        RatePair rates;      // both users' rates at beta under the detector scheme
        SpcaResult run;      // the winning single-user run
    };

    // max over (alpha, beta) of alpha R1 + (1 - alpha) R2. Linear in alpha for fixed beta, so the
    // optimum is the better of the two single-user optima; ties go to alpha = 1.
    inline TimeSharingResult time_sharing_optimize(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                                   const SpcaConfig &config = {})
    {
        SpcaResult user1 = spca_optimize_weighted(ch, p, scheme, {1.0, 0.0}, config);
        SpcaResult user2 = spca_optimize_weighted(ch, p, scheme, {0.0, 1.0}, config);
        TimeSharingResult out;
        if (user1.rates.r1 >= user2.rates.r2)
        {
            out.alpha = 1.0;
            out.value = user1.rates.r1;
            out.run = std::move(user1);
        }
        else
        {
            out.alpha = 0.0;
            out.value = user2.rates.r2;
            out.run = std::move(user2);
        }
        out.beta = out.run.beta;
        out.rates = out.run.rates;
        return out;
    }

    inline TimeSharingResult time_sharing_optimize(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme,
                                                   const SpcaConfig &config = {})
    {
        return time_sharing_optimize(ch, link_params(s), scheme, config);
    }

    namespace detail
    {
        // Unclamped SINR surrogates u_k(beta) (concave quadratics) and their gradients.
        inline std::array<double, 2> sinr_surrogates(std::span<const double> beta, const SurrogateState &st,
                                                     const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                                     std::array<std::vector<double>, 2> *grad)
        {
            const auto [a1, a2] = amplitudes(ch, beta, p);
            const double sigma = p.noise_std();
            const double t1 = st.theta[0], t2 = st.theta[1];
            const bool sic = scheme == DetectorScheme::SIC;
            const double u1 = sic ? 2.0 * t1 * a1 / sigma - t1 * t1 : 2.0 * t1 * a1 - t1 * t1 * (a2 * a2 + p.noise_variance);
            const double u2 = 2.0 * t2 * a2 - t2 * t2 * (a1 * a1 + p.noise_variance);
            if (grad)
            {
                const double da1 = p.responsivity * p.power1;
                const double da2 = -p.responsivity * p.power2;
                for (auto &g : *grad)
                    g.assign(beta.size(), 0.0);
                for (std::size_t i = 0; i < beta.size(); ++i)
                {
                    const double d1 = da1 * ch.h_reflect[i], d2 = da2 * ch.h_transmit[i];
                    (*grad)[0][i] = sic ? 2.0 * t1 * d1 / sigma : 2.0 * t1 * d1 - 2.0 * t1 * t1 * a2 * d2;
                    (*grad)[1][i] = 2.0 * t2 * d2 - 2.0 * t2 * t2 * a1 * d1;
                }
            }
            return {u1, u2};
        }

        // Both rates are the same increasing function of their SINR, so min(R1, R2) is maximized
        // by maximizing min(u1, u2). Projected subgradient ascent with normalized diminishing
        // steps; returns the best iterate seen.
        inline SubproblemResult max_min_subproblem(const SurrogateState &st, const ChannelSet &ch, const LinkParams &p,
                                                   DetectorScheme scheme, const InnerSolverSettings &cfg,
                                                   const BetaVector &start)
        {
            const std::size_t n = start.size();
            std::vector<double> x(start.values().begin(), start.values().end());
            std::array<std::vector<double>, 2> grads;
            std::vector<double> g;
            auto value_at = [&](std::span<const double> b) {
                const auto u = sinr_surrogates(b, st, ch, p, scheme, &grads);
                const std::size_t k = u[0] <= u[1] ? 0 : 1;
                g = grads[k];
                return u[k];
            };

            SubproblemResult out;
            double best = value_at(x);
            std::vector<double> best_x = x;
            const double radius = 0.25 * std::sqrt(static_cast<double>(std::max<std::size_t>(n, 1)));

            for (int it = 0; it < cfg.max_iterations && n > 0; ++it)
            {
                double gn = 0.0;
                for (double gi : g)
                    gn += gi * gi;
                gn = std::sqrt(gn);
                if (gn == 0.0)
                    break;
                const double step = radius / (std::sqrt(static_cast<double>(it) + 1.0) * gn);
                for (std::size_t i = 0; i < n; ++i)
                    x[i] = std::clamp(x[i] + step * g[i], 0.0, 1.0);
                const double v = value_at(x);
                if (v > best)
                {
                    best = v;
                    best_x = x;
                }
                out.iterations = it + 1;
            }
            // A kink optimum never satisfies a gradient test; the best iterate is the answer.
            out.converged = true;
            out.value = rate(std::max(best, 0.0));
            out.beta = BetaVector(std::move(best_x));
            return out;
        }
    }

    // max over beta of min(R1, R2), with theta updated for both users every outer iteration.
    inline SpcaResult max_min_optimize(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                       const SpcaConfig &config = {})
    {
        auto inner = [&](const SurrogateState &st, const BetaVector &start) {
            return detail::max_min_subproblem(st, ch, p, scheme, config.inner, start);
        };
        auto exact = [](const RatePair &r) { return std::min(r.r1, r.r2); };
        SpcaResult out = detail::multi_start(ch, p, scheme, config, inner, exact);
        out.degenerate = !(exact(out.rates) > 0.0);
        return out;
    }

    inline SpcaResult max_min_optimize(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme,
                                       const SpcaConfig &config = {})
    {
        return max_min_optimize(ch, link_params(s), scheme, config);
    }
}

#endif
