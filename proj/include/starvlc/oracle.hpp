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

#ifndef STARVLC_ORACLE_HPP
#define STARVLC_ORACLE_HPP

#include "link.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <thread>
#include <vector>

namespace starvlc
{
    // Exact optimum over the binary coefficient vectors, found by exhaustive search.
    struct OracleReport
    {
        BetaVector best_beta;
        RatePair best_rates;
        std::uint64_t evaluations = 0;
        double runtime_seconds = 0.0;
    };

    inline constexpr std::size_t vertex_enumeration_cap = 24;

    namespace detail
    {
        // Element k of the vertex is bit k of the mask. Lexicographic order on beta vectors
        // (element 0 most significant) decides between equal sum-rates.
        inline bool lex_less(std::uint64_t a, std::uint64_t b) noexcept
        {
            if (a == b)
                return false;
            const std::uint64_t first_diff = (a ^ b) & ~((a ^ b) - 1);
            return (a & first_diff) == 0;
        }

        struct Candidate
        {
            double value = -1.0;
            std::uint64_t mask = 0;

            bool better_than(const Candidate &o) const noexcept
            {
                return value > o.value || (value == o.value && lex_less(mask, o.mask));
            }
        };

        inline double sum_rate_of(double h1, double h2, const LinkParams &p, DetectorScheme scheme)
        {
            const SinrPair s = sinr(EffectiveChannels{h1, h2}, p, scheme);
            return rate(s.sinr1) + rate(s.sinr2);
        }

        // Scans Gray-code positions [first, last). Successive vertices differ in one element,
        // so H1 and H2 are updated by one add/subtract; they are recomputed from scratch every
        // `resync` steps to bound drift.
        inline Candidate scan_gray_range(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                         std::uint64_t first, std::uint64_t last)
        {
            const std::size_t n = ch.size();
            constexpr std::uint64_t resync = 4096;
            auto full = [&](std::uint64_t mask, double &h1, double &h2) {
                h1 = ch.h_los, h2 = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                {
                    if ((mask >> k) & 1u)
                        h1 += ch.h_reflect[k];
                    else
                        h2 += ch.h_transmit[k];
                }
            };

            Candidate best;
            double h1 = 0.0, h2 = 0.0;
            std::uint64_t mask = first ^ (first >> 1);
            full(mask, h1, h2);
            for (std::uint64_t i = first; i < last; ++i)
            {
                if (i != first)
                {
                    const std::uint64_t next = i ^ (i >> 1);
                    const std::uint64_t flipped = next ^ mask;
                    mask = next;
                    if ((i - first) % resync == 0)
                        full(mask, h1, h2);
                    else
                    {
                        const auto k = static_cast<std::size_t>(std::countr_zero(flipped));
                        if (mask & flipped)
                            h1 += ch.h_reflect[k], h2 -= ch.h_transmit[k];
                        else
                            h1 -= ch.h_reflect[k], h2 += ch.h_transmit[k];
                    }
                }
                const Candidate c{sum_rate_of(h1, std::max(h2, 0.0), p, scheme), mask};
                if (c.better_than(best))
                    best = c;
            }
            return best;
        }

        inline BetaVector beta_from_mask(std::uint64_t mask, std::size_t n)
        {
            std::vector<double> b(n);
            for (std::size_t k = 0; k < n; ++k)
                b[k] = static_cast<double>((mask >> k) & 1u);
            return BetaVector(std::move(b));
        }
    }

    // Evaluates the exact sum-rate at all 2^N binary beta vectors. `workers` == 0 picks the
    // hardware concurrency; each worker owns a disjoint index range and its own running best.
    inline OracleReport vertex_enumerate(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                         unsigned workers = 0)
    {
        const std::size_t n = ch.size();
        if (ch.h_transmit.size() != n)
            throw LengthMismatch("channel vectors differ in length");
        if (n > vertex_enumeration_cap)
            throw CapExceeded("vertex enumeration is limited to " + std::to_string(vertex_enumeration_cap) +
                              " elements (got " + std::to_string(n) + "); use spca_optimize for larger panels");

        const auto t0 = std::chrono::steady_clock::now();
        const std::uint64_t total = std::uint64_t{1} << n;
        if (workers == 0)
            workers = std::max(1u, std::thread::hardware_concurrency());
        workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, std::max<std::uint64_t>(1, total / 4096)));

        std::vector<detail::Candidate> partial(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
            {
                const std::uint64_t first = total * w / workers;
                const std::uint64_t last = total * (w + 1) / workers;
                pool.emplace_back([&, w, first, last] { partial[w] = detail::scan_gray_range(ch, p, scheme, first, last); });
            }
        }
        detail::Candidate best;
        for (const auto &c : partial)
            if (c.better_than(best))
                best = c;

        OracleReport out;
        out.best_beta = detail::beta_from_mask(best.mask, n);
        out.best_rates = rate_pair(ch, out.best_beta, p, scheme);
        out.evaluations = total;
        out.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

    inline OracleReport vertex_enumerate(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme, unsigned workers = 0)
    {
        return vertex_enumerate(ch, link_params(s), scheme, workers);
    }

    // Sum-rate along each coordinate with the others held at a reference point.
    struct CoordinateScan
    {
        std::vector<double> grid;                // uniform on [0, 1]
        std::vector<std::vector<double>> values; // values[i][g]: sum-rate with beta_i = grid[g]
        std::vector<std::size_t> argmax;         // first grid index attaining the maximum, per coordinate
    };

    inline CoordinateScan coordinate_scan(const ChannelSet &ch, const LinkParams &p, DetectorScheme scheme,
                                          const BetaVector &beta_star, std::size_t grid_points)
    {
        if (grid_points < 3)
            throw DomainError("coordinate scan needs at least 3 grid points");
        if (ch.size() != beta_star.size())
            throw LengthMismatch("beta length does not match the channel set");

        CoordinateScan out;
        out.grid.resize(grid_points);
        for (std::size_t g = 0; g < grid_points; ++g)
            out.grid[g] = static_cast<double>(g) / static_cast<double>(grid_points - 1);

        const EffectiveChannels base = effective_channels(ch, beta_star);
        for (std::size_t i = 0; i < beta_star.size(); ++i)
        {
            std::vector<double> row(grid_points);
            for (std::size_t g = 0; g < grid_points; ++g)
            {
                const double d = out.grid[g] - beta_star[i];
                const EffectiveChannels h{base.h1 + d * ch.h_reflect[i], base.h2 - d * ch.h_transmit[i]};
                const SinrPair s = sinr(EffectiveChannels{h.h1, std::max(h.h2, 0.0)}, p, scheme);
                row[g] = rate(s.sinr1) + rate(s.sinr2);
            }
            out.argmax.push_back(static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin()));
            out.values.push_back(std::move(row));
        }
        return out;
    }

    inline CoordinateScan coordinate_scan(const ChannelSet &ch, const Scenario &s, DetectorScheme scheme,
                                          const BetaVector &beta_star, std::size_t grid_points)
    {
        return coordinate_scan(ch, link_params(s), scheme, beta_star, grid_points);
    }
}

#endif
