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

#ifndef STARVLC_LINK_HPP
#define STARVLC_LINK_HPP

#include "channel.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace starvlc
{
    // Reflection coefficients beta^r of the N panel elements. The transmission coefficient
    // of element i is always 1 - beta^r_i.
    class BetaVector
    {
    public:
        BetaVector() = default;

        explicit BetaVector(std::vector<double> beta_r) : values_(std::move(beta_r))
        {
            for (double b : values_)
                if (!(b >= 0.0 && b <= 1.0))
                    throw DomainError("reflection coefficients must lie in [0, 1]");
        }

        static BetaVector constant(std::size_t n, double value) { return BetaVector(std::vector<double>(n, value)); }

        std::size_t size() const noexcept { return values_.size(); }
        bool empty() const noexcept { return values_.empty(); }
        double operator[](std::size_t i) const noexcept { return values_[i]; }
        double reflect(std::size_t i) const noexcept { return values_[i]; }
        double transmit(std::size_t i) const noexcept { return 1.0 - values_[i]; }
        std::span<const double> values() const noexcept { return values_; }

        bool is_binary() const noexcept
        {
            for (double b : values_)
                if (b != 0.0 && b != 1.0)
                    return false;
            return true;
        }

        double mean() const noexcept
        {
            if (values_.empty())
                return 0.0;
            double s = 0.0;
            for (double b : values_)
                s += b;
            return s / static_cast<double>(values_.size());
        }

        friend bool operator==(const BetaVector &, const BetaVector &) = default;

    private:
        std::vector<double> values_;
    };

    enum class DetectorScheme
    {
        SUD, // each user decoded treating the other as noise
        SIC  // user 2 decoded first and cancelled, then user 1 interference-free
    };

    inline const char *to_string(DetectorScheme s) noexcept { return s == DetectorScheme::SIC ? "sic" : "sud"; }

    // The scalars of the received-signal model that the rate formulas need.
    struct LinkParams
    {
        double responsivity = 0.7;
        double power1 = 0.1;
        double power2 = 0.1;
        double noise_variance = 1e-10;

        double noise_std() const { return std::sqrt(noise_variance); }
    };

    inline LinkParams link_params(const Scenario &s) noexcept
    {
        return {s.front_end.responsivity, s.power1, s.power2, s.noise_variance};
    }

    struct EffectiveChannels
    {
        double h1 = 0.0;
        double h2 = 0.0;
    };

    struct SinrPair
    {
        double sinr1 = 0.0;
        double sinr2 = 0.0;
    };

    struct RatePair
    {
        double r1 = 0.0;  // [bpcu]
        double r2 = 0.0;  // [bpcu]
        double sum = 0.0; // r1 + r2
        std::optional<double> energy_efficiency; // sum / (P1 + P2); empty when no power is transmitted
    };

    inline EffectiveChannels effective_channels(const ChannelSet &ch, const BetaVector &beta)
    {
        if (ch.h_reflect.size() != beta.size() || ch.h_transmit.size() != beta.size())
            throw LengthMismatch("beta length does not match the channel set");
        EffectiveChannels h{ch.h_los, 0.0};
        for (std::size_t i = 0; i < beta.size(); ++i)
        {
            h.h1 += beta.reflect(i) * ch.h_reflect[i];
            h.h2 += beta.transmit(i) * ch.h_transmit[i];
        }
        return h;
    }

    inline SinrPair sinr(const EffectiveChannels &h, const LinkParams &p, DetectorScheme scheme)
    {
        if (!(p.noise_variance > 0.0))
            throw DomainError("noise variance must be positive");
        const double s1 = p.responsivity * h.h1 * p.power1;
        const double s2 = p.responsivity * h.h2 * p.power2;
        const double e1 = s1 * s1, e2 = s2 * s2;
        SinrPair out;
        out.sinr2 = e2 / (p.noise_variance + e1);
        out.sinr1 = scheme == DetectorScheme::SIC ? e1 / p.noise_variance : e1 / (p.noise_variance + e2);
        return out;
    }

    inline SinrPair sinr(const ChannelSet &ch, const BetaVector &beta, const LinkParams &p, DetectorScheme scheme)
    {
        return sinr(effective_channels(ch, beta), p, scheme);
    }

    inline constexpr double rate_snr_scale = std::numbers::e / (2.0 * std::numbers::pi);

    // Achievable rate 1/2 log2(1 + e/(2 pi) * sinr) [bpcu].
    inline double rate(double sinr_value)
    {
        if (!(sinr_value >= 0.0))
            throw DomainError("SINR must be non-negative");
        return 0.5 * std::log1p(rate_snr_scale * sinr_value) / std::numbers::ln2;
    }

    inline RatePair rate_pair(const SinrPair &s, const LinkParams &p)
    {
        RatePair out;
        out.r1 = rate(s.sinr1);
        out.r2 = rate(s.sinr2);
        out.sum = out.r1 + out.r2;
        const double total = p.power1 + p.power2;
        if (total > 0.0)
            out.energy_efficiency = out.sum / total;
        return out;
    }

    inline RatePair rate_pair(const ChannelSet &ch, const BetaVector &beta, const LinkParams &p, DetectorScheme scheme)
    {
        return rate_pair(sinr(ch, beta, p, scheme), p);
    }

    inline RatePair rate_pair(const ChannelSet &ch, const BetaVector &beta, const Scenario &s, DetectorScheme scheme)
    {
        return rate_pair(ch, beta, link_params(s), scheme);
    }

    // Rate of UE1 over the direct path alone (no panel, hence no UE2 signal at the AP).
    inline double los_only_rate(const ChannelSet &ch, const LinkParams &p)
    {
        const double s = p.responsivity * ch.h_los * p.power1;
        return rate(s * s / p.noise_variance);
    }
}

#endif
