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

#include <starvlc/channel.hpp>
#include <starvlc/link.hpp>
#include <starvlc/sampling.hpp>

#include <gtest/gtest.h>

#include <numbers>
#include <random>

using namespace starvlc;

namespace
{
    std::vector<double> pattern_beta()
    {
        std::vector<double> b(80);
        for (std::size_t i = 0; i < b.size(); ++i)
            b[i] = static_cast<double>(i % 5) / 4.0;
        return b;
    }

    BetaVector random_beta(std::mt19937_64 &rng, std::size_t n)
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        std::vector<double> b(n);
        for (double &x : b)
            x = u(rng);
        return BetaVector(std::move(b));
    }
}

TEST(BetaVector, Validation)
{
    EXPECT_THROW(BetaVector({0.5, 1.1}), DomainError);
    EXPECT_THROW(BetaVector({-0.1}), DomainError);
    EXPECT_THROW(BetaVector({std::nan("")}), DomainError);
    const BetaVector b({0.25, 1.0});
    EXPECT_DOUBLE_EQ(b.transmit(0), 0.75);
    EXPECT_FALSE(b.is_binary());
    EXPECT_TRUE(BetaVector({0.0, 1.0}).is_binary());
}

TEST(EffectiveChannels, Extremes)
{
    const ChannelSet ch = channel_set(Scenario{});
    double sr = 0, st = 0;
    for (std::size_t i = 0; i < ch.size(); ++i)
        sr += ch.h_reflect[i], st += ch.h_transmit[i];
    const auto h0 = effective_channels(ch, BetaVector::constant(80, 0.0));
    EXPECT_EQ(h0.h1, ch.h_los);
    EXPECT_NEAR(h0.h2, st, 1e-18);
    const auto h1 = effective_channels(ch, BetaVector::constant(80, 1.0));
    EXPECT_NEAR(h1.h1, ch.h_los + sr, 1e-18);
    EXPECT_EQ(h1.h2, 0.0);
    EXPECT_THROW(effective_channels(ch, BetaVector::constant(79, 0.0)), LengthMismatch);
}

TEST(EffectiveChannels, PatternBeta)
{
    const ChannelSet ch = channel_set(Scenario{});
    const auto h = effective_channels(ch, BetaVector(pattern_beta()));
    EXPECT_NEAR(h.h1, 0.0006313876448232275, 1e-12 * h.h1);
    EXPECT_NEAR(h.h2, 0.0009709510855129253, 1e-12 * h.h2);
}

TEST(EffectiveChannels, AffineInBeta)
{
    std::mt19937_64 rng(3);
    const ChannelSet ch = channel_set(Scenario{});
    std::uniform_real_distribution<double> u(0, 1);
    for (int t = 0; t < 200; ++t)
    {
        const BetaVector a = random_beta(rng, 80), b = random_beta(rng, 80);
        const double lam = u(rng);
        std::vector<double> mix(80);
        for (std::size_t i = 0; i < 80; ++i)
            mix[i] = lam * a[i] + (1 - lam) * b[i];
        const auto hm = effective_channels(ch, BetaVector(mix));
        const auto ha = effective_channels(ch, a), hb = effective_channels(ch, b);
        EXPECT_NEAR(hm.h1, lam * ha.h1 + (1 - lam) * hb.h1, 1e-12 * hm.h1);
        EXPECT_NEAR(hm.h2, lam * ha.h2 + (1 - lam) * hb.h2, 1e-12 * std::max(hm.h2, 1e-12));
    }
}

TEST(Sinr, SecondUserSilent)
{
    Scenario s;
    s.power2 = 0.0;
    const ChannelSet ch = channel_set(s);
    const LinkParams p = link_params(s);
    const BetaVector b(pattern_beta());
    const auto h = effective_channels(ch, b);
    const auto q = sinr(ch, b, p, DetectorScheme::SUD);
    const double a = p.responsivity * h.h1 * p.power1;
    EXPECT_NEAR(q.sinr1, a * a / p.noise_variance, 1e-12 * q.sinr1);
    EXPECT_EQ(q.sinr2, 0.0);
}

TEST(Sinr, ReferenceValues)
{
    const Scenario s;
    const ChannelSet ch = channel_set(s);
    const LinkParams p = link_params(s);
    const auto sic = sinr(ch, BetaVector::constant(80, 1.0), p, DetectorScheme::SIC);
    EXPECT_NEAR(sic.sinr1, 66.18998621179472, 1e-10 * 66.19);
    const auto sud = sinr(ch, BetaVector::constant(80, 0.0), p, DetectorScheme::SUD);
    EXPECT_NEAR(sud.sinr1, 0.0014786104728434213, 1e-12);
    EXPECT_NEAR(sud.sinr2, 149.61778258880284, 1e-9);
}

TEST(Rate, KnownPoints)
{
    EXPECT_EQ(rate(0.0), 0.0);
    EXPECT_NEAR(rate(2 * std::numbers::pi / std::numbers::e), 0.5, 1e-15);
    EXPECT_NEAR(rate(2 * std::numbers::pi * 3 / std::numbers::e), 1.0, 1e-15);
    EXPECT_THROW(rate(-1.0), DomainError);
}

TEST(Rate, MonotoneAndConcave)
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> lg(-6, 6);
    for (int i = 0; i < 10000; ++i)
    {
        const double a = std::pow(10.0, lg(rng)), b = std::pow(10.0, lg(rng));
        EXPECT_GE(rate(0.5 * (a + b)), 0.5 * (rate(a) + rate(b)) - 1e-15);
        EXPECT_EQ(rate(std::max(a, b)) >= rate(std::min(a, b)), true);
    }
}

TEST(RatePair, ReferenceValues)
{
    const Scenario s;
    const ChannelSet ch = channel_set(s);
    const RatePair r = rate_pair(ch, BetaVector::constant(80, 1.0), s, DetectorScheme::SIC);
    EXPECT_NEAR(r.r1, 2.4446306707202186, 1e-12);
    EXPECT_EQ(r.r2, 0.0);
    ASSERT_TRUE(r.energy_efficiency);
    EXPECT_NEAR(*r.energy_efficiency, 12.223153353601091, 1e-11);

    const RatePair z = rate_pair(ch, BetaVector::constant(80, 0.0), s, DetectorScheme::SIC);
    EXPECT_NEAR(z.sum, 3.1033674304584786, 1e-12);

    const BetaVector b(pattern_beta());
    const RatePair sud = rate_pair(ch, b, s, DetectorScheme::SUD);
    const RatePair sic = rate_pair(ch, b, s, DetectorScheme::SIC);
    EXPECT_NEAR(sud.r1, 0.11882169108803449, 1e-12);
    EXPECT_NEAR(sud.r2, 0.49029525383028116, 1e-12);
    EXPECT_NEAR(sic.r1, 1.620225696816867, 1e-12);
    EXPECT_NEAR(sic.r2, 0.49029525383028116, 1e-12);
}

TEST(RatePair, ZeroPowerHasNoEfficiency)
{
    Scenario s;
    s.power1 = s.power2 = 0.0;
    const ChannelSet ch = channel_set(s);
    const RatePair r = rate_pair(ch, BetaVector::constant(80, 0.5), s, DetectorScheme::SIC);
    EXPECT_EQ(r.r1, 0.0);
    EXPECT_EQ(r.r2, 0.0);
    EXPECT_EQ(r.sum, 0.0);
    EXPECT_FALSE(r.energy_efficiency.has_value());
}

TEST(RatePair, SicDominatesSud)
{
    std::mt19937_64 rng(21);
    for (int t = 0; t < 300; ++t)
    {
        const Scenario s = random_scenario(rng, 3, 4);
        const ChannelSet ch = channel_set(s);
        const LinkParams p = link_params(s);
        const BetaVector b = random_beta(rng, ch.size());
        const SinrPair qs = sinr(ch, b, p, DetectorScheme::SIC), qd = sinr(ch, b, p, DetectorScheme::SUD);
        EXPECT_GE(qs.sinr1, qd.sinr1);
        EXPECT_EQ(qs.sinr2, qd.sinr2);
        const RatePair rs = rate_pair(ch, b, p, DetectorScheme::SIC), rd = rate_pair(ch, b, p, DetectorScheme::SUD);
        EXPECT_GE(rs.r1, rd.r1);
        EXPECT_EQ(rs.r2, rd.r2);
        EXPECT_GE(rs.sum, rd.sum);
    }
}

TEST(RatePair, LosOnly)
{
    const Scenario s;
    const ChannelSet ch = channel_set(s);
    const LinkParams p = link_params(s);
    const double a = p.responsivity * ch.h_los * p.power1;
    EXPECT_NEAR(los_only_rate(ch, p), rate(a * a / p.noise_variance), 1e-15);
}
