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

#include <starvlc/config.hpp>
#include <starvlc/sampling.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

using namespace starvlc;

namespace
{
    template <class F>
    void expect_parse_error(F &&f, std::size_t line, const std::string &key)
    {
        try
        {
            f();
            ADD_FAILURE() << "no parse error";
        }
        catch (const ParseError &e)
        {
            EXPECT_EQ(e.line(), line) << e.what();
            EXPECT_EQ(e.key(), key) << e.what();
        }
    }
}

TEST(LoadScenario, EmptyIsReference)
{
    const Scenario s = parse_scenario("");
    EXPECT_EQ(s, Scenario{});
    EXPECT_EQ(s.ap.position, (Vec3{4.5, 2.5, 3.0}));
    EXPECT_EQ(s.ue1.position, (Vec3{3.5, 2.5, 1.0}));
    EXPECT_EQ(s.ue2.position, (Vec3{6.0, 2.5, 1.0}));
    EXPECT_EQ(s.panel.center, (Vec3{5.0, 2.5, 1.5}));
    EXPECT_EQ(s.panel.rows, 10);
    EXPECT_EQ(s.panel.cols, 8);
    EXPECT_EQ(s.source.half_intensity_angle, deg_to_rad(60.0));
    EXPECT_EQ(s.front_end.fov_half_angle, deg_to_rad(85.0));
    EXPECT_EQ(s.front_end.detector_area, 1.5e-4);
    EXPECT_EQ(s.front_end.responsivity, 0.7);
    EXPECT_EQ(s.front_end.concentrator_filter_gain, 10.0);
    EXPECT_EQ(s.power1, 0.1);
    EXPECT_EQ(s.power2, 0.1);
    EXPECT_EQ(s.noise_variance, 1e-10);
    EXPECT_EQ(parse_scenario("# only a comment\n\n   \n"), Scenario{});
}

TEST(LoadScenario, WideFieldOfViewRejected)
{
    try
    {
        parse_scenario("frontend.fov_half_angle_deg = 95\n");
        FAIL() << "accepted 95 degrees";
    }
    catch (const ValidationError &e)
    {
        EXPECT_EQ(e.invariant(), "frontend.fov_half_angle");
    }
}

TEST(LoadScenario, SingleOverride)
{
    const Scenario s = parse_scenario("ue1.position = [4.0, 2.0, 0.8]  # moved\n");
    Scenario expect;
    expect.ue1.position = {4.0, 2.0, 0.8};
    EXPECT_EQ(s, expect);
}

TEST(LoadScenario, DegreesConverted)
{
    const Scenario s = parse_scenario("source.half_angle_deg = 45\nfrontend.fov_half_angle_deg = 70\n");
    EXPECT_EQ(s.source.half_intensity_angle, deg_to_rad(45.0));
    EXPECT_EQ(s.front_end.fov_half_angle, deg_to_rad(70.0));
}

TEST(LoadScenario, ErrorsCarryLineAndKey)
{
    expect_parse_error([] { parse_scenario("ris.rows = 4\nris.pitch 0.2\n"); }, 2, "");
    expect_parse_error([] { parse_scenario("\n\nris.pitch = abc\n"); }, 3, "ris.pitch");
    expect_parse_error([] { parse_scenario("ris.rows = 2.5\n"); }, 1, "ris.rows");
    expect_parse_error([] { parse_scenario("ue1.position = [1, 2]\n"); }, 1, "ue1.position");
    expect_parse_error([] { parse_scenario("ue1.position = 1, 2, 3\n"); }, 1, "ue1.position");
    expect_parse_error([] { parse_scenario("power.ue1_w = 0.1\npower.ue1_w = 0.2\n"); }, 2, "power.ue1_w");
    expect_parse_error([] { parse_scenario("# x\npower.ue3_w = 0.1\n"); }, 2, "power.ue3_w");
    expect_parse_error([] { parse_scenario("noise.variance =\n"); }, 1, "noise.variance");
    expect_parse_error([] { load_scenario("/nonexistent/starvlc.cfg"); }, 0, "");
}

TEST(LoadScenario, RoundTrip)
{
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> ang(1.0, 89.0);
    for (int t = 0; t < 500; ++t)
    {
        Scenario s = random_scenario(rng, 1 + t % 10, 1 + t % 7);
        s.source.half_intensity_angle = deg_to_rad(ang(rng));
        s.front_end.fov_half_angle = ang(rng) * 0.0174;
        s.ap.normal = normalized(Vec3{0.01 * (t % 5), -0.02, -1.0});
        validate(s);
        const std::string text = write_scenario(s);
        EXPECT_EQ(parse_scenario(text), s) << text;
    }
    EXPECT_EQ(parse_scenario(write_scenario(Scenario{})), Scenario{});
}

TEST(LoadScenario, RadianKeys)
{
    // Not every radian value has a degree number that converts to it exactly.
    const double rad = 1.2545941166441315;
    const Scenario s = parse_scenario("frontend.fov_half_angle_rad = 1.2545941166441315\n");
    EXPECT_EQ(s.front_end.fov_half_angle, rad);
    EXPECT_EQ(parse_scenario(write_scenario(s)), s);
    expect_parse_error([] { parse_scenario("source.half_angle_deg = 60\nsource.half_angle_rad = 1\n"); }, 2,
                       "source.half_angle_rad");
}

TEST(LoadScenario, WrittenReferenceIsReadable)
{
    const std::string text = write_scenario(Scenario{});
    EXPECT_NE(text.find("source.half_angle_deg = 60\n"), std::string::npos);
    EXPECT_NE(text.find("frontend.fov_half_angle_deg = 85\n"), std::string::npos);
    EXPECT_NE(text.find("ris.pitch = 0.1\n"), std::string::npos);
}

TEST(SweepSpec, ParseAndValues)
{
    const SweepSpec s = parse_sweep("sweep.parameter = ue1_x\nsweep.start = 3\nsweep.stop = 4.5\nsweep.steps = 16\n"
                                    "sweep.scheme = sud\nsweep.mode = ms\nue2.position = [6.5, 2.5, 1]\n");
    EXPECT_EQ(s.parameter, SweptParameter::Ue1X);
    EXPECT_EQ(s.scheme, DetectorScheme::SUD);
    EXPECT_EQ(s.mode, PanelMode::ModeSwitching);
    EXPECT_EQ(s.base.ue2.position.x, 6.5);
    const auto v = s.values();
    ASSERT_EQ(v.size(), 16u);
    EXPECT_EQ(v.front(), 3.0);
    EXPECT_EQ(v.back(), 4.5);
    EXPECT_NEAR(v[1], 3.1, 1e-15);
    EXPECT_EQ(s.scenario_at(4.0).ue1.position.x, 4.0);
}

TEST(SweepSpec, ElementCountUsesEightColumns)
{
    const SweepSpec s = parse_sweep("sweep.parameter = element_count\nsweep.start = 8\nsweep.stop = 80\nsweep.steps = 10\n");
    const auto v = s.values();
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        const Scenario sc = s.scenario_at(v[i]);
        EXPECT_EQ(sc.panel.cols, 8);
        EXPECT_EQ(sc.panel.rows, static_cast<int>(i) + 1);
    }
    EXPECT_THROW(parse_sweep("sweep.parameter = element_count\nsweep.start = 10\nsweep.stop = 80\nsweep.steps = 9\n"),
                 ValidationError);
}

TEST(SweepSpec, Invalid)
{
    EXPECT_THROW(parse_sweep("sweep.parameter = power_both\nsweep.start = 0\nsweep.stop = 0.1\n"), ValidationError);
    EXPECT_THROW(parse_sweep("sweep.parameter = ue1_x\nsweep.start = 4\nsweep.stop = 3\n"), ValidationError);
    EXPECT_THROW(parse_sweep("sweep.parameter = ue1_x\nsweep.steps = 1\n"), ValidationError);
    EXPECT_THROW(parse_sweep("sweep.parameter = ue1_x\nsweep.objective = maxmin\nsweep.mode = ms\n"), ValidationError);
    // UE1 would cross into the other room
    EXPECT_THROW(parse_sweep("sweep.parameter = ue1_x\nsweep.start = 3\nsweep.stop = 6\n"), ValidationError);
    expect_parse_error([] { parse_sweep("sweep.start = 3\n"); }, 0, "sweep.parameter");
    expect_parse_error([] { parse_sweep("sweep.parameter = ue3_x\n"); }, 1, "sweep.parameter");
    expect_parse_error([] { parse_sweep("sweep.parameter = ue1_x\n\nsweep.scheme = noma\n"); }, 3, "scheme");
    expect_parse_error([] { parse_sweep("sweep.parameter = ue1_x\nsweep.oracle_check = yes\n"); }, 2,
                       "sweep.oracle_check");
}

TEST(SweepSpec, RoundTrip)
{
    SweepSpec s;
    s.parameter = SweptParameter::PowerBoth;
    s.start = 0.001;
    s.stop = 0.1;
    s.steps = 25;
    s.objective = Objective::TimeSharing;
    s.scheme = DetectorScheme::SUD;
    s.oracle_check = true;
    s.base.ue1.position.x = 4.1;
    s.spca.theta_init = 50.0;
    s.spca.inner.max_iterations = 777;
    const SweepSpec r = parse_sweep(write_sweep(s));
    EXPECT_EQ(write_sweep(r), write_sweep(s));
    EXPECT_EQ(r.base, s.base);
    EXPECT_EQ(r.spca.inner.max_iterations, 777);
}

TEST(ShippedConfigs, AllParse)
{
    std::size_t n = 0;
    for (const auto &e : std::filesystem::directory_iterator(STARVLC_CONFIG_DIR))
    {
        const auto path = e.path().string();
        if (e.path().extension() == ".cfg")
        {
            EXPECT_NO_THROW(load_scenario(path)) << path;
        }
        else if (e.path().extension() == ".sweep")
        {
            EXPECT_NO_THROW(load_sweep(path)) << path;
        }
        ++n;
    }
    EXPECT_GE(n, 2u);
    EXPECT_EQ(load_scenario(std::string(STARVLC_CONFIG_DIR) + "/table1.cfg"), Scenario{});
}
