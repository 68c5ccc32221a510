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

// Moves UE1 towards the panel and prints where the optimized panel switches from mostly
// transmitting UE2's light to mostly reflecting UE1's. Writes the coefficient grid of each
// point to beta_<x>.csv in the working directory.

#include <starvlc/starvlc.hpp>

#include <cstdio>

int main()
{
    using namespace starvlc;

    SweepSpec spec;
    spec.parameter = SweptParameter::Ue1X;
    spec.start = 3.0;
    spec.stop = 4.5;
    spec.steps = 16;
    spec.scheme = DetectorScheme::SIC;

    const SweepOutcome o = evaluate_sweep(spec);
    std::printf("   x      r1      r2   no-panel r1  mean beta\n");
    for (std::size_t i = 0; i < o.points.size(); ++i)
    {
        const PointResult &p = o.points[i];
        std::printf("%4.1f  %6.3f  %6.3f  %11.3f  %9.2f\n", o.values[i], p.r1, p.r2, *p.r1_no_ris, p.mean_beta);
        char name[32];
        std::snprintf(name, sizeof name, "beta_%.1f.csv", o.values[i]);
        dump_beta(p.beta, spec.scenario_at(o.values[i]).panel, name);
    }
}
