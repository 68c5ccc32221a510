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

#ifndef STARVLC_SAMPLING_HPP
#define STARVLC_SAMPLING_HPP

#include "channel.hpp"

#include <random>

namespace starvlc
{
    // Draws a valid two-room scenario around the reference layout: AP on the room-1 ceiling,
    // UE1 in room 1, UE2 in room 2, panel centred on the x = 5 m wall with a rows x cols grid.
    // Optics and noise keep their reference values.
    inline Scenario random_scenario(std::mt19937_64 &rng, int rows, int cols)
    {
        auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
        Scenario s;
        s.ap.position = {uniform(2.5, 4.9), uniform(1.0, 4.0), 3.0};
        s.ue1.position = {uniform(1.0, 4.8), uniform(0.5, 4.5), uniform(0.5, 1.5)};
        s.ue2.position = {uniform(5.2, 9.0), uniform(0.5, 4.5), uniform(0.5, 1.5)};
        s.panel.center = {5.0, uniform(1.5, 3.5), uniform(1.0, 2.0)};
        s.panel.rows = rows;
        s.panel.cols = cols;
        s.panel.pitch = uniform(0.1, 0.4);
        s.power1 = uniform(0.02, 0.15);
        s.power2 = uniform(0.02, 0.15);
        validate(s);
        return s;
    }
}

#endif
