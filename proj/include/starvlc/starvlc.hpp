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

#ifndef STARVLC_STARVLC_HPP
#define STARVLC_STARVLC_HPP

#include "error.hpp"
#include "geometry.hpp"
#include "channel.hpp"
#include "link.hpp"
#include "spca.hpp"
#include "oracle.hpp"
#include "config.hpp"
#include "experiment.hpp"
#include "sampling.hpp"

#endif
