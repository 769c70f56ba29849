// SPDX-License-Identifier: Apache-2.0
//
// bibeam: transmit beamforming for multi-antenna bistatic backscatter links
// Copyright (C) 2026 The bibeam Authors
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

#ifndef BIBEAM_BIBEAM_HPP
#define BIBEAM_BIBEAM_HPP

#include "bibeam/beamforming.hpp"
#include "bibeam/channel.hpp"
#include "bibeam/detection.hpp"
#include "bibeam/experiments.hpp"
#include "bibeam/metrics.hpp"
#include "bibeam/numerics.hpp"
#include "bibeam/scene.hpp"
#include "bibeam/scene_file.hpp"
#include "bibeam/sdp.hpp"

#endif  // BIBEAM_BIBEAM_HPP
