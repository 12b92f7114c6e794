// Copyright 2026 The vortexlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Everything except the JSON encodings and the command runner, which need
// nlohmann_json (vortexlab/io.hpp, vortexlab/cli.hpp).

#pragma once

#include "vortexlab/angle.hpp"
#include "vortexlab/anosov_katok.hpp"
#include "vortexlab/bpm.hpp"
#include "vortexlab/cascade.hpp"
#include "vortexlab/errors.hpp"
#include "vortexlab/exact.hpp"
#include "vortexlab/frequency_set.hpp"
#include "vortexlab/isometry.hpp"
#include "vortexlab/reducibility.hpp"
#include "vortexlab/regions.hpp"
#include "vortexlab/trig_polynomial.hpp"
#include "vortexlab/vortex.hpp"
