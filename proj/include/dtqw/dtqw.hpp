// Copyright 2026 The dtqw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "dtqw/bloch_band.hpp"
#include "dtqw/errors.hpp"
#include "dtqw/numeric.hpp"
#include "dtqw/su2.hpp"
#include "dtqw/walk_sim.hpp"
#include "dtqw/zak_phase.hpp"
