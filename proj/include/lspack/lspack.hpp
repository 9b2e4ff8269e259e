// Copyright 2026 The lspack Authors
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

#pragma once

#include "lspack/anneal.hpp"
#include "lspack/bounds.hpp"
#include "lspack/boxes.hpp"
#include "lspack/circuit.hpp"
#include "lspack/estimator.hpp"
#include "lspack/exact.hpp"
#include "lspack/formats.hpp"
#include "lspack/layout.hpp"
#include "lspack/reduction.hpp"
#include "lspack/render.hpp"
#include "lspack/solver.hpp"
#include "lspack/validate.hpp"
