/*
   Copyright 2026 the lwpm authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "lwpm/affine_sat.hpp"
#include "lwpm/bitvec.hpp"
#include "lwpm/errors.hpp"
#include "lwpm/gf2poly.hpp"
#include "lwpm/harness.hpp"
#include "lwpm/metaheuristics.hpp"
#include "lwpm/oracle.hpp"
#include "lwpm/reductions.hpp"
#include "lwpm/rng.hpp"
#include "lwpm/toeplitz.hpp"
