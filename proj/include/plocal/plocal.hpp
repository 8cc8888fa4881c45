// Copyright 2026 The plocal Authors
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

#include "plocal/basis.hpp"
#include "plocal/bfgs.hpp"
#include "plocal/ensembles.hpp"
#include "plocal/hamiltonian.hpp"
#include "plocal/io.hpp"
#include "plocal/localizer.hpp"
#include "plocal/parallel.hpp"
#include "plocal/pauli.hpp"
#include "plocal/rng.hpp"
#include "plocal/sff.hpp"
#include "plocal/spectrum.hpp"
#include "plocal/stability.hpp"
#include "plocal/sw.hpp"
#include "plocal/version.hpp"
