// Copyright 2026 The fracdirac Authors
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

#include "fracdirac/beta.hpp"
#include "fracdirac/clifford.hpp"
#include "fracdirac/csv.hpp"
#include "fracdirac/dirac.hpp"
#include "fracdirac/grid.hpp"
#include "fracdirac/lagrangian.hpp"
#include "fracdirac/least_squares.hpp"
#include "fracdirac/linearize.hpp"
#include "fracdirac/matrix_utils.hpp"
#include "fracdirac/pauli.hpp"
#include "fracdirac/polynomial.hpp"
#include "fracdirac/report_json.hpp"
#include "fracdirac/spectral.hpp"
#include "fracdirac/types.hpp"
#include "fracdirac/verification.hpp"
#include "fracdirac/version.hpp"
