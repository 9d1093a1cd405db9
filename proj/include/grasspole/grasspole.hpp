/*
   Copyright 2026 The grasspole Authors

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

#ifndef GRASSPOLE_GRASSPOLE_HPP
#define GRASSPOLE_GRASSPOLE_HPP

#include "combinatorics.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "field.hpp"
#include "grassmann.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "parallel.hpp"
#include "poleplace.hpp"
#include "poly.hpp"
#include "sweeps.hpp"
#include "systems.hpp"

#endif  // GRASSPOLE_GRASSPOLE_HPP
