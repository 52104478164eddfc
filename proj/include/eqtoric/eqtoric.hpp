// Copyright 2026 The eqtoric Authors
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

#ifndef EQTORIC_EQTORIC_HPP_
#define EQTORIC_EQTORIC_HPP_

#include "eqtoric/cohomology.hpp"
#include "eqtoric/complex.hpp"
#include "eqtoric/error.hpp"
#include "eqtoric/fan.hpp"
#include "eqtoric/io.hpp"
#include "eqtoric/isomorphism.hpp"
#include "eqtoric/lattice.hpp"
#include "eqtoric/quotient.hpp"

#endif  // EQTORIC_EQTORIC_HPP_
