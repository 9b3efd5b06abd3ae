// Copyright 2026 The lgt-shadows Authors
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

#include <string>

#include "lgts/duality.hpp"
#include "lgts/pauli.hpp"

namespace lgts {

/// A gauge-invariant observable resolved on both registers.
struct Observable {
    std::string id;
    std::string spec;
    PauliString lgt;    // link register
    PauliString ising;  // plaquette register
};

// Accepted forms:
//   loop: [p0, p1, ...]   product of the listed plaquette operators
//   ribbon: (i, j)        Ising X_i X_j
//   ising: "<pauli text>"
//   lgt: "<pauli text>"
Observable parse_observable(const std::string &text, const DualityContext &ctx, const std::string &id = "");

}  // namespace lgts
