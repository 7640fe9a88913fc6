// Copyright 2026 The walkforge Authors
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

#include <string>
#include <string_view>

#include "walkforge/circuit.hpp"

namespace walkforge::ir {

// Text format, one gate per line:
//
//   # comment
//   qubits position=3 coin=1
//   X -> q0
//   H -> q3
//   CX q3 -> q0
//   MCX +q0 -q1 -> q2
//   SWAP -> q0, q1
//   MCSWAP -q0 +q3 -> q1, q2
//
// Controls carry a +/- polarity prefix; CX is shorthand for an MCX with a
// single positive control and may omit the prefix. Unitary blocks are not
// representable in this format.
std::string to_text(const Circuit &c);
Circuit from_text(std::string_view text);

// OpenQASM 2.0 export. Multi-control SWAPs are decomposed first, polarities
// are lowered, and an MCX with three or more controls expands recursively
// without ancillas: C^k(X) = C(V) MCX_{k-1} C(V\dagger) MCX_{k-1} C^{k-1}(V)
// with V*V = X, each controlled root emitted as h/cu1/h. A header comment
// records the register split so the file reparses losslessly.
std::string to_qasm(const Circuit &c);

// Parses the subset of OpenQASM 2.0 the exporter emits (x, h, cx, swap, ccx,
// cu1 with +-pi/k angles). Throws std::runtime_error on anything else.
Circuit from_qasm(std::string_view text);

} // namespace walkforge::ir
