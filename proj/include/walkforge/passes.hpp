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

#include "walkforge/circuit.hpp"

namespace walkforge::ir {

/// Rewrites every negative control as X-conjugation of a positive control.
/// The output contains no negative controls and compiles to the same matrix.
Circuit lower_polarities(const Circuit &c);

/// Removes matched X pairs on the same qubit when no gate in between touches
/// that qubit. Runs to a fixpoint.
Circuit cancel_adjacent_x(const Circuit &c);

/// One multi-control gate whose target block is a tensor product of X gates,
/// split into one single-target MCX per target with identical controls.
std::vector<Gate> split_multi_target(const std::vector<Control> &controls,
                                     const std::vector<int> &targets);

/// Fuses MCX pairs that share a target and all controls except one qubit of
/// opposite polarity; the differing control drops out. Pairs separated only
/// by commuting gates are eligible. Runs to a fixpoint.
Circuit merge_control_pairs(const Circuit &c);

/// Controlled-SWAP as two CNOTs around a single multi-controlled X.
std::vector<Gate> decompose_mcswap(const MCSwapGate &g);

/// Rewrites every multi-control SWAP in the circuit via decompose_mcswap.
Circuit decompose_mcswaps(const Circuit &c);

/// Default pipeline: split_multi_target (a no-op on circuits, which never
/// hold multi-target gates) -> merge_control_pairs -> lower_polarities ->
/// cancel_adjacent_x.
Circuit optimize(const Circuit &c);

} // namespace walkforge::ir
