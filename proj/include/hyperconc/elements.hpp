// Copyright 2026 The hyperconc Authors
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

// Linear-optical elements acting photon by photon on a PureState.
//
// Two-mode elements consume their input modes and produce their output
// modes: the inputs leave the registry, the outputs join it. An output label
// that is already registered and is not one of the inputs is a
// ModeCollisionError.

#ifndef HYPERCONC_ELEMENTS_HPP_
#define HYPERCONC_ELEMENTS_HPP_

#include <string>
#include <utility>

#include "hyperconc/state_space.hpp"

namespace hyperconc {

using ModePair = std::pair<std::string, std::string>;

/// Polarizing beam splitter: H in m1 -> t1, H in m2 -> t2, V in m1 -> t2,
/// V in m2 -> t1.
PureState apply_pbs(const PureState& s, const ModePair& in_modes, const ModePair& out_modes);

/// 50:50 beam splitter, real convention:
///   |b1> -> (|c1> + |c2>)/sqrt2,  |b2> -> (|c1> - |c2>)/sqrt2.
PureState apply_bs(const PureState& s, const ModePair& in_modes, const ModePair& out_modes);

/// Polarization Hadamard on every photon in `mode`:
///   |H> -> (|H> + |V>)/sqrt2,  |V> -> (|H> - |V>)/sqrt2.
PureState apply_pol_hadamard(const PureState& s, const std::string& mode);

}  // namespace hyperconc

#endif  // HYPERCONC_ELEMENTS_HPP_
