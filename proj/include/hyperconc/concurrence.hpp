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

// Analytic pure-state concurrence. Nothing here touches the protocol
// simulation; these are the reference values the estimators are checked
// against.

#ifndef HYPERCONC_CONCURRENCE_HPP_
#define HYPERCONC_CONCURRENCE_HPP_

#include "hyperconc/state_space.hpp"

namespace hyperconc {

/// Amplitudes on |00>, |01>, |10>, |11>.
struct TwoQubitAmplitudes {
    Complex a00;
    Complex a01;
    Complex a10;
    Complex a11;
};

/// (HH, HV, VH, VV) <- (alpha, gamma, delta, beta).
TwoQubitAmplitudes to_two_qubit(const CoefficientBlock& block) noexcept;

/// |<psi*| sigma_y (x) sigma_y |psi>|, evaluated from the explicit 4x4
/// operator. Throws NormalizationError.
double concurrence_sigma_y(const TwoQubitAmplitudes& t);

/// sqrt(2 (1 - Tr rho_A^2)) from the single-qubit reduced state.
/// Throws NormalizationError.
double concurrence_via_purity(const TwoQubitAmplitudes& t);

struct ConcurrenceOracleValues {
    double c_pol = 0.0;
    double c_mom = 0.0;
    double c_hyper = 0.0;
};

/// Per-degree-of-freedom concurrences and their sum.
ConcurrenceOracleValues hyper_concurrence(const HyperPairSpec& spec);

}  // namespace hyperconc

#endif  // HYPERCONC_CONCURRENCE_HPP_
