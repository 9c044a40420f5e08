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

#include "hyperconc/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hyperconc/errors.hpp"

namespace hyperconc {
namespace {

void require_normalized(const TwoQubitAmplitudes& t) {
    const double n2 = std::norm(t.a00) + std::norm(t.a01) + std::norm(t.a10) + std::norm(t.a11);
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormalizationTolerance) {
        std::ostringstream os;
        os.precision(12);
        os << "two-qubit amplitudes are not normalized: sum |a|^2 = " << n2;
        throw NormalizationError(os.str());
    }
}

}  // namespace

TwoQubitAmplitudes to_two_qubit(const CoefficientBlock& block) noexcept {
    return {block.alpha, block.gamma, block.delta, block.beta};
}

double concurrence_sigma_y(const TwoQubitAmplitudes& t) {
    require_normalized(t);
    const Complex i{0.0, 1.0};
    Eigen::Matrix2cd sy;
    sy << 0.0, -i, i, 0.0;
    Eigen::Matrix4cd syy;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) syy.block<2, 2>(2 * r, 2 * c) = sy(r, c) * sy;
    }
    Eigen::Vector4cd psi(t.a00, t.a01, t.a10, t.a11);
    // <psi*| has components psi_i (the conjugate of the conjugate).
    const Complex value = psi.transpose() * syy * psi;
    return std::abs(value);
}

double concurrence_via_purity(const TwoQubitAmplitudes& t) {
    require_normalized(t);
    Eigen::Matrix2cd coeff;
    coeff << t.a00, t.a01, t.a10, t.a11;
    const Eigen::Matrix2cd rho_a = coeff * coeff.adjoint();
    const double purity = (rho_a * rho_a).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

ConcurrenceOracleValues hyper_concurrence(const HyperPairSpec& spec) {
    validate(spec);
    ConcurrenceOracleValues out;
    out.c_pol = concurrence_sigma_y(to_two_qubit(spec.pol));
    out.c_mom = concurrence_sigma_y(to_two_qubit(spec.mom));
    out.c_hyper = out.c_pol + out.c_mom;
    return out;
}

}  // namespace hyperconc
