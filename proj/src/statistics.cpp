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

#include "hyperconc/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyperconc/errors.hpp"

namespace hyperconc {

double IntervalEstimate::lower() const noexcept { return std::clamp(point - half_width_3sigma, 0.0, 1.0); }

double IntervalEstimate::upper() const noexcept { return std::clamp(point + half_width_3sigma, 0.0, 1.0); }

IntervalEstimate confidence_interval(std::uint64_t successes, std::uint64_t n) {
    if (n == 0) throw DomainError("confidence interval needs at least one trial");
    if (successes > n) {
        throw DomainError("successes (" + std::to_string(successes) + ") exceed trials (" + std::to_string(n) + ")");
    }
    const double p = static_cast<double>(successes) / static_cast<double>(n);
    const double hw = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    return {p, std::clamp(hw, 0.0, 1.0)};
}

ConcurrenceInterval sqrt_scaled(const IntervalEstimate& p, double k) {
    ConcurrenceInterval out;
    if (p.point <= 0.0) {
        out.point = 0.0;
        out.lower = 0.0;
        out.upper = k * std::sqrt(p.upper());
        return out;
    }
    out.point = k * std::sqrt(p.point);
    const double hw = k * p.half_width_3sigma / (2.0 * std::sqrt(p.point));
    out.lower = std::max(0.0, out.point - hw);
    out.upper = out.point + hw;
    return out;
}

ConcurrenceInterval sum_intervals(const ConcurrenceInterval& a, const ConcurrenceInterval& b) {
    ConcurrenceInterval out;
    out.point = a.point + b.point;
    out.lower = std::max(0.0, out.point - std::hypot(a.point - a.lower, b.point - b.lower));
    out.upper = out.point + std::hypot(a.upper - a.point, b.upper - b.point);
    return out;
}

}  // namespace hyperconc
