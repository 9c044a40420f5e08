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

#ifndef HYPERCONC_STATISTICS_HPP_
#define HYPERCONC_STATISTICS_HPP_

#include <cstdint>

namespace hyperconc {

/// Point estimate of a proportion with a 3-sigma half width. The interval
/// itself is clamped to [0, 1].
struct IntervalEstimate {
    double point = 0.0;
    double half_width_3sigma = 0.0;

    double lower() const noexcept;
    double upper() const noexcept;
};

/// Normal approximation: half width 3 sqrt(p (1 - p) / n).
/// Throws DomainError unless 0 <= successes <= n and n >= 1.
IntervalEstimate confidence_interval(std::uint64_t successes, std::uint64_t n);

/// Interval for a derived quantity C = k sqrt(P).
struct ConcurrenceInterval {
    double point = 0.0;
    double lower = 0.0;
    double upper = 0.0;
};

/// Delta method: half width k hw(P) / (2 sqrt(P)), lower end clamped at 0.
/// When P = 0 the interval is [0, k sqrt(upper(P))].
ConcurrenceInterval sqrt_scaled(const IntervalEstimate& p, double k);

/// Sum of two estimates; the distances to each end add in quadrature.
ConcurrenceInterval sum_intervals(const ConcurrenceInterval& a, const ConcurrenceInterval& b);

}  // namespace hyperconc

#endif  // HYPERCONC_STATISTICS_HPP_
