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

#ifndef HYPERCONC_EXPERIMENT_HPP_
#define HYPERCONC_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperconc/protocol.hpp"
#include "hyperconc/statistics.hpp"

namespace hyperconc {

enum class CampaignMode { kEnumerate, kMonteCarlo };

const char* to_string(CampaignMode m) noexcept;

struct CampaignConfig {
    HyperPairSpec spec;
    ProtocolVariant variant = ProtocolVariant::kArbitraryStaged;
    CampaignMode mode = CampaignMode::kMonteCarlo;
    std::uint64_t trials = 100000;
    std::uint64_t master_seed = 0;
    /// Momentum readout of the partial variant; ignored by the arbitrary one.
    MeasurementModel momentum_readout = MeasurementModel::kHomodyne;
    /// Trials per CSV row. Does not affect the totals.
    std::uint64_t batch_size = 10000;
    /// Worker threads. Never changes any result.
    unsigned jobs = 1;
};

/// Throws InvalidArgumentError (trials, batch size, jobs) and the pair specification's own
/// validation errors.
void validate(const CampaignConfig& cfg);

struct CampaignResult {
    ConcurrenceReport report;
    /// Monte Carlo only: counts per consecutive batch of trials.
    std::vector<TrialCounts> batches;
};

/// Exact report from the full outcome tree; trials and seed are ignored.
ConcurrenceReport run_enumeration(const CampaignConfig& cfg);

/// Trial i draws from RandomStream(master_seed, i). Batches are spread over
/// `jobs` threads and summed in batch order, so the result depends only on
/// the config.
ConcurrenceReport run_monte_carlo(const CampaignConfig& cfg);

CampaignResult run_campaign(const CampaignConfig& cfg);

/// One coefficient of one block, e.g. "pol.alpha" or "mom.delta".
struct SweepParameter {
    enum class Block { kPolarization, kMomentum };
    Block block = Block::kPolarization;
    int index = 0;  // 0 alpha, 1 beta, 2 gamma, 3 delta

    /// Throws InvalidArgumentError for anything but <pol|mom>.<alpha|beta|gamma|delta>.
    static SweepParameter parse(std::string_view text);
    std::string name() const;
};

inline constexpr std::string_view kSweepRenormalizationRule =
    "the swept coefficient is set to the grid value (real); the other three coefficients of the same block "
    "are multiplied by one common real factor sqrt((1 - v^2) / S), S being their squared norm, so the block "
    "stays normalized; the other block is unchanged";

/// Applies the sweep renormalization rule. Throws DomainError when |value| > 1
/// or the partner coefficients are all zero and |value| < 1.
HyperPairSpec with_coefficient(const HyperPairSpec& spec, const SweepParameter& param, double value);

struct SweepPoint {
    double value = 0.0;
    HyperPairSpec spec;
    ConcurrenceReport report;
};

/// Linear grid of `steps` points from `from` to `to` inclusive. Every point
/// runs as an independent campaign with the base config (same seed).
std::vector<SweepPoint> run_sweep(const CampaignConfig& base, const SweepParameter& param, double from,
                                  double to, std::size_t steps);

}  // namespace hyperconc

#endif  // HYPERCONC_EXPERIMENT_HPP_
