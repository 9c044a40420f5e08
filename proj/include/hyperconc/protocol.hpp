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

// The two concurrence-measurement protocols, run on two fresh copies of a
// hyperentangled pair per trial.
//
// Copy 1 lives on modes (a1, a2 | b1, b2), copy 2 on (a3, a4 | b3, b4).
// Photon slots: 0 = Alice copy 1, 1 = Bob copy 1, 2 = Alice copy 2,
// 3 = Bob copy 2.
//
// PartialTwoStep (pairs with gamma = delta = 0 in both blocks):
//   spatial_alice, spatial_bob   spatial parity, homodyne by default;
//                                designated class +1
//   alice_mode                   only with X-quadrature momentum readout:
//                                fixes Alice's modes after an odd outcome
//   polarization_alice           polarization parity on Alice's modes,
//                                success on class 1 (odd)
//
// ArbitraryStaged (any pair):
//   spatial_alice, spatial_bob   spatial parity, X quadrature; both odd to
//                                continue
//   bob_beam_splitters           (b1,b2)->(c1,c2), (b3,b4)->(c3,c4)
//   bob_mode                     which of (c1,c4) +1, (c2,c3) -1, (c1,c3) +3,
//                                (c2,c4) -3; odd classes are +-1, designated +1
//   alice_mode                   (a1,a4) +1 or (a2,a3) -1
//   polarization_alice,
//   polarization_bob             first polarization parity; both odd to
//                                continue
//   alice_hadamards              polarization Hadamard on Alice's two modes
//   polarization_alice_second    second polarization parity; odd succeeds

#ifndef HYPERCONC_PROTOCOL_HPP_
#define HYPERCONC_PROTOCOL_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperconc/concurrence.hpp"
#include "hyperconc/qnd.hpp"
#include "hyperconc/random.hpp"
#include "hyperconc/state_space.hpp"
#include "hyperconc/statistics.hpp"

namespace hyperconc {

enum class ProtocolVariant { kPartialTwoStep, kArbitraryStaged };

const char* to_string(ProtocolVariant v) noexcept;

namespace stage {
inline constexpr std::string_view kSpatialAlice = "spatial_alice";
inline constexpr std::string_view kSpatialBob = "spatial_bob";
inline constexpr std::string_view kBobBeamSplitters = "bob_beam_splitters";
inline constexpr std::string_view kBobMode = "bob_mode";
inline constexpr std::string_view kAliceMode = "alice_mode";
inline constexpr std::string_view kPolarizationAlice = "polarization_alice";
inline constexpr std::string_view kPolarizationBob = "polarization_bob";
inline constexpr std::string_view kAliceHadamards = "alice_hadamards";
inline constexpr std::string_view kPolarizationAliceSecond = "polarization_alice_second";
}  // namespace stage

struct StageOutcome {
    std::string_view stage;
    int observed_class = 0;

    friend bool operator==(const StageOutcome&, const StageOutcome&) = default;
};

struct TrialRecord {
    ProtocolVariant variant = ProtocolVariant::kArbitraryStaged;
    std::vector<StageOutcome> stages;
    /// Partial: the designated class. Arbitrary: an odd Bob-mode class.
    bool momentum_success = false;
    bool designated_class_hit = false;
    /// The momentum phase fixed every photon's mode, so the polarization
    /// stages ran. This is the denominator of the P_p frequency.
    bool polarization_attempted = false;
    /// Arbitrary only: both sides odd in the first polarization check.
    bool first_polarization_kept = false;
    bool polarization_success = false;

    friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// Intermediate state reported to an observer after each stage. Elements
/// report class 0 with probability 1.
struct StageSnapshot {
    std::string_view stage;
    int observed_class;
    double probability;
    const PureState& state;
};

using StageObserver = std::function<void(const StageSnapshot&)>;

/// Exact branch probabilities from walking the whole outcome tree.
/// Joint probabilities, not conditional ones.
struct ExactProbabilities {
    double designated = 0.0;
    double momentum_success = 0.0;
    double polarization_attempted = 0.0;
    double first_polarization_kept = 0.0;
    double polarization_success = 0.0;
    /// Sum of all leaf weights; 1 up to rounding.
    double total = 0.0;
    std::size_t leaves = 0;

    /// P(polarization success | attempted), 0 when never attempted.
    double conditional_polarization() const noexcept;
};

/// Per-trial tallies; aggregation is plain addition.
struct TrialCounts {
    std::uint64_t trials = 0;
    std::uint64_t designated = 0;
    std::uint64_t momentum_success = 0;
    std::uint64_t polarization_attempted = 0;
    std::uint64_t first_polarization_kept = 0;
    std::uint64_t polarization_success = 0;

    void add(const TrialRecord& r) noexcept;
    TrialCounts& operator+=(const TrialCounts& other) noexcept;

    friend bool operator==(const TrialCounts&, const TrialCounts&) = default;
};

/// A protocol bound to one pair specification. The two-copy input state is
/// built once and shared read-only by every trial.
class Protocol {
   public:
    /// `momentum_readout` only applies to PartialTwoStep; the arbitrary
    /// variant always reads its first spatial check in X quadrature.
    /// Throws VariantMismatchError when PartialTwoStep gets gamma or delta
    /// coefficients, NormalizationError for an invalid spec.
    Protocol(const HyperPairSpec& spec, ProtocolVariant variant,
             MeasurementModel momentum_readout = MeasurementModel::kHomodyne);

    ProtocolVariant variant() const noexcept { return variant_; }
    MeasurementModel momentum_readout() const noexcept { return readout_; }
    const HyperPairSpec& spec() const noexcept { return spec_; }
    const PureState& initial_state() const noexcept { return initial_; }

    /// One sampled trial. `observer` (optional) sees every intermediate state.
    TrialRecord run_trial(RandomStream& rng, const StageObserver& observer = {}) const;

    /// Walks every branch. Throws ProtocolInvariantError if any branching
    /// level fails to sum to 1 within 1e-12.
    ExactProbabilities enumerate() const;

    /// Follows the given class at each named stage (stages not listed take
    /// their most probable class). Throws DegenerateStateError when a forced
    /// class has no mass.
    TrialRecord run_forced(const std::map<std::string_view, int>& classes,
                           const StageObserver& observer = {}) const;

   private:
    HyperPairSpec spec_;
    ProtocolVariant variant_;
    MeasurementModel readout_;
    PureState initial_;
};

/// Copy 1 on (a1,a2 | b1,b2) tensored with copy 2 on (a3,a4 | b3,b4).
PureState two_copy_state(const HyperPairSpec& spec);

TrialRecord run_trial_partial(const HyperPairSpec& spec, RandomStream& rng);
TrialRecord run_trial_arbitrary(const HyperPairSpec& spec, RandomStream& rng);

/// Estimator scale factors k in C = k sqrt(P).
double momentum_scale(ProtocolVariant v, MeasurementModel readout) noexcept;
double polarization_scale(ProtocolVariant v) noexcept;

struct ConcurrenceReport {
    ProtocolVariant variant = ProtocolVariant::kArbitraryStaged;
    MeasurementModel momentum_readout = MeasurementModel::kHomodyne;
    bool exact = false;
    TrialCounts counts;

    IntervalEstimate p_m;
    /// Both odd momentum classes (twice p_m when the readout separates them).
    IntervalEstimate p_m_union;
    IntervalEstimate p_p;
    /// Arbitrary only: first spatial check, first and second polarization
    /// checks (conditional on reaching them).
    std::optional<IntervalEstimate> p_1m;
    std::optional<IntervalEstimate> p_1p;
    std::optional<IntervalEstimate> p_2p;

    ConcurrenceInterval c_m;
    ConcurrenceInterval c_p;
    ConcurrenceInterval c_hyper;
    /// Partial only: C_p = sqrt(P_p), the uncorrected rule. Equals c_p / sqrt2.
    std::optional<ConcurrenceInterval> c_p_literal;

    ConcurrenceOracleValues oracle;
    /// Where the estimator formulas depart from the literal closed-form rules.
    std::vector<std::string> deviation_notes;
    /// Run-specific caveats, e.g. an empty P_p denominator.
    std::vector<std::string> warnings;
};

/// Frequencies over the records, with the denominators stated on TrialRecord.
/// Throws EmptyRecordsError, VariantMixError (records disagree with each
/// other or with `variant`).
ConcurrenceReport estimate_concurrence(std::span<const TrialRecord> records, ProtocolVariant variant,
                                       const ConcurrenceOracleValues& oracle,
                                       MeasurementModel momentum_readout = MeasurementModel::kHomodyne);

ConcurrenceReport estimate_from_counts(const TrialCounts& counts, ProtocolVariant variant,
                                       MeasurementModel momentum_readout, const ConcurrenceOracleValues& oracle);

/// Same estimators with exact probabilities in place of frequencies; every
/// half width is zero.
ConcurrenceReport estimate_from_probabilities(const ExactProbabilities& probs, ProtocolVariant variant,
                                              MeasurementModel momentum_readout,
                                              const ConcurrenceOracleValues& oracle);

}  // namespace hyperconc

#endif  // HYPERCONC_PROTOCOL_HPP_
