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

// Cross-Kerr QND probes.
//
// The coherent probe is not simulated as a field. Each basis configuration
// imprints an integer multiple of the unit phase theta on the probe; the
// multiple is the sum of the weights of the coupling predicates the
// configuration satisfies. A readout sees that integer (homodyne) or only its
// absolute value (X quadrature, which cannot tell +theta from -theta).

#ifndef HYPERCONC_QND_HPP_
#define HYPERCONC_QND_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperconc/elements.hpp"
#include "hyperconc/random.hpp"
#include "hyperconc/state_space.hpp"

namespace hyperconc {

enum class MeasurementModel { kHomodyne, kXQuadrature };

const char* to_string(MeasurementModel m) noexcept;

/// One predicate of a coupling: a photon in `mode` (with polarization `pol`
/// when set) adds `weight` units of phase.
struct KerrWeight {
    std::string mode;
    std::optional<Polarization> pol;
    int weight = 0;
};

/// Coupling resolved against a concrete registry.
struct ResolvedCoupling {
    struct Entry {
        std::uint8_t mode;
        std::int8_t pol;  // -1: any polarization
        int weight;
    };
    std::vector<Entry> entries;

    int phase(const BasisConfig& config, std::size_t slot_count) const noexcept;
};

class KerrCoupling {
   public:
    static constexpr int kMaxWeight = 2;

    /// Throws InvalidArgumentError for weights outside [-2, 2] or empty lists.
    explicit KerrCoupling(std::vector<KerrWeight> weights);

    /// {m1: +1, m3: -1}: zero for (m1,m3) and (m2,m4), +1 for (m1,m4), -1
    /// for (m2,m3).
    static KerrCoupling spatial_parity(const std::string& m1, const std::string& m3);

    /// {(m1,V): +1, (m2,V): -1}: zero for HH and VV, +-1 for HV and VH.
    static KerrCoupling polarization_parity(const std::string& m1, const std::string& m2);

    std::span<const KerrWeight> weights() const noexcept { return weights_; }

    /// Throws UnknownModeError when a predicate names an unregistered mode.
    ResolvedCoupling resolve(const ModeRegistry& registry) const;

   private:
    std::vector<KerrWeight> weights_;
};

/// Phase class of a labeled configuration under `coupling`.
int probe_phase(std::span<const LabeledPhoton> config, const KerrCoupling& coupling);

/// Readout class for a phase multiple.
inline int readout_class(int phase, MeasurementModel m) noexcept {
    return m == MeasurementModel::kHomodyne ? phase : (phase < 0 ? -phase : phase);
}

struct ClassProbability {
    int observed_class;
    double probability;
};

/// Readout classes with nonzero mass, ascending, probabilities summing to 1.
/// Throws DegenerateStateError for a zero state.
std::vector<ClassProbability> outcome_distribution(const PureState& s, const KerrCoupling& c,
                                                   MeasurementModel m);

struct ProbeOutcome {
    int observed_class;
    double probability;
    PureState posterior;
};

/// Forced outcome: conditions `s` on readout class `observed_class` and
/// renormalizes. Throws DegenerateStateError when the class has no mass.
ProbeOutcome project(const PureState& s, const KerrCoupling& c, MeasurementModel m, int observed_class);

/// Draws one uniform from `rng` and picks a class by inverse CDF over the
/// ascending class list.
int sample_class(std::span<const ClassProbability> distribution, RandomStream& rng);

ProbeOutcome measure_probe(const PureState& s, const KerrCoupling& c, MeasurementModel m, RandomStream& rng);

enum class Side { kAlice, kBob };

const char* to_string(Side side) noexcept;

/// ((m1, m2), (m3, m4)): the two spatial alternatives of one side's photon
/// from the first and the second copy.
struct SpatialModePairs {
    ModePair first;
    ModePair second;
};

/// Coupling {m1: +1, m3: -1} after checking all four modes are registered.
KerrCoupling spatial_parity_coupling(const PureState& s, const SpatialModePairs& pairs);

ProbeOutcome parity_check_spatial(const PureState& s, Side side, const SpatialModePairs& pairs,
                                  MeasurementModel m, RandomStream& rng);

/// Polarization parity of the photons in the two modes, read out in X
/// quadrature: class 0 even (HH, VV), class 1 odd (HV, VH). Equivalent to
/// routing each mode through a PBS and letting the V output of m1 and of m2
/// imprint opposite phases on one probe.
ProbeOutcome parity_check_polarization(const PureState& s, const ModePair& modes, RandomStream& rng);

}  // namespace hyperconc

#endif  // HYPERCONC_QND_HPP_
