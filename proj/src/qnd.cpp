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

#include "hyperconc/qnd.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hyperconc/errors.hpp"

namespace hyperconc {

const char* to_string(MeasurementModel m) noexcept {
    return m == MeasurementModel::kHomodyne ? "homodyne" : "xquad";
}

const char* to_string(Side side) noexcept { return side == Side::kAlice ? "alice" : "bob"; }

int ResolvedCoupling::phase(const BasisConfig& config, std::size_t slot_count) const noexcept {
    int acc = 0;
    for (std::size_t s = 0; s < slot_count; ++s) {
        const Photon p = config.photon(s);
        for (const auto& e : entries) {
            if (e.mode == p.mode && (e.pol < 0 || e.pol == static_cast<std::int8_t>(p.pol))) acc += e.weight;
        }
    }
    return acc;
}

KerrCoupling::KerrCoupling(std::vector<KerrWeight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InvalidArgumentError("coupling has no predicates");
    for (const auto& w : weights_) {
        if (std::abs(w.weight) > kMaxWeight) throw InvalidArgumentError("coupling weight outside [-2, 2]");
    }
}

KerrCoupling KerrCoupling::spatial_parity(const std::string& m1, const std::string& m3) {
    return KerrCoupling({{m1, std::nullopt, +1}, {m3, std::nullopt, -1}});
}

KerrCoupling KerrCoupling::polarization_parity(const std::string& m1, const std::string& m2) {
    return KerrCoupling({{m1, Polarization::V, +1}, {m2, Polarization::V, -1}});
}

ResolvedCoupling KerrCoupling::resolve(const ModeRegistry& registry) const {
    ResolvedCoupling out;
    out.entries.reserve(weights_.size());
    for (const auto& w : weights_) {
        out.entries.push_back({registry.index_of(w.mode),
                               static_cast<std::int8_t>(w.pol ? static_cast<int>(*w.pol) : -1), w.weight});
    }
    return out;
}

int probe_phase(std::span<const LabeledPhoton> config, const KerrCoupling& coupling) {
    int acc = 0;
    for (const auto& p : config) {
        for (const auto& w : coupling.weights()) {
            if (w.mode == p.mode && (!w.pol || *w.pol == p.pol)) acc += w.weight;
        }
    }
    return acc;
}

std::vector<ClassProbability> outcome_distribution(const PureState& s, const KerrCoupling& c,
                                                   MeasurementModel m) {
    const auto resolved = c.resolve(s.registry());
    std::vector<ClassProbability> mass;
    double total = 0.0;
    for (const auto& t : s.terms()) {
        const int cls = readout_class(resolved.phase(t.config, s.slot_count()), m);
        const double w = std::norm(t.amplitude);
        total += w;
        auto it = std::find_if(mass.begin(), mass.end(),
                               [cls](const ClassProbability& e) { return e.observed_class == cls; });
        if (it == mass.end()) {
            mass.push_back({cls, w});
        } else {
            it->probability += w;
        }
    }
    if (total < kPruneThreshold) throw DegenerateStateError("probe measured on a state without probability mass");
    std::sort(mass.begin(), mass.end(),
              [](const ClassProbability& a, const ClassProbability& b) { return a.observed_class < b.observed_class; });
    for (auto& e : mass) e.probability /= total;
    return mass;
}

ProbeOutcome project(const PureState& s, const KerrCoupling& c, MeasurementModel m, int observed_class) {
    const auto resolved = c.resolve(s.registry());
    std::vector<Term> kept;
    double total = 0.0;
    double kept_mass = 0.0;
    for (const auto& t : s.terms()) {
        const double w = std::norm(t.amplitude);
        total += w;
        if (readout_class(resolved.phase(t.config, s.slot_count()), m) == observed_class) {
            kept.push_back(t);
            kept_mass += w;
        }
    }
    if (total < kPruneThreshold) throw DegenerateStateError("probe measured on a state without probability mass");
    if (kept.empty()) {
        throw DegenerateStateError("probe class " + std::to_string(observed_class) + " has zero probability");
    }
    const double scale = 1.0 / std::sqrt(kept_mass);
    for (auto& t : kept) t.amplitude *= scale;
    return ProbeOutcome{observed_class, kept_mass / total, s.filtered_copy(std::move(kept))};
}

int sample_class(std::span<const ClassProbability> distribution, RandomStream& rng) {
    if (distribution.empty()) throw DegenerateStateError("empty outcome distribution");
    const double u = rng.uniform();
    double cumulative = 0.0;
    for (const auto& e : distribution) {
        cumulative += e.probability;
        if (u < cumulative) return e.observed_class;
    }
    return distribution.back().observed_class;
}

ProbeOutcome measure_probe(const PureState& s, const KerrCoupling& c, MeasurementModel m, RandomStream& rng) {
    const auto dist = outcome_distribution(s, c, m);
    return project(s, c, m, sample_class(dist, rng));
}

KerrCoupling spatial_parity_coupling(const PureState& s, const SpatialModePairs& pairs) {
    for (const auto* label : {&pairs.first.first, &pairs.first.second, &pairs.second.first, &pairs.second.second}) {
        s.registry().index_of(*label);
    }
    return KerrCoupling::spatial_parity(pairs.first.first, pairs.second.first);
}

ProbeOutcome parity_check_spatial(const PureState& s, Side /*side*/, const SpatialModePairs& pairs,
                                  MeasurementModel m, RandomStream& rng) {
    return measure_probe(s, spatial_parity_coupling(s, pairs), m, rng);
}

ProbeOutcome parity_check_polarization(const PureState& s, const ModePair& modes, RandomStream& rng) {
    return measure_probe(s, KerrCoupling::polarization_parity(modes.first, modes.second),
                         MeasurementModel::kXQuadrature, rng);
}

}  // namespace hyperconc
