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

#include "hyperconc/elements.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "hyperconc/errors.hpp"

namespace hyperconc {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct Branch {
    Photon photon;
    double coeff;
};

struct Branches {
    std::array<Branch, 2> items;
    std::size_t count = 0;
};

/// Registry after a two-mode element: inputs removed, outputs added.
std::shared_ptr<const ModeRegistry> rewire_registry(const ModeRegistry& reg, const ModePair& in,
                                                    const ModePair& out) {
    reg.index_of(in.first);
    reg.index_of(in.second);
    if (in.first == in.second) throw InvalidArgumentError("element input modes must differ");
    if (out.first == out.second) throw InvalidArgumentError("element output modes must differ");
    for (const auto* label : {&out.first, &out.second}) {
        if (reg.contains(*label) && *label != in.first && *label != in.second) {
            throw ModeCollisionError("output mode '" + *label + "' is already in use");
        }
    }
    std::vector<std::string> labels;
    for (const auto& l : reg.labels()) {
        if (l != in.first && l != in.second) labels.push_back(l);
    }
    labels.push_back(out.first);
    labels.push_back(out.second);
    return std::make_shared<const ModeRegistry>(std::move(labels));
}

/// Applies a single-photon linear map to every slot of every term. `map`
/// receives the photon with its old registry index and returns branches in
/// new registry indices.
template <class Map>
PureState transform(const PureState& s, std::shared_ptr<const ModeRegistry> registry, Map&& map) {
    std::vector<Term> out;
    out.reserve(s.size() * 2);
    std::vector<Term> partial, next;
    for (const auto& t : s.terms()) {
        partial.assign(1, Term{BasisConfig{}, t.amplitude});
        for (std::size_t slot = 0; slot < s.slot_count(); ++slot) {
            const Branches br = map(t.config.photon(slot));
            next.clear();
            for (const auto& p : partial) {
                for (std::size_t k = 0; k < br.count; ++k) {
                    next.push_back({p.config.with_photon(slot, br.items[k].photon),
                                    p.amplitude * br.items[k].coeff});
                }
            }
            partial.swap(next);
        }
        out.insert(out.end(), partial.begin(), partial.end());
    }
    try {
        return PureState::from_terms(std::move(registry), s.slot_count(), std::move(out));
    } catch (const OccupancyError& e) {
        throw ModeCollisionError(std::string("element output collides: ") + e.what());
    }
}

std::vector<std::uint8_t> index_remap(const ModeRegistry& from, const ModeRegistry& to) {
    std::vector<std::uint8_t> remap(from.size(), 0);
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (auto idx = to.find(from.labels()[i])) remap[i] = *idx;
    }
    return remap;
}

}  // namespace

PureState apply_pbs(const PureState& s, const ModePair& in_modes, const ModePair& out_modes) {
    const auto& old = s.registry();
    auto registry = rewire_registry(old, in_modes, out_modes);
    const auto m1 = old.index_of(in_modes.first);
    const auto m2 = old.index_of(in_modes.second);
    const auto t1 = registry->index_of(out_modes.first);
    const auto t2 = registry->index_of(out_modes.second);
    const auto remap = index_remap(old, *registry);

    return transform(s, registry, [&](Photon p) {
        Branches b;
        b.count = 1;
        if (p.mode == m1) {
            b.items[0] = {Photon{p.pol, p.pol == Polarization::H ? t1 : t2}, 1.0};
        } else if (p.mode == m2) {
            b.items[0] = {Photon{p.pol, p.pol == Polarization::H ? t2 : t1}, 1.0};
        } else {
            b.items[0] = {Photon{p.pol, remap[p.mode]}, 1.0};
        }
        return b;
    });
}

PureState apply_bs(const PureState& s, const ModePair& in_modes, const ModePair& out_modes) {
    const auto& old = s.registry();
    auto registry = rewire_registry(old, in_modes, out_modes);
    const auto b1 = old.index_of(in_modes.first);
    const auto b2 = old.index_of(in_modes.second);
    const auto c1 = registry->index_of(out_modes.first);
    const auto c2 = registry->index_of(out_modes.second);
    const auto remap = index_remap(old, *registry);

    return transform(s, registry, [&](Photon p) {
        Branches b;
        if (p.mode == b1 || p.mode == b2) {
            const double sign = p.mode == b1 ? 1.0 : -1.0;
            b.items[0] = {Photon{p.pol, c1}, kInvSqrt2};
            b.items[1] = {Photon{p.pol, c2}, sign * kInvSqrt2};
            b.count = 2;
        } else {
            b.items[0] = {Photon{p.pol, remap[p.mode]}, 1.0};
            b.count = 1;
        }
        return b;
    });
}

PureState apply_pol_hadamard(const PureState& s, const std::string& mode) {
    const auto target = s.registry().index_of(mode);
    return transform(s, s.registry_ptr(), [&](Photon p) {
        Branches b;
        if (p.mode == target) {
            const double sign = p.pol == Polarization::H ? 1.0 : -1.0;
            b.items[0] = {Photon{Polarization::H, p.mode}, kInvSqrt2};
            b.items[1] = {Photon{Polarization::V, p.mode}, sign * kInvSqrt2};
            b.count = 2;
        } else {
            b.items[0] = {p, 1.0};
            b.count = 1;
        }
        return b;
    });
}

}  // namespace hyperconc
