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

#include "hyperconc/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hyperconc/errors.hpp"

namespace hyperconc {

char polarization_symbol(Polarization p) noexcept { return p == Polarization::H ? 'H' : 'V'; }

ModeRegistry::ModeRegistry(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw ModeCollisionError("duplicate spatial mode label in registry");
    }
    if (labels_.size() > kMaxModes) {
        throw InvalidArgumentError("too many spatial modes (max 127)");
    }
}

std::optional<std::uint8_t> ModeRegistry::find(std::string_view label) const noexcept {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<std::uint8_t>(it - labels_.begin());
}

std::uint8_t ModeRegistry::index_of(std::string_view label) const {
    auto idx = find(label);
    if (!idx) throw UnknownModeError("unknown spatial mode '" + std::string(label) + "'");
    return *idx;
}

namespace {

void check_single_occupancy(const Term& t, std::size_t slot_count, const ModeRegistry& reg) {
    std::uint64_t seen[2] = {0, 0};
    for (std::size_t s = 0; s < slot_count; ++s) {
        const auto m = t.config.photon(s).mode;
        auto& word = seen[m / 64];
        const std::uint64_t bit = std::uint64_t{1} << (m % 64);
        if (word & bit) {
            throw OccupancyError("two photons share spatial mode '" + reg.label(m) + "'");
        }
        word |= bit;
    }
}

}  // namespace

PureState::PureState() : registry_(std::make_shared<const ModeRegistry>()) {}

PureState::PureState(std::shared_ptr<const ModeRegistry> registry, std::size_t slot_count,
                     std::vector<Term> terms)
    : registry_(std::move(registry)), slot_count_(slot_count), terms_(std::move(terms)) {}

PureState PureState::from_terms(std::shared_ptr<const ModeRegistry> registry,
                                std::size_t slot_count, std::vector<Term> terms) {
    if (slot_count > BasisConfig::kMaxSlots) {
        throw InvalidSlotError("at most 8 photon slots are supported");
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.config < b.config; });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        Term acc = terms[i++];
        while (i < terms.size() && terms[i].config == acc.config) acc.amplitude += terms[i++].amplitude;
        if (std::abs(acc.amplitude) > kPruneThreshold) merged.push_back(acc);
    }
    for (const auto& t : merged) check_single_occupancy(t, slot_count, *registry);
    return PureState(std::move(registry), slot_count, std::move(merged));
}

PureState PureState::from_labeled(std::size_t slot_count, std::span<const LabeledTerm> terms,
                                  std::span<const std::string> extra_modes) {
    std::vector<std::string> labels(extra_modes.begin(), extra_modes.end());
    for (const auto& t : terms) {
        if (t.photons.size() != slot_count) {
            throw InvalidSlotError("labeled term has wrong number of photon slots");
        }
        for (const auto& p : t.photons) labels.push_back(p.mode);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto registry = std::make_shared<const ModeRegistry>(std::move(labels));

    std::vector<Term> raw;
    raw.reserve(terms.size());
    for (const auto& t : terms) {
        BasisConfig c;
        for (std::size_t s = 0; s < slot_count; ++s) {
            c = c.with_photon(s, Photon{t.photons[s].pol, registry->index_of(t.photons[s].mode)});
        }
        raw.push_back({c, t.amplitude});
    }
    return from_terms(std::move(registry), slot_count, std::move(raw));
}

Complex PureState::amplitude(std::span<const LabeledPhoton> photons) const {
    if (photons.size() != slot_count_) throw InvalidSlotError("configuration has wrong slot count");
    BasisConfig c;
    for (std::size_t s = 0; s < slot_count_; ++s) {
        auto idx = registry_->find(photons[s].mode);
        if (!idx) return {};
        c = c.with_photon(s, Photon{photons[s].pol, *idx});
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), c,
                               [](const Term& t, const BasisConfig& key) { return t.config < key; });
    if (it == terms_.end() || it->config != c) return {};
    return it->amplitude;
}

double PureState::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto& t : terms_) acc += std::norm(t.amplitude);
    return acc;
}

PureState PureState::scaled(Complex factor) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        const Complex a = t.amplitude * factor;
        if (std::abs(a) > kPruneThreshold) out.push_back({t.config, a});
    }
    return PureState(registry_, slot_count_, std::move(out));
}

PureState PureState::normalized() const {
    const double n = std::sqrt(norm_squared());
    if (n <= kPruneThreshold) throw DegenerateStateError("cannot normalize a state with zero norm");
    return scaled(Complex{1.0 / n, 0.0});
}

PureState PureState::filtered_copy(std::vector<Term> sorted_terms) const {
    return PureState(registry_, slot_count_, std::move(sorted_terms));
}

std::vector<std::uint8_t> PureState::modes_in_slot(std::size_t slot) const {
    if (slot >= slot_count_) throw InvalidSlotError("slot index out of range");
    std::vector<std::uint8_t> modes;
    for (const auto& t : terms_) modes.push_back(t.config.photon(slot).mode);
    std::sort(modes.begin(), modes.end());
    modes.erase(std::unique(modes.begin(), modes.end()), modes.end());
    return modes;
}

std::string PureState::to_string() const {
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << t.amplitude.real() << (t.amplitude.imag() < 0 ? "" : "+") << t.amplitude.imag()
           << "i)";
        for (std::size_t s = 0; s < slot_count_; ++s) {
            const auto p = t.config.photon(s);
            os << '|' << polarization_symbol(p.pol) << ',' << registry_->label(p.mode) << '>';
        }
    }
    if (first) os << "0";
    return os.str();
}

double CoefficientBlock::norm_squared() const noexcept {
    return std::norm(alpha) + std::norm(beta) + std::norm(gamma) + std::norm(delta);
}

HyperPairSpec HyperPairSpec::on_modes(std::array<std::string, 2> alice,
                                      std::array<std::string, 2> bob) const {
    HyperPairSpec out = *this;
    out.alice_modes = std::move(alice);
    out.bob_modes = std::move(bob);
    return out;
}

void validate(const HyperPairSpec& spec) {
    const auto check = [](const CoefficientBlock& b, const char* name) {
        const double n2 = b.norm_squared();
        if (!std::isfinite(n2) || std::abs(n2 - 1.0) > kNormalizationTolerance) {
            std::ostringstream os;
            os.precision(12);
            os << name << " coefficients are not normalized: sum |c|^2 = " << n2;
            throw NormalizationError(os.str());
        }
    };
    check(spec.pol, "polarization");
    check(spec.mom, "momentum");
}

PureState make_hyper_pair(const HyperPairSpec& spec) {
    validate(spec);
    const std::array<std::string, 4> labels{spec.alice_modes[0], spec.alice_modes[1],
                                            spec.bob_modes[0], spec.bob_modes[1]};
    auto registry = std::make_shared<const ModeRegistry>(std::vector<std::string>(labels.begin(), labels.end()));
    const std::uint8_t a[2] = {registry->index_of(spec.alice_modes[0]),
                               registry->index_of(spec.alice_modes[1])};
    const std::uint8_t b[2] = {registry->index_of(spec.bob_modes[0]),
                               registry->index_of(spec.bob_modes[1])};

    using P = Polarization;
    // (Alice, Bob) polarization per coefficient: alpha HH, beta VV, gamma HV, delta VH.
    const std::array<std::pair<P, P>, 4> pol_basis{
        {{P::H, P::H}, {P::V, P::V}, {P::H, P::V}, {P::V, P::H}}};
    // (Alice, Bob) spatial alternative per coefficient, same ordering.
    const std::array<std::pair<int, int>, 4> mom_basis{{{0, 0}, {1, 1}, {0, 1}, {1, 0}}};
    const auto pol = spec.pol.as_array();
    const auto mom = spec.mom.as_array();

    std::vector<Term> terms;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t k = 0; k < 4; ++k) {
            const Complex amp = pol[i] * mom[k];
            BasisConfig c;
            c = c.with_photon(0, Photon{pol_basis[i].first, a[mom_basis[k].first]});
            c = c.with_photon(1, Photon{pol_basis[i].second, b[mom_basis[k].second]});
            terms.push_back({c, amp});
        }
    }
    return PureState::from_terms(std::move(registry), 2, std::move(terms));
}

PureState tensor(const PureState& a, const PureState& b) {
    if (a.slot_count() + b.slot_count() > BasisConfig::kMaxSlots) {
        throw InvalidSlotError("tensor product exceeds 8 photon slots");
    }
    std::vector<std::string> labels;
    for (const auto& l : a.registry().labels()) labels.push_back(l);
    for (const auto& l : b.registry().labels()) {
        if (a.registry().contains(l)) throw ModeCollisionError("mode '" + l + "' appears in both factors");
        labels.push_back(l);
    }
    auto registry = std::make_shared<const ModeRegistry>(std::move(labels));
    std::vector<std::uint8_t> remap_a, remap_b;
    for (const auto& l : a.registry().labels()) remap_a.push_back(registry->index_of(l));
    for (const auto& l : b.registry().labels()) remap_b.push_back(registry->index_of(l));

    std::vector<Term> terms;
    terms.reserve(a.size() * b.size());
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            BasisConfig c;
            for (std::size_t s = 0; s < a.slot_count(); ++s) {
                auto p = ta.config.photon(s);
                c = c.with_photon(s, Photon{p.pol, remap_a[p.mode]});
            }
            for (std::size_t s = 0; s < b.slot_count(); ++s) {
                auto p = tb.config.photon(s);
                c = c.with_photon(a.slot_count() + s, Photon{p.pol, remap_b[p.mode]});
            }
            terms.push_back({c, ta.amplitude * tb.amplitude});
        }
    }
    return PureState::from_terms(std::move(registry), a.slot_count() + b.slot_count(), std::move(terms));
}

double norm(const PureState& s) { return std::sqrt(s.norm_squared()); }

double fidelity_up_to_phase(const PureState& a, const PureState& b) {
    if (a.slot_count() != b.slot_count() || a.registry() != b.registry()) {
        throw BasisMismatchError("states live on different mode registries or slot counts");
    }
    // Both term lists are sorted by configuration: merge-join.
    Complex overlap{};
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (ia->config < ib->config) {
            ++ia;
        } else if (ib->config < ia->config) {
            ++ib;
        } else {
            overlap += std::conj(ia->amplitude) * ib->amplitude;
            ++ia;
            ++ib;
        }
    }
    return std::abs(overlap);
}

DensityMatrix::DensityMatrix(std::vector<std::string> basis, Eigen::MatrixXcd matrix)
    : basis_(std::move(basis)), matrix_(std::move(matrix)) {
    if (matrix_.rows() != static_cast<Eigen::Index>(basis_.size()) || matrix_.cols() != matrix_.rows()) {
        throw InvalidArgumentError("density matrix shape does not match its basis");
    }
}

double DensityMatrix::hermiticity_error() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double DensityMatrix::purity() const { return (matrix_ * matrix_).trace().real(); }

DensityMatrix reduced_density(const PureState& s, std::span<const std::size_t> keep_slots,
                              Observable observable) {
    if (keep_slots.empty()) throw InvalidSlotError("no slots to keep");
    for (std::size_t i = 0; i < keep_slots.size(); ++i) {
        if (keep_slots[i] >= s.slot_count()) throw InvalidSlotError("slot index out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (keep_slots[i] == keep_slots[j]) throw InvalidSlotError("slot listed twice");
        }
    }
    const double n2 = s.norm_squared();
    if (n2 <= kPruneThreshold * kPruneThreshold) throw DegenerateStateError("reduced density of a zero state");

    // Per kept slot: the ordered list of observable values and their labels.
    std::vector<std::vector<std::uint8_t>> values(keep_slots.size());
    for (std::size_t i = 0; i < keep_slots.size(); ++i) {
        if (observable == Observable::kPolarization) {
            values[i] = {0, 1};
        } else {
            values[i] = s.modes_in_slot(keep_slots[i]);
        }
    }
    const auto value_label = [&](std::uint8_t v) -> std::string {
        if (observable == Observable::kPolarization) return v ? "V" : "H";
        return s.registry().label(v);
    };

    std::vector<std::string> basis{""};
    for (std::size_t i = 0; i < keep_slots.size(); ++i) {
        std::vector<std::string> next;
        for (const auto& prefix : basis) {
            for (auto v : values[i]) {
                next.push_back(prefix + (prefix.empty() ? "" : ",") + value_label(v));
            }
        }
        basis = std::move(next);
    }

    const auto observed = [&](Photon p) -> std::uint8_t {
        return observable == Observable::kPolarization ? static_cast<std::uint8_t>(p.pol) : p.mode;
    };
    // Environment key: the configuration with the kept observables blanked.
    const auto environment = [&](BasisConfig c) {
        for (auto slot : keep_slots) {
            auto p = c.photon(slot);
            if (observable == Observable::kPolarization) {
                p.pol = Polarization::H;
            } else {
                p.mode = 0;
            }
            c = c.with_photon(slot, p);
        }
        return c;
    };
    const auto basis_index = [&](BasisConfig c) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < keep_slots.size(); ++i) {
            const auto v = observed(c.photon(keep_slots[i]));
            const auto pos = std::lower_bound(values[i].begin(), values[i].end(), v) - values[i].begin();
            idx = idx * values[i].size() + static_cast<std::size_t>(pos);
        }
        return idx;
    };

    std::map<BasisConfig, std::vector<std::pair<std::size_t, Complex>>> groups;
    for (const auto& t : s.terms()) groups[environment(t.config)].emplace_back(basis_index(t.config), t.amplitude);

    const auto dim = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& [env, entries] : groups) {
        for (const auto& [i, ai] : entries) {
            for (const auto& [j, aj] : entries) {
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) += ai * std::conj(aj);
            }
        }
    }
    rho /= n2;
    return DensityMatrix(std::move(basis), std::move(rho));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dimension() != b.dimension() ||
        !std::equal(a.basis().begin(), a.basis().end(), b.basis().begin())) {
        throw BasisMismatchError("density matrices are over different bases");
    }
    Eigen::MatrixXcd diff = a.matrix() - b.matrix();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace hyperconc
