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

#include "hyperconc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "hyperconc/elements.hpp"
#include "hyperconc/errors.hpp"

namespace hyperconc {

const char* to_string(ProtocolVariant v) noexcept {
    return v == ProtocolVariant::kPartialTwoStep ? "partial" : "arbitrary";
}

namespace {

constexpr double kBranchSumTolerance = 1e-12;

const KerrCoupling& alice_spatial_coupling() {
    static const KerrCoupling c = KerrCoupling::spatial_parity("a1", "a3");
    return c;
}

const KerrCoupling& bob_spatial_coupling() {
    static const KerrCoupling c = KerrCoupling::spatial_parity("b1", "b3");
    return c;
}

/// Distinct phase for each of the four (c1|c2) x (c3|c4) occupations:
/// c1c4 -> +1, c2c3 -> -1, c1c3 -> +3, c2c4 -> -3.
const KerrCoupling& bob_mode_coupling() {
    static const KerrCoupling c({{"c1", std::nullopt, +2}, {"c2", std::nullopt, -2},
                                 {"c3", std::nullopt, +1}, {"c4", std::nullopt, -1}});
    return c;
}

ModePair occupied_pair(const PureState& s, std::size_t slot_a, std::size_t slot_b) {
    const auto ma = s.modes_in_slot(slot_a);
    const auto mb = s.modes_in_slot(slot_b);
    if (ma.size() != 1 || mb.size() != 1) {
        throw ProtocolInvariantError("photon spatial modes are not yet determined");
    }
    return {s.registry().label(ma.front()), s.registry().label(mb.front())};
}

struct Node {
    PureState state;
    TrialRecord record;
    double weight;
};

struct SampledChooser {
    RandomStream& rng;

    template <class F>
    void operator()(std::string_view, std::span<const ClassProbability> dist, F&& f) {
        f(sample_class(dist, rng));
    }
};

struct ExhaustiveChooser {
    template <class F>
    void operator()(std::string_view, std::span<const ClassProbability> dist, F&& f) {
        for (const auto& e : dist) f(e.observed_class);
    }
};

struct ForcedChooser {
    const std::map<std::string_view, int>& classes;

    template <class F>
    void operator()(std::string_view stage, std::span<const ClassProbability> dist, F&& f) {
        if (auto it = classes.find(stage); it != classes.end()) {
            f(it->second);
            return;
        }
        const auto best = std::max_element(dist.begin(), dist.end(), [](const auto& a, const auto& b) {
            return a.probability < b.probability;
        });
        f(best->observed_class);
    }
};

/// Walks the protocol tree. `Chooser` decides which classes to follow at a
/// measurement; `Leaf` receives each finished trial and its path weight.
template <class Chooser, class Leaf>
class Walker {
   public:
    Walker(const Protocol& protocol, Chooser& chooser, Leaf& leaf, const StageObserver& observer)
        : protocol_(protocol), chooser_(chooser), leaf_(leaf), observer_(observer) {}

    void run() {
        Node root{protocol_.initial_state(), TrialRecord{}, 1.0};
        root.record.variant = protocol_.variant();
        if (protocol_.variant() == ProtocolVariant::kPartialTwoStep) {
            partial(root);
        } else {
            arbitrary(root);
        }
    }

   private:
    void notify(std::string_view stage, int cls, double p, const PureState& s) const {
        if (observer_) observer_(StageSnapshot{stage, cls, p, s});
    }

    template <class Next>
    void measure(const Node& n, std::string_view stage, const KerrCoupling& coupling, MeasurementModel model,
                 Next&& next) {
        const auto dist = outcome_distribution(n.state, coupling, model);
        double sum = 0.0;
        for (const auto& e : dist) sum += e.probability;
        if (std::abs(sum - 1.0) > kBranchSumTolerance) {
            throw ProtocolInvariantError("outcome probabilities at stage " + std::string(stage) + " do not sum to 1");
        }
        chooser_(stage, std::span<const ClassProbability>(dist), [&](int cls) {
            ProbeOutcome out = project(n.state, coupling, model, cls);
            Node child{std::move(out.posterior), n.record, n.weight * out.probability};
            child.record.stages.push_back({stage, cls});
            notify(stage, cls, out.probability, child.state);
            next(child, cls);
        });
    }

    Node apply_element(const Node& n, std::string_view stage, PureState next_state) const {
        Node child{std::move(next_state), n.record, n.weight};
        notify(stage, 0, 1.0, child.state);
        return child;
    }

    void partial(const Node& root) {
        const MeasurementModel model = protocol_.momentum_readout();
        measure(root, stage::kSpatialAlice, alice_spatial_coupling(), model, [&](Node& na, int alice_class) {
            // Both probes see the same class for gamma = delta = 0.
            for (const auto& e : outcome_distribution(na.state, bob_spatial_coupling(), model)) {
                if (e.observed_class != alice_class && e.probability > kBranchSumTolerance) {
                    throw ProtocolInvariantError("Alice and Bob spatial parity classes disagree");
                }
            }
            measure(na, stage::kSpatialBob, bob_spatial_coupling(), model, [&](Node& nb, int bob_class) {
                const bool designated = bob_class == 1;
                nb.record.designated_class_hit = designated;
                nb.record.momentum_success = designated;
                if (bob_class == 0) {
                    finish(nb);
                    return;
                }
                nb.record.polarization_attempted = true;
                if (model == MeasurementModel::kHomodyne) {
                    partial_polarization(nb);
                } else {
                    measure(nb, stage::kAliceMode, alice_spatial_coupling(), MeasurementModel::kHomodyne,
                            [&](Node& nm, int) { partial_polarization(nm); });
                }
            });
        });
    }

    void partial_polarization(const Node& n) {
        const ModePair alice = occupied_pair(n.state, 0, 2);
        measure(n, stage::kPolarizationAlice, KerrCoupling::polarization_parity(alice.first, alice.second),
                MeasurementModel::kXQuadrature, [&](Node& np, int cls) {
                    np.record.polarization_success = cls == 1;
                    finish(np);
                });
    }

    void arbitrary(const Node& root) {
        const auto xq = MeasurementModel::kXQuadrature;
        measure(root, stage::kSpatialAlice, alice_spatial_coupling(), xq, [&](Node& na, int alice_class) {
            measure(na, stage::kSpatialBob, bob_spatial_coupling(), xq, [&](Node& nb, int bob_class) {
                if (alice_class != 1 || bob_class != 1) {
                    finish(nb);
                    return;
                }
                const Node mixed = apply_element(
                    nb, stage::kBobBeamSplitters,
                    apply_bs(apply_bs(nb.state, {"b1", "b2"}, {"c1", "c2"}), {"b3", "b4"}, {"c3", "c4"}));
                arbitrary_modes(mixed);
            });
        });
    }

    void arbitrary_modes(const Node& n) {
        const auto hd = MeasurementModel::kHomodyne;
        measure(n, stage::kBobMode, bob_mode_coupling(), hd, [&](Node& nm, int bob_mode) {
            nm.record.momentum_success = bob_mode == 1 || bob_mode == -1;
            nm.record.designated_class_hit = bob_mode == 1;
            nm.record.polarization_attempted = true;
            measure(nm, stage::kAliceMode, alice_spatial_coupling(), hd, [&](Node& na, int) {
                arbitrary_polarization(na);
            });
        });
    }

    void arbitrary_polarization(const Node& n) {
        const auto xq = MeasurementModel::kXQuadrature;
        const ModePair alice = occupied_pair(n.state, 0, 2);
        const ModePair bob = occupied_pair(n.state, 1, 3);
        const auto alice_parity = KerrCoupling::polarization_parity(alice.first, alice.second);
        const auto bob_parity = KerrCoupling::polarization_parity(bob.first, bob.second);
        measure(n, stage::kPolarizationAlice, alice_parity, xq, [&](Node& pa, int alice_class) {
            measure(pa, stage::kPolarizationBob, bob_parity, xq, [&](Node& pb, int bob_class) {
                if (alice_class != 1 || bob_class != 1) {
                    finish(pb);
                    return;
                }
                pb.record.first_polarization_kept = true;
                const Node rotated = apply_element(
                    pb, stage::kAliceHadamards,
                    apply_pol_hadamard(apply_pol_hadamard(pb.state, alice.first), alice.second));
                measure(rotated, stage::kPolarizationAliceSecond, alice_parity, xq, [&](Node& ps, int cls) {
                    ps.record.polarization_success = cls == 1;
                    finish(ps);
                });
            });
        });
    }

    void finish(const Node& n) { leaf_(n.record, n.weight); }

    const Protocol& protocol_;
    Chooser& chooser_;
    Leaf& leaf_;
    const StageObserver& observer_;
};

bool has_cross_terms(const CoefficientBlock& b) noexcept {
    return std::abs(b.gamma) > kPruneThreshold || std::abs(b.delta) > kPruneThreshold;
}

}  // namespace

double ExactProbabilities::conditional_polarization() const noexcept {
    return polarization_attempted > 0.0 ? polarization_success / polarization_attempted : 0.0;
}

void TrialCounts::add(const TrialRecord& r) noexcept {
    ++trials;
    designated += r.designated_class_hit;
    momentum_success += r.momentum_success;
    polarization_attempted += r.polarization_attempted;
    first_polarization_kept += r.first_polarization_kept;
    polarization_success += r.polarization_success;
}

TrialCounts& TrialCounts::operator+=(const TrialCounts& o) noexcept {
    trials += o.trials;
    designated += o.designated;
    momentum_success += o.momentum_success;
    polarization_attempted += o.polarization_attempted;
    first_polarization_kept += o.first_polarization_kept;
    polarization_success += o.polarization_success;
    return *this;
}

PureState two_copy_state(const HyperPairSpec& spec) {
    const auto first = make_hyper_pair(spec.on_modes({"a1", "a2"}, {"b1", "b2"}));
    const auto second = make_hyper_pair(spec.on_modes({"a3", "a4"}, {"b3", "b4"}));
    return tensor(first, second);
}

Protocol::Protocol(const HyperPairSpec& spec, ProtocolVariant variant, MeasurementModel momentum_readout)
    : spec_(spec), variant_(variant), readout_(momentum_readout) {
    validate(spec_);
    if (variant_ == ProtocolVariant::kPartialTwoStep && (has_cross_terms(spec_.pol) || has_cross_terms(spec_.mom))) {
        throw VariantMismatchError("the partial two-step protocol requires gamma = delta = 0 in both blocks");
    }
    if (variant_ == ProtocolVariant::kArbitraryStaged) readout_ = MeasurementModel::kXQuadrature;
    initial_ = two_copy_state(spec_);
}

TrialRecord Protocol::run_trial(RandomStream& rng, const StageObserver& observer) const {
    SampledChooser chooser{rng};
    TrialRecord result;
    auto leaf = [&](const TrialRecord& r, double) { result = r; };
    Walker<SampledChooser, decltype(leaf)>(*this, chooser, leaf, observer).run();
    return result;
}

ExactProbabilities Protocol::enumerate() const {
    ExhaustiveChooser chooser;
    ExactProbabilities p;
    auto leaf = [&](const TrialRecord& r, double w) {
        p.total += w;
        ++p.leaves;
        if (r.designated_class_hit) p.designated += w;
        if (r.momentum_success) p.momentum_success += w;
        if (r.polarization_attempted) p.polarization_attempted += w;
        if (r.first_polarization_kept) p.first_polarization_kept += w;
        if (r.polarization_success) p.polarization_success += w;
    };
    Walker<ExhaustiveChooser, decltype(leaf)>(*this, chooser, leaf, StageObserver{}).run();
    if (std::abs(p.total - 1.0) > kBranchSumTolerance) {
        throw ProtocolInvariantError("enumerated leaf probabilities do not sum to 1");
    }
    return p;
}

TrialRecord Protocol::run_forced(const std::map<std::string_view, int>& classes,
                                 const StageObserver& observer) const {
    ForcedChooser chooser{classes};
    TrialRecord result;
    auto leaf = [&](const TrialRecord& r, double) { result = r; };
    Walker<ForcedChooser, decltype(leaf)>(*this, chooser, leaf, observer).run();
    return result;
}

TrialRecord run_trial_partial(const HyperPairSpec& spec, RandomStream& rng) {
    return Protocol(spec, ProtocolVariant::kPartialTwoStep).run_trial(rng);
}

TrialRecord run_trial_arbitrary(const HyperPairSpec& spec, RandomStream& rng) {
    return Protocol(spec, ProtocolVariant::kArbitraryStaged).run_trial(rng);
}

double momentum_scale(ProtocolVariant v, MeasurementModel readout) noexcept {
    if (v == ProtocolVariant::kArbitraryStaged) return 2.0 * std::numbers::sqrt2;
    // With X-quadrature readout the designated outcome is the union of both
    // odd classes, which has twice the single-class probability.
    return readout == MeasurementModel::kHomodyne ? 2.0 : std::numbers::sqrt2;
}

double polarization_scale(ProtocolVariant v) noexcept {
    return v == ProtocolVariant::kArbitraryStaged ? 2.0 : std::numbers::sqrt2;
}

namespace {

struct EstimatorInputs {
    IntervalEstimate p_m;
    IntervalEstimate p_m_union;
    IntervalEstimate p_p;
    bool polarization_reached = true;
    std::optional<IntervalEstimate> p_1m;
    std::optional<IntervalEstimate> p_1p;
    std::optional<IntervalEstimate> p_2p;
};

/// Proportion with an unknown denominator: point 0, interval [0, 1].
constexpr IntervalEstimate kUninformative{0.0, 1.0};

ConcurrenceReport assemble(const EstimatorInputs& in, ProtocolVariant variant, MeasurementModel readout,
                           const ConcurrenceOracleValues& oracle) {
    ConcurrenceReport r;
    r.variant = variant;
    r.momentum_readout = variant == ProtocolVariant::kArbitraryStaged ? MeasurementModel::kXQuadrature : readout;
    r.p_m = in.p_m;
    r.p_m_union = in.p_m_union;
    r.p_p = in.p_p;
    r.p_1m = in.p_1m;
    r.p_1p = in.p_1p;
    r.p_2p = in.p_2p;
    r.c_m = sqrt_scaled(in.p_m, momentum_scale(variant, r.momentum_readout));
    r.c_p = sqrt_scaled(in.p_p, polarization_scale(variant));
    r.c_hyper = sum_intervals(r.c_m, r.c_p);
    r.oracle = oracle;

    r.deviation_notes.push_back(
        "C_p is computed from the polarization coefficients (alpha1, beta1, gamma1, delta1); closed forms "
        "printed with momentum subscripts for C_p are read as subscript typos");
    if (variant == ProtocolVariant::kPartialTwoStep) {
        r.c_p_literal = sqrt_scaled(in.p_p, 1.0);
        r.deviation_notes.push_back(
            "C_p uses sqrt(2*P_p) because P_p = 2|alpha1*beta1|^2; the literal rule C_p = sqrt(P_p) is "
            "reported as C_p_literal and equals C_p/sqrt(2)");
        r.deviation_notes.push_back(
            "the even-parity momentum probability is |alpha2|^4 + |beta2|^4 (printed without subscripts)");
    } else {
        r.deviation_notes.push_back(
            "P_m counts only the designated (c1,c4) class, so P_m = P_1m*P_2m = |alpha2*beta2 - gamma2*delta2|^2/2; "
            "the union of both odd classes is reported as P_m_union = 2*P_m");
        r.deviation_notes.push_back(
            "the second polarization check succeeds with probability "
            "|alpha1*beta1 - gamma1*delta1|^2 / (2(|alpha1*beta1|^2 + |gamma1*delta1|^2)), polarization "
            "coefficients rather than the printed momentum ones");
    }
    if (!in.polarization_reached) {
        r.warnings.push_back(
            "no trial reached the polarization stage; P_p and C_p are reported as 0 with an uninformative interval");
    }
    return r;
}

}  // namespace

ConcurrenceReport estimate_from_counts(const TrialCounts& counts, ProtocolVariant variant,
                                       MeasurementModel momentum_readout, const ConcurrenceOracleValues& oracle) {
    if (counts.trials == 0) throw EmptyRecordsError("no trial records to estimate from");
    const bool partial = variant == ProtocolVariant::kPartialTwoStep;
    const auto conditional = [](std::uint64_t k, std::uint64_t n) {
        return n == 0 ? kUninformative : confidence_interval(k, n);
    };
    EstimatorInputs in;
    in.p_m = confidence_interval(counts.designated, counts.trials);
    in.p_m_union = confidence_interval(partial ? counts.polarization_attempted : counts.momentum_success,
                                       counts.trials);
    in.p_p = conditional(counts.polarization_success, counts.polarization_attempted);
    in.polarization_reached = counts.polarization_attempted > 0;
    if (!partial) {
        in.p_1m = confidence_interval(counts.polarization_attempted, counts.trials);
        in.p_1p = conditional(counts.first_polarization_kept, counts.polarization_attempted);
        in.p_2p = conditional(counts.polarization_success, counts.first_polarization_kept);
    }
    auto report = assemble(in, variant, momentum_readout, oracle);
    report.exact = false;
    report.counts = counts;
    return report;
}

ConcurrenceReport estimate_concurrence(std::span<const TrialRecord> records, ProtocolVariant variant,
                                       const ConcurrenceOracleValues& oracle, MeasurementModel momentum_readout) {
    if (records.empty()) throw EmptyRecordsError("no trial records to estimate from");
    TrialCounts counts;
    for (const auto& r : records) {
        if (r.variant != variant) throw VariantMixError("trial records come from different protocol variants");
        counts.add(r);
    }
    return estimate_from_counts(counts, variant, momentum_readout, oracle);
}

ConcurrenceReport estimate_from_probabilities(const ExactProbabilities& probs, ProtocolVariant variant,
                                              MeasurementModel momentum_readout,
                                              const ConcurrenceOracleValues& oracle) {
    const bool partial = variant == ProtocolVariant::kPartialTwoStep;
    const auto exact = [](double p) { return IntervalEstimate{p, 0.0}; };
    const auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    EstimatorInputs in;
    in.p_m = exact(probs.designated);
    in.p_m_union = exact(partial ? probs.polarization_attempted : probs.momentum_success);
    in.p_p = exact(probs.conditional_polarization());
    in.polarization_reached = probs.polarization_attempted > 0.0;
    if (!partial) {
        in.p_1m = exact(probs.polarization_attempted);
        in.p_1p = exact(ratio(probs.first_polarization_kept, probs.polarization_attempted));
        in.p_2p = exact(ratio(probs.polarization_success, probs.first_polarization_kept));
    }
    auto report = assemble(in, variant, momentum_readout, oracle);
    report.exact = true;
    return report;
}

}  // namespace hyperconc
