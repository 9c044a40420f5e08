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


// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All tolerances, seeds and time limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "expected_states.hpp"
#include "hyperconc/experiment.hpp"
#include "hyperconc/hyperconc.h"
#include "hyperconc/protocol.hpp"
#include "random_specs.hpp"

namespace {

using namespace hyperconc;

constexpr double kClosedFormTol = 1e-12;
constexpr double kFidelityTol = 1e-12;
constexpr double kNormTol = 1e-12;
constexpr double kTraceDistanceTol = 1e-12;
constexpr std::uint64_t kSpecSeed = 20260101;

struct Verdict {
    bool pass = true;
    std::string detail;
};

double sq(Complex z) { return std::norm(z); }

class Timer {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Verdict within_time(Verdict v, double took, double limit) {
    v.detail += fmt(", %.2f s", took) + fmt(" (limit %.0f s)", limit);
    if (took >= limit) v.pass = false;
    return v;
}

// 1
Verdict partial_closed_forms() {
    const Timer t;
    double worst = 0.0;
    for (const auto& spec : hctest::partial_specs(1000, kSpecSeed)) {
        const auto p = Protocol(spec, ProtocolVariant::kPartialTwoStep).enumerate();
        worst = std::max(worst, std::abs(p.designated - sq(spec.mom.alpha * spec.mom.beta)));
        worst = std::max(worst, std::abs(p.conditional_polarization() - 2.0 * sq(spec.pol.alpha * spec.pol.beta)));
    }
    Verdict v{worst <= kClosedFormTol, "1000 partial specs, max |err| " + fmt("%.2e", worst) + " (tol 1e-12)"};
    return within_time(v, t.seconds(), 5.0);
}

// 2
Verdict arbitrary_closed_forms() {
    const Timer t;
    double worst = 0.0;
    for (const auto& spec : hctest::general_specs(1000, kSpecSeed)) {
        const auto p = Protocol(spec, ProtocolVariant::kArbitraryStaged).enumerate();
        const auto& m = spec.mom;
        const auto& q = spec.pol;
        const double p1m = 2.0 * (sq(m.alpha * m.beta) + sq(m.gamma * m.delta));
        const double pm = 0.5 * sq(m.alpha * m.beta - m.gamma * m.delta);
        const double p1p = 2.0 * (sq(q.alpha * q.beta) + sq(q.gamma * q.delta));
        const double pp = sq(q.alpha * q.beta - q.gamma * q.delta);
        const double got_p1p = p.polarization_attempted > 0 ? p.first_polarization_kept / p.polarization_attempted : 0;
        worst = std::max({worst, std::abs(p.polarization_attempted - p1m), std::abs(p.designated - pm),
                          std::abs(got_p1p - p1p), std::abs(p.conditional_polarization() - pp)});
    }
    Verdict v{worst <= kClosedFormTol, "1000 general specs, P_1m/P_m/P_1p/P_p max |err| " + fmt("%.2e", worst) +
                                           " (tol 1e-12)"};
    return within_time(v, t.seconds(), 30.0);
}

// 3
Verdict estimator_oracle_agreement() {
    double worst = 0.0;
    const auto check = [&](const HyperPairSpec& spec, ProtocolVariant variant) {
        const Protocol proto(spec, variant);
        const auto r = estimate_from_probabilities(proto.enumerate(), variant, proto.momentum_readout(),
                                                   hyper_concurrence(spec));
        const double c_pol = concurrence_sigma_y(to_two_qubit(spec.pol));
        const double c_mom = concurrence_sigma_y(to_two_qubit(spec.mom));
        worst = std::max({worst, std::abs(r.c_m.point - c_mom), std::abs(r.c_p.point - c_pol)});
    };
    for (const auto& spec : hctest::partial_specs(1000, kSpecSeed + 1)) check(spec, ProtocolVariant::kPartialTwoStep);
    for (const auto& spec : hctest::general_specs(1000, kSpecSeed + 1)) check(spec, ProtocolVariant::kArbitraryStaged);
    return {worst <= kClosedFormTol,
            "1000 partial + 1000 general specs, max |C_est - C_sigma_y| " + fmt("%.2e", worst) + " (tol 1e-12)"};
}

// 4
Verdict literal_rule_deviation() {
    double worst = 0.0;
    int checked = 0;
    bool noted = true;
    for (const auto& spec : hctest::partial_specs(1000, kSpecSeed + 2)) {
        const Protocol proto(spec, ProtocolVariant::kPartialTwoStep);
        const auto r = estimate_from_probabilities(proto.enumerate(), ProtocolVariant::kPartialTwoStep,
                                                   proto.momentum_readout(), hyper_concurrence(spec));
        const bool has_note = std::any_of(r.deviation_notes.begin(), r.deviation_notes.end(), [](const auto& n) {
            return n.find("C_p_literal") != std::string::npos;
        });
        noted = noted && has_note && r.c_p_literal.has_value();
        if (r.oracle.c_pol <= 1e-9 || !r.c_p_literal) continue;
        ++checked;
        worst = std::max(worst, std::abs(r.c_p_literal->point / r.oracle.c_pol - 1.0 / std::sqrt(2.0)));
    }
    return {noted && checked > 0 && worst <= kClosedFormTol,
            std::to_string(checked) + " specs with C_p > 0, max |literal/oracle - 1/sqrt2| " + fmt("%.2e", worst) +
                " (tol 1e-12), deviation note " + (noted ? "present" : "MISSING")};
}

// 5
Verdict maximal_case() {
    const Timer t;
    HyperPairSpec bell;
    bell.pol = hctest::bell_block();
    bell.mom = hctest::bell_block();
    bool ok = std::abs(hyper_concurrence(bell).c_hyper - 2.0) <= kClosedFormTol;
    std::string detail = fmt("oracle %.12g", hyper_concurrence(bell).c_hyper);
    for (auto variant : {ProtocolVariant::kPartialTwoStep, ProtocolVariant::kArbitraryStaged}) {
        CampaignConfig cfg;
        cfg.spec = bell;
        cfg.variant = variant;
        cfg.mode = CampaignMode::kEnumerate;
        const double exact = run_enumeration(cfg).c_hyper.point;
        cfg.mode = CampaignMode::kMonteCarlo;
        cfg.trials = 100000;
        cfg.master_seed = 5;
        const auto mc = run_monte_carlo(cfg).c_hyper;
        ok = ok && std::abs(exact - 2.0) <= kClosedFormTol && mc.lower <= 2.0 && 2.0 <= mc.upper;
        detail += std::string(", ") + to_string(variant) + fmt(": enum %.12g", exact) +
                  fmt(", MC %.4f", mc.point) + fmt(" [%.4f,", mc.lower) + fmt(" %.4f]", mc.upper);
    }
    return within_time({ok, detail}, t.seconds(), 10.0);
}

// 6
Verdict statistical_consistency() {
    const Timer t;
    int inside = 0;
    const auto specs = hctest::general_specs(20, kSpecSeed + 3);
    for (std::size_t i = 0; i < specs.size(); ++i) {
        CampaignConfig cfg;
        cfg.spec = specs[i];
        cfg.variant = ProtocolVariant::kArbitraryStaged;
        cfg.mode = CampaignMode::kEnumerate;
        const double exact = run_enumeration(cfg).c_hyper.point;
        cfg.mode = CampaignMode::kMonteCarlo;
        cfg.trials = 100000;
        cfg.master_seed = 1000 + i;
        cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
        const auto mc = run_monte_carlo(cfg).c_hyper;
        if (mc.lower <= exact && exact <= mc.upper) ++inside;
    }
    return within_time({inside >= 19, std::to_string(inside) + "/20 C_hyper intervals cover the enumeration value (need 19)"},
                       t.seconds(), 120.0);
}

// 7
Verdict physics_invariants() {
    double worst_norm = 0.0, worst_idem = 0.0, worst_dof = 0.0;
    int states = 0;
    const std::size_t all_slots[] = {0, 1, 2, 3};
    const auto momentum_stage = [](std::string_view s) {
        return s == stage::kSpatialAlice || s == stage::kSpatialBob || s == stage::kBobBeamSplitters ||
               s == stage::kBobMode || s == stage::kAliceMode;
    };
    const auto run_checks = [&](const HyperPairSpec& spec, ProtocolVariant variant, MeasurementModel readout,
                                std::uint64_t stream) {
        ++states;
        const Protocol proto(spec, variant, readout);
        const auto pol_before = reduced_density(proto.initial_state(), all_slots, Observable::kPolarization);
        bool momentum_phase = true;
        RandomStream rng(kSpecSeed + 4, stream);
        proto.run_trial(rng, [&](const StageSnapshot& s) {
            worst_norm = std::max(worst_norm, std::abs(norm(s.state) - 1.0));
            if (!momentum_stage(s.stage)) momentum_phase = false;
            if (momentum_phase) {
                const auto after = reduced_density(s.state, all_slots, Observable::kPolarization);
                worst_dof = std::max(worst_dof, trace_distance(pol_before, after));
            }
        });
        // idempotence on the couplings the protocols use
        const auto& s0 = proto.initial_state();
        for (const auto& c : {KerrCoupling::spatial_parity("a1", "a3"), KerrCoupling::spatial_parity("b1", "b3"),
                              KerrCoupling::polarization_parity("a1", "a3")}) {
            for (auto m : {MeasurementModel::kHomodyne, MeasurementModel::kXQuadrature}) {
                for (const auto& e : outcome_distribution(s0, c, m)) {
                    const auto once = project(s0, c, m, e.observed_class);
                    const auto twice = project(once.posterior, c, m, e.observed_class);
                    worst_norm = std::max(worst_norm, std::abs(norm(once.posterior) - 1.0));
                    worst_idem = std::max({worst_idem, std::abs(twice.probability - 1.0),
                                           1.0 - fidelity_up_to_phase(once.posterior, twice.posterior)});
                }
            }
        }
    };
    std::uint64_t stream = 0;
    for (const auto& spec : hctest::general_specs(200, kSpecSeed + 4)) {
        for (int k = 0; k < 3; ++k) run_checks(spec, ProtocolVariant::kArbitraryStaged, MeasurementModel::kXQuadrature, stream++);
    }
    for (const auto& spec : hctest::partial_specs(100, kSpecSeed + 4)) {
        run_checks(spec, ProtocolVariant::kPartialTwoStep, MeasurementModel::kHomodyne, stream++);
        run_checks(spec, ProtocolVariant::kPartialTwoStep, MeasurementModel::kXQuadrature, stream++);
    }
    const bool ok = worst_norm <= kNormTol && worst_idem <= kNormTol && worst_dof <= kTraceDistanceTol;
    return {ok, std::to_string(states) + " runs: norm dev " + fmt("%.2e", worst_norm) + ", idempotence dev " +
                    fmt("%.2e", worst_idem) + ", polarization trace distance " + fmt("%.2e", worst_dof) +
                    " (tol 1e-12 each)"};
}

// 8
Verdict intermediate_states() {
    double worst = 0.0;
    int checks = 0;
    const auto capture = [](const Protocol& proto, const std::map<std::string_view, int>& forced,
                            std::string_view at) {
        std::optional<PureState> seen;
        proto.run_forced(forced, [&](const StageSnapshot& s) {
            if (s.stage == at) seen = s.state;
        });
        return seen;
    };
    const auto score = [&](const std::optional<PureState>& got, auto&& expected_of) {
        ++checks;
        if (!got) {
            worst = 1.0;
            return;
        }
        worst = std::max(worst, std::abs(1.0 - fidelity_up_to_phase(*got, expected_of(hctest::labels_of(*got)))));
    };
    for (const auto& spec : hctest::partial_specs(50, kSpecSeed + 5)) {
        const Protocol proto(spec, ProtocolVariant::kPartialTwoStep);
        score(capture(proto, {{stage::kSpatialAlice, 1}, {stage::kSpatialBob, 1}}, stage::kSpatialBob),
              [&](const auto& modes) { return hctest::odd_momentum_branch(spec, modes); });
        score(capture(proto, {{stage::kSpatialAlice, 0}, {stage::kSpatialBob, 0}}, stage::kSpatialBob),
              [&](const auto& modes) { return hctest::even_momentum_branch(spec, modes); });
    }
    const std::map<std::string_view, int> path{{stage::kSpatialAlice, 1},      {stage::kSpatialBob, 1},
                                               {stage::kBobMode, 1},           {stage::kAliceMode, 1},
                                               {stage::kPolarizationAlice, 1}, {stage::kPolarizationBob, 1},
                                               {stage::kPolarizationAliceSecond, 1}};
    for (const auto& spec : hctest::general_specs(50, kSpecSeed + 5)) {
        const Protocol proto(spec, ProtocolVariant::kArbitraryStaged);
        score(capture(proto, path, stage::kBobMode),
              [&](const auto& modes) { return hctest::designated_mode_branch(spec, modes); });
        score(capture(proto, path, stage::kPolarizationAliceSecond),
              [&](const auto& modes) { return hctest::polarization_singlet_pair(modes); });
    }
    return {worst <= kFidelityTol,
            std::to_string(checks) + " forced runs (odd and even momentum branches, designated mode branch, final "
                                     "polarization pair), max |1 - F| " + fmt("%.2e", worst) + " (tol 1e-12)"};
}

// 9
Verdict determinism() {
    std::string reference;
    bool same = true;
    const auto general = hctest::general_specs(1, kSpecSeed + 6).front();
    double pol[8], mom[8];
    const auto flatten = [](const CoefficientBlock& b, double* out) {
        const Complex c[4] = {b.alpha, b.beta, b.gamma, b.delta};
        for (int i = 0; i < 4; ++i) {
            out[2 * i] = c[i].real();
            out[2 * i + 1] = c[i].imag();
        }
    };
    flatten(general.pol, pol);
    flatten(general.mom, mom);
    hc_spec* spec = nullptr;
    bool ok = hc_spec_from_coefficients(pol, mom, &spec) == HC_OK;
    for (std::uint32_t jobs : {1u, 4u, 8u}) {
        if (!ok) break;
        hc_campaign_config cfg;
        hc_campaign_config_init(&cfg);
        cfg.trials = 100000;
        cfg.seed = 9;
        cfg.jobs = jobs;
        hc_report* report = nullptr;
        char* json = nullptr;
        ok = hc_run(spec, &cfg, &report) == HC_OK && hc_report_json(report, "simulate", &json) == HC_OK;
        if (ok) {
            if (reference.empty()) {
                reference = json;
            } else {
                same = same && reference == json;
            }
        }
        hc_string_free(json);
        hc_report_free(report);
    }
    hc_spec_free(spec);
    return {ok && same, std::string("report bytes across jobs {1, 4, 8}: ") + (ok ? (same ? "identical" : "DIFFER") : "run failed")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "closed forms, partial two-step protocol", partial_closed_forms},
        {2, "closed forms, arbitrary staged protocol", arbitrary_closed_forms},
        {3, "estimators agree with the sigma_y oracle", estimator_oracle_agreement},
        {4, "literal sqrt(P_p) rule flagged and off by 1/sqrt2", literal_rule_deviation},
        {5, "Bell x Bell gives C_hyper = 2", maximal_case},
        {6, "Monte Carlo consistent with enumeration", statistical_consistency},
        {7, "physics invariants", physics_invariants},
        {8, "intermediate states", intermediate_states},
        {9, "determinism across worker counts", determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %d %s: %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str());
        std::fflush(stdout);
        failed += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
