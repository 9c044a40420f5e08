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

#include "hyperconc/hyperconc.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <string_view>

#include "hyperconc/concurrence.hpp"
#include "hyperconc/errors.hpp"
#include "hyperconc/experiment.hpp"
#include "hyperconc/report_io.hpp"

struct hc_spec {
    hyperconc::StateFile state;
};

struct hc_report {
    hyperconc::StateFile state;
    hyperconc::CampaignConfig config;
    hyperconc::CampaignResult result;
};

struct hc_sweep {
    hyperconc::StateFile state;
    hyperconc::CampaignConfig config;
    hyperconc::SweepRequest request;
    std::vector<hyperconc::SweepPoint> points;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hc_status guarded(F&& body) noexcept {
    try {
        g_last_error.clear();
        body();
        return HC_OK;
    } catch (const hyperconc::Error& e) {
        g_last_error = e.what();
        return static_cast<hc_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return HC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return HC_ERR_INTERNAL;
    }
}

void require(const void* p, const char* what) {
    if (p == nullptr) throw hyperconc::InvalidArgumentError(std::string(what) + " must not be null");
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

hyperconc::CoefficientBlock block_from(const double c[8]) {
    return {{c[0], c[1]}, {c[2], c[3]}, {c[4], c[5]}, {c[6], c[7]}};
}

void block_to(const hyperconc::CoefficientBlock& b, double c[8]) {
    const auto a = b.as_array();
    for (int i = 0; i < 4; ++i) {
        c[2 * i] = a[i].real();
        c[2 * i + 1] = a[i].imag();
    }
}

hyperconc::CampaignConfig to_config(const hyperconc::HyperPairSpec& spec, const hc_campaign_config& c) {
    hyperconc::CampaignConfig cfg;
    cfg.spec = spec;
    switch (c.variant) {
        case HC_VARIANT_PARTIAL: cfg.variant = hyperconc::ProtocolVariant::kPartialTwoStep; break;
        case HC_VARIANT_ARBITRARY: cfg.variant = hyperconc::ProtocolVariant::kArbitraryStaged; break;
        default: throw hyperconc::InvalidArgumentError("unknown protocol variant");
    }
    switch (c.mode) {
        case HC_MODE_ENUMERATE: cfg.mode = hyperconc::CampaignMode::kEnumerate; break;
        case HC_MODE_MONTE_CARLO: cfg.mode = hyperconc::CampaignMode::kMonteCarlo; break;
        default: throw hyperconc::InvalidArgumentError("unknown campaign mode");
    }
    switch (c.readout) {
        case HC_READOUT_HOMODYNE: cfg.momentum_readout = hyperconc::MeasurementModel::kHomodyne; break;
        case HC_READOUT_XQUAD: cfg.momentum_readout = hyperconc::MeasurementModel::kXQuadrature; break;
        default: throw hyperconc::InvalidArgumentError("unknown readout model");
    }
    cfg.trials = c.trials;
    cfg.master_seed = c.seed;
    cfg.batch_size = c.batch_size;
    cfg.jobs = c.jobs;
    return cfg;
}

double lookup(const hyperconc::ConcurrenceReport& r, std::string_view name) {
    std::string_view base = name;
    int end = 0;  // 0 point, -1 lower, +1 upper
    if (auto dot = name.rfind('.'); dot != std::string_view::npos) {
        const auto suffix = name.substr(dot + 1);
        if (suffix == "lower") {
            end = -1;
        } else if (suffix == "upper") {
            end = 1;
        } else {
            throw hyperconc::InvalidArgumentError("unknown report field suffix '" + std::string(suffix) + "'");
        }
        base = name.substr(0, dot);
    }
    const auto pick_p = [&](const hyperconc::IntervalEstimate& e) {
        return end == 0 ? e.point : (end < 0 ? e.lower() : e.upper());
    };
    const auto pick_c = [&](const hyperconc::ConcurrenceInterval& c) {
        return end == 0 ? c.point : (end < 0 ? c.lower : c.upper);
    };
    if (base == "P_m") return pick_p(r.p_m);
    if (base == "P_m_union") return pick_p(r.p_m_union);
    if (base == "P_p") return pick_p(r.p_p);
    if (base == "C_m") return pick_c(r.c_m);
    if (base == "C_p") return pick_c(r.c_p);
    if (base == "C_hyper") return pick_c(r.c_hyper);
    if (base == "C_p_literal") {
        if (!r.c_p_literal) throw hyperconc::InvalidArgumentError("C_p_literal exists only for the partial variant");
        return pick_c(*r.c_p_literal);
    }
    if (end == 0) {
        if (base == "oracle_C_pol") return r.oracle.c_pol;
        if (base == "oracle_C_mom") return r.oracle.c_mom;
        if (base == "oracle_C_hyper") return r.oracle.c_hyper;
    }
    throw hyperconc::InvalidArgumentError("unknown report field '" + std::string(name) + "'");
}

}  // namespace

extern "C" {

const char* hc_version(void) { return "1.0.0"; }

const char* hc_status_name(hc_status status) {
    if (status == HC_OK) return "OK";
    if (status == HC_ERR_INTERNAL) return "InternalError";
    return hyperconc::error_code_name(static_cast<hyperconc::ErrorCode>(status));
}

const char* hc_last_error(void) { return g_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

void hc_campaign_config_init(hc_campaign_config* cfg) {
    if (cfg == nullptr) return;
    cfg->variant = HC_VARIANT_ARBITRARY;
    cfg->mode = HC_MODE_MONTE_CARLO;
    cfg->readout = HC_READOUT_HOMODYNE;
    cfg->trials = 100000;
    cfg->seed = 0;
    cfg->batch_size = 10000;
    cfg->jobs = 1;
}

hc_status hc_spec_from_file(const char* path, hc_spec** out) {
    return guarded([&] {
        require(path, "path");
        require(out, "out");
        *out = new hc_spec{hyperconc::parse_state_file(path)};
    });
}

hc_status hc_spec_from_json(const char* json, hc_spec** out) {
    return guarded([&] {
        require(json, "json");
        require(out, "out");
        *out = new hc_spec{hyperconc::parse_state_json(json)};
    });
}

hc_status hc_spec_from_coefficients(const double pol[8], const double mom[8], hc_spec** out) {
    return guarded([&] {
        require(pol, "pol");
        require(mom, "mom");
        require(out, "out");
        hyperconc::StateFile s;
        s.spec.pol = block_from(pol);
        s.spec.mom = block_from(mom);
        hyperconc::validate(s.spec);
        *out = new hc_spec{std::move(s)};
    });
}

hc_status hc_spec_get_coefficients(const hc_spec* spec, double pol[8], double mom[8]) {
    return guarded([&] {
        require(spec, "spec");
        require(pol, "pol");
        require(mom, "mom");
        block_to(spec->state.spec.pol, pol);
        block_to(spec->state.spec.mom, mom);
    });
}

hc_status hc_spec_with_coefficient(const hc_spec* spec, const char* parameter, double value, hc_spec** out) {
    return guarded([&] {
        require(spec, "spec");
        require(parameter, "parameter");
        require(out, "out");
        hyperconc::StateFile s = spec->state;
        s.spec = hyperconc::with_coefficient(s.spec, hyperconc::SweepParameter::parse(parameter), value);
        *out = new hc_spec{std::move(s)};
    });
}

hc_status hc_spec_to_json(const hc_spec* spec, char** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = copy_string(hyperconc::state_to_json(spec->state));
    });
}

void hc_spec_free(hc_spec* spec) { delete spec; }

hc_status hc_oracle(const hc_spec* spec, hc_oracle_values* out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        const auto v = hyperconc::hyper_concurrence(spec->state.spec);
        *out = {v.c_pol, v.c_mom, v.c_hyper};
    });
}

hc_status hc_oracle_report_json(const hc_spec* spec, char** out) {
    return guarded([&] {
        require(spec, "spec");
        require(out, "out");
        *out = copy_string(hyperconc::oracle_report_json(spec->state));
    });
}

hc_status hc_run(const hc_spec* spec, const hc_campaign_config* cfg, hc_report** out) {
    return guarded([&] {
        require(spec, "spec");
        require(cfg, "cfg");
        require(out, "out");
        auto config = to_config(spec->state.spec, *cfg);
        auto result = hyperconc::run_campaign(config);
        *out = new hc_report{spec->state, std::move(config), std::move(result)};
    });
}

hc_status hc_replay(const char* report_json, uint32_t jobs, hc_report** out) {
    return guarded([&] {
        require(report_json, "report_json");
        require(out, "out");
        auto request = hyperconc::parse_report_config(report_json);
        request.config.jobs = jobs == 0 ? 1 : jobs;
        auto result = hyperconc::run_campaign(request.config);
        *out = new hc_report{std::move(request.state), std::move(request.config), std::move(result)};
    });
}

hc_status hc_report_json(const hc_report* report, const char* command, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        const std::string cmd = command != nullptr
                                    ? command
                                    : (report->config.mode == hyperconc::CampaignMode::kEnumerate ? "enumerate"
                                                                                                 : "simulate");
        *out = copy_string(hyperconc::campaign_report_json(cmd, report->state, report->config, report->result));
    });
}

hc_status hc_report_csv(const hc_report* report, char** out) {
    return guarded([&] {
        require(report, "report");
        require(out, "out");
        *out = copy_string(hyperconc::campaign_csv(report->config, report->result));
    });
}

hc_status hc_report_get(const hc_report* report, const char* name, double* out) {
    return guarded([&] {
        require(report, "report");
        require(name, "name");
        require(out, "out");
        *out = lookup(report->result.report, name);
    });
}

void hc_report_free(hc_report* report) { delete report; }

hc_status hc_sweep_run(const hc_spec* spec, const hc_campaign_config* cfg, const char* parameter, double from,
                       double to, uint32_t steps, hc_sweep** out) {
    return guarded([&] {
        require(spec, "spec");
        require(cfg, "cfg");
        require(parameter, "parameter");
        require(out, "out");
        auto config = to_config(spec->state.spec, *cfg);
        hyperconc::SweepRequest request{hyperconc::SweepParameter::parse(parameter), from, to, steps};
        auto points = hyperconc::run_sweep(config, request.parameter, from, to, steps);
        *out = new hc_sweep{spec->state, std::move(config), request, std::move(points)};
    });
}

hc_status hc_sweep_json(const hc_sweep* sweep, char** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = copy_string(hyperconc::sweep_report_json(sweep->state, sweep->config, sweep->request, sweep->points));
    });
}

hc_status hc_sweep_csv(const hc_sweep* sweep, char** out) {
    return guarded([&] {
        require(sweep, "sweep");
        require(out, "out");
        *out = copy_string(hyperconc::sweep_csv(sweep->points));
    });
}

size_t hc_sweep_size(const hc_sweep* sweep) { return sweep == nullptr ? 0 : sweep->points.size(); }

void hc_sweep_free(hc_sweep* sweep) { delete sweep; }

}  // extern "C"
