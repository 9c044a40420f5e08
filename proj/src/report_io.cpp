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

#include "hyperconc/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperconc/errors.hpp"

namespace hyperconc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kCoefficientNames[] = {"alpha", "beta", "gamma", "delta"};

std::size_t line_of(std::string_view text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

Complex parse_coefficient(const json& value, const std::string& where) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    throw ParseError(where + ": expected a number or a [re, im] pair");
}

CoefficientBlock parse_block(const json& root, const char* key) {
    if (!root.contains(key)) throw ParseError(std::string("missing '") + key + "' block");
    const json& block = root.at(key);
    if (!block.is_object()) throw ParseError(std::string(key) + ": expected an object");
    for (const auto& [name, _] : block.items()) {
        if (std::find_if(std::begin(kCoefficientNames), std::end(kCoefficientNames),
                         [&](const char* n) { return name == n; }) == std::end(kCoefficientNames)) {
            throw ParseError(std::string(key) + "." + name + ": unknown coefficient");
        }
    }
    Complex c[4];
    for (int i = 0; i < 4; ++i) {
        const std::string where = std::string(key) + "." + kCoefficientNames[i];
        if (block.contains(kCoefficientNames[i])) {
            c[i] = parse_coefficient(block.at(kCoefficientNames[i]), where);
        } else if (i < 2) {
            throw ParseError(where + ": missing");
        }
    }
    return {c[0], c[1], c[2], c[3]};
}

ordered_json block_json(const CoefficientBlock& b) {
    ordered_json out = ordered_json::object();
    const auto coeffs = b.as_array();
    for (int i = 0; i < 4; ++i) out[kCoefficientNames[i]] = {coeffs[i].real(), coeffs[i].imag()};
    return out;
}

ordered_json state_json(const StateFile& s) {
    ordered_json out = ordered_json::object();
    if (!s.label.empty()) out["label"] = s.label;
    out["polarization"] = block_json(s.spec.pol);
    out["momentum"] = block_json(s.spec.mom);
    return out;
}

ordered_json interval_json(const IntervalEstimate& e) {
    return {{"point", round_sig12(e.point)},
            {"half_width_3sigma", round_sig12(e.half_width_3sigma)},
            {"lower", round_sig12(e.lower())},
            {"upper", round_sig12(e.upper())}};
}

ordered_json interval_json(const ConcurrenceInterval& c) {
    return {{"point", round_sig12(c.point)}, {"lower", round_sig12(c.lower)}, {"upper", round_sig12(c.upper)}};
}

ordered_json oracle_json(const ConcurrenceOracleValues& o) {
    return {{"C_pol", round_sig12(o.c_pol)}, {"C_mom", round_sig12(o.c_mom)}, {"C_hyper", round_sig12(o.c_hyper)}};
}

ordered_json results_json(const ConcurrenceReport& r) {
    ordered_json out = ordered_json::object();
    out["exact"] = r.exact;
    if (!r.exact) {
        out["counts"] = {{"trials", r.counts.trials},
                         {"designated", r.counts.designated},
                         {"momentum_success", r.counts.momentum_success},
                         {"polarization_attempted", r.counts.polarization_attempted},
                         {"first_polarization_kept", r.counts.first_polarization_kept},
                         {"polarization_success", r.counts.polarization_success}};
    }
    out["P_m"] = interval_json(r.p_m);
    out["P_m_union"] = interval_json(r.p_m_union);
    out["P_p"] = interval_json(r.p_p);
    if (r.p_1m) out["P_1m"] = interval_json(*r.p_1m);
    if (r.p_1p) out["P_1p"] = interval_json(*r.p_1p);
    if (r.p_2p) out["P_2p"] = interval_json(*r.p_2p);
    out["C_m"] = interval_json(r.c_m);
    out["C_p"] = interval_json(r.c_p);
    out["C_hyper"] = interval_json(r.c_hyper);
    if (r.c_p_literal) {
        ordered_json lit = interval_json(*r.c_p_literal);
        lit["flag"] = "literal sqrt(P_p) rule, not consistent with the analytic concurrence";
        out["C_p_literal"] = std::move(lit);
    }
    return out;
}

ordered_json config_json(const StateFile& state, const CampaignConfig& cfg) {
    ordered_json out = ordered_json::object();
    out["state"] = state_json(state);
    out["variant"] = to_string(cfg.variant);
    out["mode"] = to_string(cfg.mode);
    if (cfg.mode == CampaignMode::kMonteCarlo) {
        out["trials"] = cfg.trials;
        out["seed"] = cfg.master_seed;
        out["batch_size"] = cfg.batch_size;
    } else {
        out["trials"] = nullptr;
        out["seed"] = nullptr;
        out["batch_size"] = nullptr;
    }
    out["model"] = cfg.variant == ProtocolVariant::kPartialTwoStep ? to_string(cfg.momentum_readout)
                                                                   : to_string(MeasurementModel::kXQuadrature);
    return out;
}

std::string format_csv_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string csv_values(const ConcurrenceReport& r) {
    return format_csv_number(r.p_m.point) + "," + format_csv_number(r.p_p.point) + "," +
           format_csv_number(r.c_m.point) + "," + format_csv_number(r.c_p.point) + "," +
           format_csv_number(r.c_hyper.point);
}

}  // namespace

double round_sig12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

StateFile parse_state_json(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("state file line " + std::to_string(line_of(text, e.byte)) + ": " + e.what());
    }
    if (!root.is_object()) throw ParseError("state file: top level must be an object");
    for (const auto& [key, _] : root.items()) {
        if (key != "label" && key != "polarization" && key != "momentum") {
            throw ParseError("state file: unknown key '" + key + "'");
        }
    }
    StateFile out;
    if (root.contains("label")) {
        if (!root["label"].is_string()) throw ParseError("label: expected a string");
        out.label = root["label"].get<std::string>();
    }
    out.spec.pol = parse_block(root, "polarization");
    out.spec.mom = parse_block(root, "momentum");
    validate(out.spec);
    return out;
}

StateFile parse_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open state file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_state_json(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string state_to_json(const StateFile& state) { return state_json(state).dump(2); }

std::string oracle_report_json(const StateFile& state) {
    ordered_json out = ordered_json::object();
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "oracle";
    out["config"] = {{"state", state_json(state)}};
    out["oracle"] = oracle_json(hyper_concurrence(state.spec));
    out["paper_deviation_notes"] = ordered_json::array();
    out["warnings"] = ordered_json::array();
    return out.dump(2) + "\n";
}

std::string campaign_report_json(std::string_view command, const StateFile& state, const CampaignConfig& cfg,
                                 const CampaignResult& result) {
    ordered_json out = ordered_json::object();
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = std::string(command);
    out["config"] = config_json(state, cfg);
    out["results"] = results_json(result.report);
    out["oracle"] = oracle_json(result.report.oracle);
    out["paper_deviation_notes"] = result.report.deviation_notes;
    out["warnings"] = result.report.warnings;
    return out.dump(2) + "\n";
}

std::string campaign_csv(const CampaignConfig& cfg, const CampaignResult& result) {
    std::string out(kCampaignCsvHeader);
    out += "\n";
    if (result.batches.empty()) {
        out += "0," + csv_values(result.report) + "\n";
        return out;
    }
    for (std::size_t i = 0; i < result.batches.size(); ++i) {
        const auto r = estimate_from_counts(result.batches[i], cfg.variant, result.report.momentum_readout,
                                            result.report.oracle);
        out += std::to_string(i) + "," + csv_values(r) + "\n";
    }
    return out;
}

std::string sweep_report_json(const StateFile& state, const CampaignConfig& base, const SweepRequest& request,
                              const std::vector<SweepPoint>& points) {
    ordered_json out = ordered_json::object();
    out["schema_version"] = kReportSchemaVersion;
    out["command"] = "sweep";
    ordered_json config = config_json(state, base);
    config["sweep"] = {{"parameter", request.parameter.name()},
                       {"from", request.from},
                       {"to", request.to},
                       {"steps", request.steps},
                       {"renormalization", std::string(kSweepRenormalizationRule)}};
    out["config"] = std::move(config);
    ordered_json rows = ordered_json::array();
    std::vector<std::string> notes;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const auto& p = points[i];
        rows.push_back({{"sweep_point", i},
                        {"value", p.value},
                        {"state", state_json(StateFile{p.spec, state.label})},
                        {"results", results_json(p.report)},
                        {"oracle", oracle_json(p.report.oracle)},
                        {"warnings", p.report.warnings}});
        if (notes.empty()) notes = p.report.deviation_notes;
    }
    out["points"] = std::move(rows);
    out["paper_deviation_notes"] = notes;
    out["warnings"] = ordered_json::array();
    return out.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
    std::string out(kSweepCsvHeader);
    out += "\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        out += std::to_string(i) + "," + format_csv_number(points[i].value) + "," + csv_values(points[i].report) + "\n";
    }
    return out;
}

ReplayRequest parse_report_config(std::string_view report_text) {
    json root;
    try {
        root = json::parse(report_text.begin(), report_text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("report line " + std::to_string(line_of(report_text, e.byte)) + ": " + e.what());
    }
    if (!root.is_object() || !root.contains("config") || !root["config"].is_object()) {
        throw ParseError("report has no config block");
    }
    const json& cfg = root["config"];
    if (!cfg.contains("state")) throw ParseError("report config has no state");
    ReplayRequest out;
    out.state = parse_state_json(cfg["state"].dump());
    out.config.spec = out.state.spec;
    try {
        const auto variant = cfg.at("variant").get<std::string>();
        if (variant == "partial") {
            out.config.variant = ProtocolVariant::kPartialTwoStep;
        } else if (variant == "arbitrary") {
            out.config.variant = ProtocolVariant::kArbitraryStaged;
        } else {
            throw ParseError("config.variant: unknown value '" + variant + "'");
        }
        const auto mode = cfg.at("mode").get<std::string>();
        if (mode == "monte_carlo") {
            out.config.mode = CampaignMode::kMonteCarlo;
            out.config.trials = cfg.at("trials").get<std::uint64_t>();
            out.config.master_seed = cfg.at("seed").get<std::uint64_t>();
            out.config.batch_size = cfg.at("batch_size").get<std::uint64_t>();
        } else if (mode == "enumerate") {
            out.config.mode = CampaignMode::kEnumerate;
        } else {
            throw ParseError("config.mode: unknown value '" + mode + "'");
        }
        const auto model = cfg.at("model").get<std::string>();
        if (model == "homodyne") {
            out.config.momentum_readout = MeasurementModel::kHomodyne;
        } else if (model == "xquad") {
            out.config.momentum_readout = MeasurementModel::kXQuadrature;
        } else {
            throw ParseError("config.model: unknown value '" + model + "'");
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("report config: ") + e.what());
    }
    return out;
}

}  // namespace hyperconc
