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

// State files in, reports out.
//
// State file (JSON, UTF-8):
//   {"label": "optional",
//    "polarization": {"alpha": [re, im], "beta": ..., "gamma": ..., "delta": ...},
//    "momentum":     {...same shape...}}
// A plain number is shorthand for [number, 0]. gamma and delta may be
// omitted (zero).
//
// Reports (JSON) carry schema_version, a config echo that reproduces the run,
// results, the analytic oracle block and the deviation notes. Derived numbers
// are printed with 12 significant digits; the echoed coefficients keep full
// precision so a replay is exact.
//
// CSV layout version 1:
//   simulate/enumerate: trial_batch,P_m,P_p,C_m,C_p,C_hyper
//   sweep:              sweep_point,value,P_m,P_p,C_m,C_p,C_hyper

#ifndef HYPERCONC_REPORT_IO_HPP_
#define HYPERCONC_REPORT_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "hyperconc/experiment.hpp"

namespace hyperconc {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kCsvLayoutVersion = 1;
inline constexpr std::string_view kCampaignCsvHeader = "trial_batch,P_m,P_p,C_m,C_p,C_hyper";
inline constexpr std::string_view kSweepCsvHeader = "sweep_point,value,P_m,P_p,C_m,C_p,C_hyper";

struct StateFile {
    HyperPairSpec spec;
    std::string label;
};

/// Throws ParseError (with line or field context) and NormalizationError
/// (with the offending squared norm).
StateFile parse_state_json(std::string_view text);

/// As parse_state_json; IoError when the file cannot be read.
StateFile parse_state_file(const std::string& path);

std::string state_to_json(const StateFile& state);

/// Rounds to 12 significant digits, the precision of every derived number
/// in a report.
double round_sig12(double x);

std::string oracle_report_json(const StateFile& state);

std::string campaign_report_json(std::string_view command, const StateFile& state, const CampaignConfig& cfg,
                                 const CampaignResult& result);

std::string campaign_csv(const CampaignConfig& cfg, const CampaignResult& result);

struct SweepRequest {
    SweepParameter parameter;
    double from = 0.0;
    double to = 1.0;
    std::size_t steps = 11;
};

std::string sweep_report_json(const StateFile& state, const CampaignConfig& base, const SweepRequest& request,
                              const std::vector<SweepPoint>& points);

std::string sweep_csv(const std::vector<SweepPoint>& points);

/// Rebuilds the state and campaign config from a report's config echo.
/// Throws ParseError.
struct ReplayRequest {
    StateFile state;
    CampaignConfig config;
};
ReplayRequest parse_report_config(std::string_view report_text);

}  // namespace hyperconc

#endif  // HYPERCONC_REPORT_IO_HPP_
