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

// hyperconc: command-line front end over the C API.
//
//   hyperconc oracle    --state s.json
//   hyperconc enumerate --state s.json [--variant V] [--model M] [--csv out.csv]
//   hyperconc simulate  --state s.json [--variant V] [--model M] [--trials N] [--seed S]
//                       [--batch-size B] [--jobs J] [--csv out.csv]
//   hyperconc simulate  --replay report.json [--jobs J] [--csv out.csv]
//   hyperconc sweep     --state s.json --param pol.alpha --from A --to B --steps K
//                       [--exact] [...simulate flags]
//
// Exit status: 0 ok, 2 usage, 3 parse/validation, 4 runtime domain error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>

#include "hyperconc/hyperconc.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitRuntime = 4;

struct Failure {
    int exit_code;
};

int exit_code_for(hc_status s) {
    switch (s) {
        case HC_OK:
            return kExitOk;
        case HC_ERR_NORMALIZATION:
        case HC_ERR_PARSE:
        case HC_ERR_IO:
        case HC_ERR_INVALID_ARGUMENT:
        case HC_ERR_VARIANT_MISMATCH:
            return kExitValidation;
        default:
            return kExitRuntime;
    }
}

void check(hc_status s) {
    if (s == HC_OK) return;
    std::cerr << "hyperconc: " << hc_status_name(s) << ": " << hc_last_error() << '\n';
    throw Failure{exit_code_for(s)};
}

struct SpecDeleter {
    void operator()(hc_spec* p) const { hc_spec_free(p); }
};
struct ReportDeleter {
    void operator()(hc_report* p) const { hc_report_free(p); }
};
struct SweepDeleter {
    void operator()(hc_sweep* p) const { hc_sweep_free(p); }
};
using SpecPtr = std::unique_ptr<hc_spec, SpecDeleter>;
using ReportPtr = std::unique_ptr<hc_report, ReportDeleter>;
using SweepPtr = std::unique_ptr<hc_sweep, SweepDeleter>;

std::string take(char* s) {
    std::string out(s);
    hc_string_free(s);
    return out;
}

void emit_json(const std::string& text) { std::cout << text << std::flush; }

void write_csv(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "hyperconc: cannot write " << path << '\n';
        throw Failure{kExitValidation};
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "hyperconc: cannot read " << path << '\n';
        throw Failure{kExitValidation};
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

SpecPtr load_spec(const std::string& path) {
    hc_spec* spec = nullptr;
    check(hc_spec_from_file(path.c_str(), &spec));
    return SpecPtr(spec);
}

struct RunOptions {
    std::string state;
    std::string variant = "arbitrary";
    std::optional<std::string> model;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    std::uint64_t batch_size = 10000;
    std::uint32_t jobs = 1;
    std::string csv;
    std::string replay;
};

void add_variant_flags(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--variant", o.variant, "protocol variant")
        ->check(CLI::IsMember({"partial", "arbitrary"}))
        ->capture_default_str();
    cmd->add_option("--model", o.model, "momentum readout for the partial variant (default homodyne)")
        ->check(CLI::IsMember({"homodyne", "xquad"}));
}

void add_sampling_flags(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--seed", o.seed, "master seed")->capture_default_str();
    cmd->add_option("--batch-size", o.batch_size, "trials per batch (one CSV row each)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_jobs_flag(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--jobs", o.jobs, "worker threads; never changes the output")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

hc_campaign_config make_config(const RunOptions& o, hc_mode mode) {
    hc_campaign_config cfg;
    hc_campaign_config_init(&cfg);
    cfg.variant = o.variant == "partial" ? HC_VARIANT_PARTIAL : HC_VARIANT_ARBITRARY;
    if (o.model && cfg.variant != HC_VARIANT_PARTIAL) {
        std::cerr << "hyperconc: --model applies only to --variant partial\n";
        throw Failure{kExitUsage};
    }
    cfg.readout = o.model && *o.model == "xquad" ? HC_READOUT_XQUAD : HC_READOUT_HOMODYNE;
    cfg.mode = mode;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.batch_size = o.batch_size;
    cfg.jobs = o.jobs;
    return cfg;
}

void finish_report(const ReportPtr& report, const char* command, const std::string& csv) {
    char* json = nullptr;
    check(hc_report_json(report.get(), command, &json));
    if (!csv.empty()) {
        char* rows = nullptr;
        check(hc_report_csv(report.get(), &rows));
        write_csv(csv, take(rows));
    }
    emit_json(take(json));
}

void cmd_oracle(const RunOptions& o) {
    auto spec = load_spec(o.state);
    char* json = nullptr;
    check(hc_oracle_report_json(spec.get(), &json));
    emit_json(take(json));
}

void cmd_run(const RunOptions& o, hc_mode mode, const char* command) {
    auto spec = load_spec(o.state);
    const auto cfg = make_config(o, mode);
    hc_report* raw = nullptr;
    check(hc_run(spec.get(), &cfg, &raw));
    finish_report(ReportPtr(raw), command, o.csv);
}

void cmd_replay(const RunOptions& o) {
    const std::string text = read_file(o.replay);
    hc_report* raw = nullptr;
    check(hc_replay(text.c_str(), o.jobs, &raw));
    // null command: the report names it after the replayed mode
    finish_report(ReportPtr(raw), nullptr, o.csv);
}

struct SweepOptions {
    std::string param;
    double from = 0.0;
    double to = 1.0;
    std::uint32_t steps = 11;
    bool exact = false;
};

void cmd_sweep(const RunOptions& o, const SweepOptions& s) {
    auto spec = load_spec(o.state);
    const auto cfg = make_config(o, s.exact ? HC_MODE_ENUMERATE : HC_MODE_MONTE_CARLO);
    hc_sweep* raw = nullptr;
    check(hc_sweep_run(spec.get(), &cfg, s.param.c_str(), s.from, s.to, s.steps, &raw));
    SweepPtr sweep(raw);
    char* json = nullptr;
    check(hc_sweep_json(sweep.get(), &json));
    if (!o.csv.empty()) {
        char* rows = nullptr;
        check(hc_sweep_csv(sweep.get(), &rows));
        write_csv(o.csv, take(rows));
    }
    emit_json(take(json));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concurrence estimation for polarization-momentum hyperentangled photon pairs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(hc_version()));

    RunOptions oracle_opts, enum_opts, sim_opts, sweep_opts;
    SweepOptions sweep_args;

    auto* oracle = app.add_subcommand("oracle", "analytic concurrences of the state");
    oracle->add_option("--state", oracle_opts.state, "state file (JSON)")->required();

    auto* enumerate = app.add_subcommand("enumerate", "exact outcome-tree enumeration");
    enumerate->add_option("--state", enum_opts.state, "state file (JSON)")->required();
    add_variant_flags(enumerate, enum_opts);
    enumerate->add_option("--csv", enum_opts.csv, "write the CSV row here");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
    auto* state_opt = simulate->add_option("--state", sim_opts.state, "state file (JSON)");
    auto* replay_opt = simulate->add_option("--replay", sim_opts.replay, "re-run the config echo of a report");
    state_opt->excludes(replay_opt);
    add_variant_flags(simulate, sim_opts);
    add_sampling_flags(simulate, sim_opts);
    add_jobs_flag(simulate, sim_opts);
    simulate->add_option("--csv", sim_opts.csv, "write one row per trial batch here");

    auto* sweep = app.add_subcommand("sweep", "vary one coefficient over a linear grid");
    sweep->add_option("--state", sweep_opts.state, "state file (JSON)")->required();
    sweep->add_option("--param", sweep_args.param, "pol.alpha ... mom.delta")->required();
    sweep->add_option("--from", sweep_args.from, "first grid value")->required();
    sweep->add_option("--to", sweep_args.to, "last grid value")->required();
    sweep->add_option("--steps", sweep_args.steps, "grid points")->check(CLI::PositiveNumber)->capture_default_str();
    sweep->add_flag("--exact", sweep_args.exact, "enumerate instead of sampling");
    add_variant_flags(sweep, sweep_opts);
    add_sampling_flags(sweep, sweep_opts);
    add_jobs_flag(sweep, sweep_opts);
    sweep->add_option("--csv", sweep_opts.csv, "write one row per sweep point here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*oracle) {
            cmd_oracle(oracle_opts);
        } else if (*enumerate) {
            cmd_run(enum_opts, HC_MODE_ENUMERATE, "enumerate");
        } else if (*simulate) {
            if (!sim_opts.replay.empty()) {
                if (sim_opts.model || simulate->count("--variant") || simulate->count("--trials") ||
                    simulate->count("--seed") || simulate->count("--batch-size")) {
                    std::cerr << "hyperconc: --replay takes its configuration from the report\n";
                    return kExitUsage;
                }
                cmd_replay(sim_opts);
            } else if (sim_opts.state.empty()) {
                std::cerr << "hyperconc: simulate needs --state or --replay\n";
                return kExitUsage;
            } else {
                cmd_run(sim_opts, HC_MODE_MONTE_CARLO, "simulate");
            }
        } else if (*sweep) {
            cmd_sweep(sweep_opts, sweep_args);
        }
    } catch (const Failure& f) {
        return f.exit_code;
    }
    return kExitOk;
}
