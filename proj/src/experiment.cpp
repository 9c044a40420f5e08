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

#include "hyperconc/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hyperconc/errors.hpp"

namespace hyperconc {

const char* to_string(CampaignMode m) noexcept {
    return m == CampaignMode::kEnumerate ? "enumerate" : "monte_carlo";
}

void validate(const CampaignConfig& cfg) {
    validate(cfg.spec);
    if (cfg.mode == CampaignMode::kMonteCarlo && cfg.trials == 0) {
        throw InvalidArgumentError("Monte Carlo campaigns need at least one trial");
    }
    if (cfg.batch_size == 0) throw InvalidArgumentError("batch size must be positive");
    if (cfg.jobs == 0) throw InvalidArgumentError("worker count must be positive");
}

ConcurrenceReport run_enumeration(const CampaignConfig& cfg) {
    validate(cfg);
    const Protocol protocol(cfg.spec, cfg.variant, cfg.momentum_readout);
    return estimate_from_probabilities(protocol.enumerate(), cfg.variant, protocol.momentum_readout(),
                                       hyper_concurrence(cfg.spec));
}

namespace {

std::vector<TrialCounts> run_batches(const Protocol& protocol, const CampaignConfig& cfg) {
    const std::uint64_t n_batches = (cfg.trials + cfg.batch_size - 1) / cfg.batch_size;
    std::vector<TrialCounts> batches(n_batches);

    const auto run_batch = [&](std::uint64_t b) {
        TrialCounts counts;
        const std::uint64_t begin = b * cfg.batch_size;
        const std::uint64_t end = std::min(cfg.trials, begin + cfg.batch_size);
        for (std::uint64_t i = begin; i < end; ++i) {
            RandomStream rng(cfg.master_seed, i);
            counts.add(protocol.run_trial(rng));
        }
        batches[b] = counts;
    };

    const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(cfg.jobs, n_batches));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_batches; ++b) run_batch(b);
        return batches;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint64_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t b = w; b < n_batches; b += workers) run_batch(b);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return batches;
}

}  // namespace

CampaignResult run_campaign(const CampaignConfig& cfg) {
    validate(cfg);
    if (cfg.mode == CampaignMode::kEnumerate) return {run_enumeration(cfg), {}};

    const Protocol protocol(cfg.spec, cfg.variant, cfg.momentum_readout);
    CampaignResult result;
    result.batches = run_batches(protocol, cfg);
    TrialCounts total;
    for (const auto& b : result.batches) total += b;
    result.report = estimate_from_counts(total, cfg.variant, protocol.momentum_readout(), hyper_concurrence(cfg.spec));
    return result;
}

ConcurrenceReport run_monte_carlo(const CampaignConfig& cfg) {
    CampaignConfig mc = cfg;
    mc.mode = CampaignMode::kMonteCarlo;
    return run_campaign(mc).report;
}

SweepParameter SweepParameter::parse(std::string_view text) {
    static constexpr std::string_view kNames[] = {"alpha", "beta", "gamma", "delta"};
    const auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        throw InvalidArgumentError("sweep parameter must look like pol.alpha or mom.delta");
    }
    SweepParameter p;
    const auto block = text.substr(0, dot);
    const auto coeff = text.substr(dot + 1);
    if (block == "pol") {
        p.block = Block::kPolarization;
    } else if (block == "mom") {
        p.block = Block::kMomentum;
    } else {
        throw InvalidArgumentError("sweep block must be 'pol' or 'mom', got '" + std::string(block) + "'");
    }
    const auto it = std::find(std::begin(kNames), std::end(kNames), coeff);
    if (it == std::end(kNames)) {
        throw InvalidArgumentError("sweep coefficient must be alpha, beta, gamma or delta, got '" +
                                   std::string(coeff) + "'");
    }
    p.index = static_cast<int>(it - std::begin(kNames));
    return p;
}

std::string SweepParameter::name() const {
    static constexpr const char* kNames[] = {"alpha", "beta", "gamma", "delta"};
    return std::string(block == Block::kPolarization ? "pol." : "mom.") + kNames[index];
}

HyperPairSpec with_coefficient(const HyperPairSpec& spec, const SweepParameter& param, double value) {
    if (!std::isfinite(value) || std::abs(value) > 1.0) {
        throw DomainError("swept coefficient must lie in [-1, 1]");
    }
    HyperPairSpec out = spec;
    CoefficientBlock& block = param.block == SweepParameter::Block::kPolarization ? out.pol : out.mom;
    Complex* coeffs[4] = {&block.alpha, &block.beta, &block.gamma, &block.delta};
    double partner_norm2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        if (i != param.index) partner_norm2 += std::norm(*coeffs[i]);
    }
    const double remaining = std::max(0.0, 1.0 - value * value);
    if (partner_norm2 == 0.0 && remaining > kNormalizationTolerance) {
        throw DomainError("cannot renormalize: the other coefficients of " + param.name() + "'s block are all zero");
    }
    const double factor = partner_norm2 > 0.0 ? std::sqrt(remaining / partner_norm2) : 0.0;
    for (int i = 0; i < 4; ++i) {
        if (i == param.index) {
            *coeffs[i] = Complex{value, 0.0};
        } else {
            *coeffs[i] *= factor;
        }
    }
    return out;
}

std::vector<SweepPoint> run_sweep(const CampaignConfig& base, const SweepParameter& param, double from, double to,
                                  std::size_t steps) {
    if (steps == 0) throw InvalidArgumentError("sweep needs at least one grid point");
    std::vector<SweepPoint> points;
    points.reserve(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps - 1);
        const double value = from + (to - from) * t;
        CampaignConfig cfg = base;
        cfg.spec = with_coefficient(base.spec, param, value);
        points.push_back({value, cfg.spec, run_campaign(cfg).report});
    }
    return points;
}

}  // namespace hyperconc
