// SPDX-License-Identifier: Apache-2.0
//
// risopt: statistical-CSI design of RIS-aided multi-user MIMO downlinks
// Copyright (C) 2026 The risopt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "risopt/harness/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "risopt/channel.hpp"
#include "risopt/rate.hpp"
#include "risopt/rng.hpp"

namespace risopt::harness {

namespace {

constexpr std::uint64_t min_phase_draws = 100;

CorrelationMatrix from_file_or_exp(const std::optional<std::filesystem::path> &file, Index dim,
                                   double rho, const char *name)
{
    if (!file)
        return exp_correlation(dim, rho);
    CMatrix m = load_matrix_csv(*file);
    if (m.rows() != dim || m.cols() != dim)
        throw ConfigError(std::string(name) + " file " + file->string() + " is " +
                          std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                          ", expected " + std::to_string(dim) + "x" + std::to_string(dim));
    try {
        return CorrelationMatrix(std::move(m));
    } catch (const InvalidArgument &e) {
        throw ConfigError(std::string(name) + " file " + file->string() + ": " + e.what());
    }
}

SystemConfig system_for(const ExperimentConfig &cfg, Index n, Index l, Index d)
{
    SystemConfig s = cfg.system;
    s.ris_elements = n;
    s.user_antennas = l;
    s.streams = d;
    try {
        s.validate();
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
    return s;
}

Precoder shared_epa(const ExperimentConfig &cfg, Index d, double p_max_mw)
{
    RandomStream rng(StreamKey{cfg.mc.seed, 0, links::epa_unitary});
    return epa_precoder(cfg.system.bs_antennas, cfg.system.users, d, p_max_mw, rng);
}

std::vector<double> noise_of(const ExperimentConfig &cfg) { return cfg.system.noise_mw; }

} // namespace

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)> &body)
{
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                    try {
                        body(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto &e : errors)
        if (e)
            std::rethrow_exception(e);
}

LinkStats build_link_stats(const ExperimentConfig &cfg, Index n, Index l,
                           const CorrelationSpec &corr, const PathLossModel &pathloss)
{
    const CorrelationMatrix r_u = from_file_or_exp(corr.ru_file, l, corr.rho_ru, "ru");
    LinkStats s{pathloss.beta_bi(),
                pathloss.beta_iu(),
                CorrelationSet{from_file_or_exp(corr.tb_file, cfg.system.bs_antennas, corr.rho_tb, "tb"),
                               from_file_or_exp(corr.ti_file, n, corr.rho_ti, "ti"),
                               from_file_or_exp(corr.ri_file, n, corr.rho_ri, "ri"),
                               std::vector<CorrelationMatrix>(
                                   static_cast<std::size_t>(cfg.system.users), r_u)},
                cfg.system.noise_mw};
    s.validate();
    return s;
}

LinkStats build_link_stats(const ExperimentConfig &cfg)
{
    return build_link_stats(cfg, cfg.system.ris_elements, cfg.system.user_antennas,
                            cfg.correlation, cfg.pathloss);
}

MeanStderr mean_stderr(const std::vector<double> &samples)
{
    MeanStderr out;
    const auto t = static_cast<double>(samples.size());
    if (samples.empty())
        return out;
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    out.mean = sum / t;
    if (samples.size() < 2)
        return out;
    double ss = 0.0;
    for (double x : samples)
        ss += (x - out.mean) * (x - out.mean);
    out.stderr_ = std::sqrt(ss / (t - 1.0)) / std::sqrt(t);
    return out;
}

ResultTable run_convergence(const ExperimentConfig &cfg)
{
    cfg.validate();
    if (cfg.sweep.variable != SweepVariable::n)
        throw ConfigError("converge needs sweep.variable = N");

    ResultTable table;
    const std::vector<double> noise = noise_of(cfg);
    for (Index l : cfg.sweep.l_values) {
        const Index d = std::min(cfg.system.streams, l);
        for (double nv : cfg.sweep.values) {
            const auto n = static_cast<Index>(nv);
            (void)system_for(cfg, n, l, d);
            const LinkStats stats = build_link_stats(cfg, n, l, cfg.correlation, cfg.pathloss);
            const Precoder w = shared_epa(cfg, d, cfg.system.p_max_mw);
            const PhaseState theta =
                PhaseState::from_phases(RVector::Constant(n, cfg.fixed_theta));
            const double de = deterministic_sum_rate(stats, theta, w).total;

            const ChannelSampler sampler(stats);
            std::vector<double> rates(static_cast<std::size_t>(cfg.mc.trials));
            parallel_for(rates.size(), cfg.mc.threads, [&](std::size_t t) {
                const ChannelRealization real = sampler.sample(cfg.mc.seed, t);
                rates[t] = instantaneous_sum_rate(real, theta, w, noise).total;
            });
            const MeanStderr ms = mean_stderr(rates);
            table.rows.push_back({nv, "epa_L" + std::to_string(l), ms.mean, ms.stderr_, de,
                                  cfg.mc.trials});
        }
    }
    return table;
}

ResultTable run_correlation_sweep(const ExperimentConfig &cfg)
{
    cfg.validate();
    if (cfg.sweep.variable != SweepVariable::rho)
        throw ConfigError("corr-sweep needs sweep.variable = rho");
    if (!cfg.sweep.target)
        throw ConfigError("corr-sweep needs sweep.target");

    std::vector<Index> ns = cfg.sweep.n_values;
    if (ns.empty())
        ns.push_back(cfg.system.ris_elements);

    ResultTable table;
    for (Index n : ns) {
        (void)system_for(cfg, n, cfg.system.user_antennas, cfg.system.streams);
        for (double rho : cfg.sweep.values) {
            CorrelationSpec corr = cfg.correlation;
            switch (*cfg.sweep.target) {
            case CorrelationTarget::tb:
                corr.rho_tb = rho;
                corr.tb_file.reset();
                break;
            case CorrelationTarget::ru:
                corr.rho_ru = rho;
                corr.ru_file.reset();
                break;
            case CorrelationTarget::ris:
                corr.rho_ti = rho;
                corr.rho_ri = rho;
                corr.ti_file.reset();
                corr.ri_file.reset();
                break;
            }
            const LinkStats stats =
                build_link_stats(cfg, n, cfg.system.user_antennas, corr, cfg.pathloss);
            RandomStream rng(StreamKey{cfg.mc.seed, 0, links::epa_unitary});
            const Precoder w =
                epa_precoder_normalized(stats.corr.t_b.entries(), cfg.system.users,
                                        cfg.system.streams, cfg.system.p_max_mw, rng);
            const double de = deterministic_sum_rate(stats, PhaseState::identity(n), w).total;
            table.rows.push_back({rho, "epa_N" + std::to_string(n), de, 0.0, de, 0});
        }
    }
    return table;
}

ResultTable run_scheme_comparison(const ExperimentConfig &cfg, SchemeArtifacts *artifacts)
{
    cfg.validate();
    if (cfg.sweep.variable != SweepVariable::p_max)
        throw ConfigError("schemes needs sweep.variable = p_max");

    const LinkStats stats = build_link_stats(cfg);
    const Index n = stats.ris_elements();
    const Index d = cfg.system.streams;

    PgaOptions opts;
    opts.tol = cfg.pga_tol;
    opts.max_iter = cfg.pga_max_iter;
    const PgaResult pga = optimize_phases(stats.corr.t_i, stats.corr.r_i, opts);
    const PhaseState &theta_star = pga.phases;

    const std::uint64_t draws = std::max(cfg.mc.trials, min_phase_draws);
    std::vector<PhaseState> random_thetas;
    random_thetas.reserve(static_cast<std::size_t>(draws));
    for (std::uint64_t t = 0; t < draws; ++t) {
        RandomStream rng(StreamKey{cfg.mc.seed, t, links::random_phase});
        random_thetas.push_back(random_phases(n, rng));
    }

    if (artifacts) {
        artifacts->pga_trace = pga.trace;
        artifacts->beamformers.clear();
    }

    auto averaged = [&](const std::function<double(const PhaseState &)> &rate) {
        std::vector<double> r(random_thetas.size());
        parallel_for(r.size(), cfg.mc.threads,
                     [&](std::size_t t) { r[t] = rate(random_thetas[t]); });
        return mean_stderr(r);
    };

    ResultTable table;
    for (double p_dbm : cfg.sweep.values) {
        const double p_mw = dbm_to_mw(p_dbm);
        const Precoder epa = shared_epa(cfg, d, p_mw);
        const BeamformerSolution joint = optimize_beamformer(stats, theta_star, p_mw, d);
        if (artifacts)
            artifacts->beamformers.push_back(joint);

        for (Scheme s : cfg.schemes) {
            ResultRow row;
            row.sweep_value = p_dbm;
            row.scheme = to_string(s);
            switch (s) {
            case Scheme::opt_theta_opt_w:
                row.rate_mean = deterministic_sum_rate(stats, theta_star, joint.w).total;
                row.trials = 1;
                break;
            case Scheme::opt_theta_epa:
                row.rate_mean = deterministic_sum_rate(stats, theta_star, epa).total;
                row.trials = 1;
                break;
            case Scheme::rand_theta_opt_w: {
                const MeanStderr ms = averaged([&](const PhaseState &th) {
                    const BeamformerSolution b = optimize_beamformer(stats, th, p_mw, d);
                    return deterministic_sum_rate(stats, th, b.w).total;
                });
                row.rate_mean = ms.mean;
                row.rate_stderr = ms.stderr_;
                row.trials = draws;
                break;
            }
            case Scheme::rand_theta_epa: {
                const MeanStderr ms = averaged([&](const PhaseState &th) {
                    return deterministic_sum_rate(stats, th, epa).total;
                });
                row.rate_mean = ms.mean;
                row.rate_stderr = ms.stderr_;
                row.trials = draws;
                break;
            }
            }
            row.rate_deterministic = row.rate_mean;
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

} // namespace risopt::harness
