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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "risopt/beamforming.hpp"
#include "risopt/format.hpp"
#include "risopt/harness/config.hpp"
#include "risopt/harness/csv.hpp"
#include "risopt/harness/experiments.hpp"
#include "risopt/phase_opt.hpp"

namespace fs = std::filesystem;
using namespace risopt;
using namespace risopt::harness;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_runtime = 1;
constexpr int exit_config = 2;

struct Options {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> threads;
};

ExperimentConfig resolve(const Options &o)
{
    ExperimentConfig cfg = load_config(o.config);
    if (o.seed) {
        cfg.mc.seed = *o.seed;
        cfg.system.rng_seed = *o.seed;
    }
    if (o.trials)
        cfg.mc.trials = *o.trials;
    if (o.threads)
        cfg.mc.threads = *o.threads;
    cfg.validate();
    return cfg;
}

fs::path out_dir(const Options &o)
{
    fs::path dir(o.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
    return dir;
}

std::string pmax_tag(double dbm)
{
    std::string s = format_double(dbm);
    for (char &c : s)
        if (c == '.')
            c = 'p';
        else if (c == '-')
            c = 'm';
    return s;
}

int run(const std::string &cmd, const Options &o)
{
    const ExperimentConfig cfg = resolve(o);
    if (cmd == "validate-config") {
        std::cout << "config ok: " << o.config << '\n';
        return exit_ok;
    }
    const fs::path dir = out_dir(o);
    const std::string manifest = cfg.manifest_json();
    if (cmd == "converge") {
        emit(run_convergence(cfg), manifest, dir / "converge.csv");
    } else if (cmd == "corr-sweep") {
        emit(run_correlation_sweep(cfg), manifest, dir / "corr_sweep.csv");
    } else if (cmd == "schemes") {
        SchemeArtifacts art;
        const ResultTable table = run_scheme_comparison(cfg, &art);
        emit(table, manifest, dir / "schemes.csv");
        std::ostringstream trace;
        write_pga_trace_csv(art.pga_trace, trace);
        write_text_file(dir / "pga_trace.csv", trace.str());
        const LinkStats stats = build_link_stats(cfg);
        for (std::size_t i = 0; i < art.beamformers.size(); ++i) {
            std::ostringstream bf;
            write_beamformer_csv(art.beamformers[i], stats.corr.t_b.entries(), bf);
            write_text_file(dir / ("beamformer_p" + pmax_tag(cfg.sweep.values[i]) + ".csv"),
                            bf.str());
        }
    }
    std::cout << "wrote " << dir.string() << '\n';
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"risopt: statistical-CSI experiments for RIS-aided multi-user MIMO"};
    app.require_subcommand(1);
    Options opts;
    std::string chosen;

    for (const char *name : {"converge", "corr-sweep", "schemes", "validate-config"}) {
        CLI::App *sub = app.add_subcommand(name);
        sub->add_option("--config", opts.config, "experiment config file")->required();
        sub->add_option("--seed", opts.seed, "override mc.seed");
        sub->add_option("--trials", opts.trials, "override mc.trials");
        sub->add_option("--threads", opts.threads, "worker threads (0: all cores)");
        if (std::string(name) != "validate-config")
            sub->add_option("--out", opts.out, "output directory");
        sub->callback([&chosen, name] { chosen = name; });
    }
    app.get_subcommand("converge")->description("Monte-Carlo vs deterministic sum-rate over N");
    app.get_subcommand("corr-sweep")->description("deterministic sum-rate over correlation");
    app.get_subcommand("schemes")->description("sum-rate of the transmit schemes over P_max");
    app.get_subcommand("validate-config")->description("parse and check a config file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_config;
    }

    try {
        return run(chosen, opts);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return exit_config;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_runtime;
    }
}
