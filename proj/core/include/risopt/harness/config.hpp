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

#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "risopt/channel.hpp"
#include "risopt/error.hpp"

namespace risopt::harness {

// Raised for anything wrong with a config file; the CLI maps it to exit 2.
class ConfigError : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

enum class SweepVariable { n, rho, p_max };
enum class CorrelationTarget { tb, ru, ris };
enum class Scheme { opt_theta_opt_w, rand_theta_opt_w, opt_theta_epa, rand_theta_epa };

std::string to_string(SweepVariable v);
std::string to_string(CorrelationTarget t);
std::string to_string(Scheme s);
Scheme parse_scheme(const std::string &name);

inline const std::vector<Scheme> &all_schemes()
{
    static const std::vector<Scheme> s{Scheme::opt_theta_opt_w, Scheme::rand_theta_opt_w,
                                       Scheme::opt_theta_epa, Scheme::rand_theta_epa};
    return s;
}

struct CorrelationSpec {
    double rho_tb = 0.2;
    double rho_ti = 0.2;
    double rho_ri = 0.2;
    double rho_ru = 0.2;
    // CSV-matrix files; when set they replace the exponential model.
    std::optional<std::filesystem::path> tb_file, ti_file, ri_file, ru_file;
};

struct McSpec {
    std::uint64_t trials = 500;
    std::uint64_t seed = 1;
    unsigned threads = 0; // 0: hardware concurrency
};

struct SweepSpec {
    SweepVariable variable = SweepVariable::n;
    std::vector<double> values;
    std::optional<CorrelationTarget> target; // rho sweeps only
    std::vector<Index> n_values;             // rho sweeps: N grid
    std::vector<Index> l_values{1, 2, 3};    // N sweeps: user antennas
};

struct ExperimentConfig {
    SystemConfig system;
    double p_max_dbm = 40.0;
    std::vector<double> noise_dbm{-90.0};
    PathLossModel pathloss;
    CorrelationSpec correlation;
    McSpec mc;
    SweepSpec sweep;
    std::vector<Scheme> schemes = all_schemes();
    double fixed_theta = 1.0471975511965976; // π/3
    std::optional<double> pga_tol;
    int pga_max_iter = 5000;

    // Throws ConfigError.
    void validate() const;
    // Resolved config and seed as pretty-printed JSON.
    std::string manifest_json() const;
};

// INI-style text: [system] [pathloss] [correlation] [mc] [sweep] [schemes]
// [phase] [pga]. Matrix file paths are resolved against `base_dir`.
ExperimentConfig parse_config(std::istream &in, const std::filesystem::path &base_dir = {});
ExperimentConfig load_config(const std::filesystem::path &path);

} // namespace risopt::harness
