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

#include <cstddef>
#include <functional>
#include <vector>

#include "risopt/beamforming.hpp"
#include "risopt/harness/config.hpp"
#include "risopt/harness/csv.hpp"
#include "risopt/link_stats.hpp"
#include "risopt/phase_opt.hpp"

namespace risopt::harness {

// Runs body(i) for i in [0, count) on `threads` workers (0: hardware
// concurrency). Exceptions are rethrown on the calling thread, lowest index
// first.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)> &body);

// Statistics for N elements and L user antennas under `corr`; explicit matrix
// files take precedence over the exponential model.
LinkStats build_link_stats(const ExperimentConfig &cfg, Index n, Index l,
                           const CorrelationSpec &corr, const PathLossModel &pathloss);
LinkStats build_link_stats(const ExperimentConfig &cfg);

// Monte-Carlo mean and standard error (sample sd / sqrt(T)), summed in index
// order.
struct MeanStderr {
    double mean = 0.0;
    double stderr_ = 0.0;
};
MeanStderr mean_stderr(const std::vector<double> &samples);

// EPA, fixed phase, MC vs deterministic per (L, N). Scheme label `epa_L<L>`,
// sweep value N. Streams per user are min(d, L).
ResultTable run_convergence(const ExperimentConfig &cfg);

// Deterministic rate per (N, ρ) with Θ = I and trace-normalized EPA. Scheme
// label `epa_N<N>`, sweep value ρ.
ResultTable run_correlation_sweep(const ExperimentConfig &cfg);

struct SchemeArtifacts {
    PgaTrace pga_trace;
    // One per swept P_max, in sweep order.
    std::vector<BeamformerSolution> beamformers;
};

// Asymptotic sum-rate of each enabled scheme per P_max (dBm).
ResultTable run_scheme_comparison(const ExperimentConfig &cfg, SchemeArtifacts *artifacts = nullptr);

} // namespace risopt::harness
