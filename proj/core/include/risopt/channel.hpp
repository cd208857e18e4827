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
#include <vector>

#include "risopt/correlation.hpp"
#include "risopt/link_stats.hpp"
#include "risopt/phase_state.hpp"
#include "risopt/rng.hpp"

namespace risopt {

// dBm <-> mW
double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

struct PathLossLink {
    double distance_m = 10.0;
    double exponent = 2.0;
};

// β = (d / d0)^(-α) per link.
struct PathLossModel {
    double d0_m = 10.0;
    PathLossLink bs_ris;
    std::vector<PathLossLink> ris_users;

    double beta_bi() const;
    std::vector<double> beta_iu() const;
};

// β = (distance / d0)^(-exponent). Throws on non-positive distance or d0,
// or a negative exponent.
double path_loss(double distance_m, double exponent, double d0_m);

struct SystemConfig {
    Index bs_antennas = 10;   // M
    Index ris_elements = 80;  // N
    Index user_antennas = 3;  // L
    Index users = 2;          // K
    Index streams = 3;        // d, per user
    double p_max_mw = 1e4;
    std::vector<double> noise_mw;
    std::uint64_t rng_seed = 0;

    // 1 <= K d <= min(M, K L), P_max > 0, σ_k² > 0.
    void validate() const;
};

struct ChannelRealization {
    CMatrix h_bi;              // N x M
    std::vector<CMatrix> h_iu; // K matrices, L x N
    std::uint64_t seed = 0;
    std::uint64_t trial = 0;
};

// β^(1/2) R^(1/2) G T^(1/2) with G ~ CN(0, 1) i.i.d., drawn from `rng`.
CMatrix sample_channel(double beta, const CorrelationMatrix &rx, const CorrelationMatrix &tx,
                       Index rows, Index cols, RandomStream &rng);

// Same as above with precomputed square-root factors.
CMatrix sample_channel_from_roots(double beta, const CMatrix &rx_sqrt, const CMatrix &tx_sqrt,
                                  RandomStream &rng);

// Draws whole realizations for fixed statistics. The square roots of every
// correlation matrix are computed once here; `sample` is const and can be
// called from many threads concurrently.
class ChannelSampler {
  public:
    explicit ChannelSampler(const LinkStats &stats);

    // Streams are keyed by (seed, trial, link): link 0 is BS->RIS, link 1+k
    // is RIS->user k.
    ChannelRealization sample(std::uint64_t seed, std::uint64_t trial) const;

  private:
    double beta_bi_;
    std::vector<double> beta_iu_;
    CMatrix sqrt_t_b_, sqrt_t_i_, sqrt_r_i_;
    std::vector<CMatrix> sqrt_r_u_;
};

// H_IU,k diag(v) H_BI (L x M).
CMatrix cascade(const CMatrix &h_iu_k, const PhaseState &theta, const CMatrix &h_bi);

} // namespace risopt
