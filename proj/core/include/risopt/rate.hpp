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

#include <span>
#include <vector>

#include "risopt/channel.hpp"
#include "risopt/link_stats.hpp"
#include "risopt/phase_state.hpp"

namespace risopt {

// W = [W_1 ... W_K], each block M x d.
struct Precoder {
    std::vector<CMatrix> blocks;

    Index users() const { return static_cast<Index>(blocks.size()); }
    // Tr(W W^H)
    double total_power() const;
    // Tr(W_k W_k^H)
    double user_power(Index k) const;
    // Tr(T W_k W_k^H)
    double correlated_power(const CMatrix &t, Index k) const;
    // Throws InvalidArgument if Tr(W W^H) > P_max (1 + 1e-9).
    void check_power(double p_max_mw) const;
};

enum class RateKind { instantaneous, deterministic, epa_identity };

struct RateReport {
    std::vector<double> per_user; // bits/s/Hz
    double total = 0.0;
    RateKind kind = RateKind::deterministic;
    // Numerical rank of each W_k. Empty for epa_identity.
    std::vector<Index> precoder_rank;
};

// Instantaneous achievable sum-rate of one channel realization:
//   R_k = log2 det(I + Ψ_k (Σ_{i≠k} Ψ_i + σ_k² I)^{-1}),
//   Ψ_j = (C_k W_j)(C_k W_j)^H, C_k = H_IU,k Θ H_BI.
// Evaluated as log2 det(Ψ_k + B) - log2 det(B), B = Σ_{i≠k} Ψ_i + σ_k² I.
RateReport instantaneous_sum_rate(const ChannelRealization &real, const PhaseState &theta,
                                  const Precoder &w, std::span<const double> noise_mw);

// Large-N deterministic equivalent of the sum-rate (statistical CSI only):
//   Φ_j = Tr(T_B W_j W_j^H) R_U,k / N,
//   R_k = log2 det(I + Φ_k (Σ_{i≠k} Φ_i + σ_k² / (φ_k Tr(T_I Θ R_I Θ^H)) I)^{-1}).
// Throws DegenerateGeometry if the reflection trace vanishes.
RateReport deterministic_sum_rate(const LinkStats &stats, const PhaseState &theta,
                                  const Precoder &w);

// Θ = I, equal power allocation, eigenvalue form:
//   R_k = Σ_l log2(1 + 1 / (K - 1 + ζ_k / (ε λ_k,l))), ε = P_max / (K N),
//   ζ_k = σ_k² / (φ_k Tr(T_I R_I)).
// Zero eigenvalues contribute zero rate.
RateReport epa_identity_rate(const LinkStats &stats, double p_max_mw);

// Deterministic limit of (1/N) H2 H1 W H1^H H2^H for Kronecker factors
// H1 = R1^(1/2) G1 T1^(1/2) (N x M), H2 = R2^(1/2) G2 T2^(1/2) (L x N):
//   (σ1² σ2² / N) Tr(T2 R1) Tr(T1 W) R2.
CMatrix de_chain_rhs(const CMatrix &t1, const CMatrix &r1, const CMatrix &t2, const CMatrix &r2,
                     const CMatrix &w, double sigma1, double sigma2, Index n);

// Tr(T_I Θ R_I Θ^H), the only place Θ enters the deterministic equivalent.
double reflection_trace(const CMatrix &t_i, const CMatrix &r_i, const PhaseState &theta);

} // namespace risopt
