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

#include <ostream>
#include <vector>

#include "risopt/link_stats.hpp"
#include "risopt/phase_state.hpp"
#include "risopt/rate.hpp"
#include "risopt/rng.hpp"

namespace risopt {

// ε_k = σ_k² / (φ_k Tr(T_I Θ* R_I Θ*^H)), r_k,l = λ_{U_k,l} / N.
struct EffectiveNoise {
    std::vector<double> eps;
    std::vector<RVector> r; // one descending L-vector per user

    Index users() const { return static_cast<Index>(eps.size()); }
};

EffectiveNoise effective_noise(const LinkStats &stats, const PhaseState &theta_star);

struct OptimalPower {
    double p_bar = 0.0; // t_max P_max
    double t_max = 0.0;
    CMatrix u_t;        // eigenvectors of T_B, descending
};

OptimalPower optimal_pbar(const CorrelationMatrix &t_b, double p_max_mw);

enum class EtaBound { interior, lower, upper };

struct EtaSolution {
    double eta = 0.0;
    EtaBound bound = EtaBound::interior;
};

// Solves τ = Σ_l 1 / (1 - η + ε / (r_l P̄)) for η in [0, 1]. The right-hand
// side increases with η, so η increases with τ; it is clamped to 0 when
// τ <= RHS(0) and to 1 when τ >= RHS(1). Throws DegenerateGeometry if every
// r_l is zero.
EtaSolution eta_from_tau(double tau, double eps_k, const RVector &r_k, double p_bar);

// Σ_l 1 / (1 - η + ε / (r_l P̄)), skipping r_l = 0.
double stationarity_rhs(double eta, double eps_k, const RVector &r_k, double p_bar);

struct TauBounds {
    double lower = 0.0; // min_k Σ_l 1 / (1 + ε_k / (r_k,l P̄))
    double upper = 0.0; // max_k Σ_l r_k,l P̄ / ε_k
};

TauBounds tau_bounds(const EffectiveNoise &noise, double p_bar);

struct PowerWeights {
    std::vector<double> eta;
    double tau = 0.0;
    // max_k |τ - RHS_k(η_k)| over interior users
    double kkt_residual = 0.0;
    std::vector<EtaBound> bounds;
    int outer_iterations = 0;
};

// Nested bisection: outer on τ within tau_bounds, inner eta_from_tau per
// user, until |Σ η - 1| <= tol. Throws ConvergenceError after 1000 outer
// iterations.
PowerWeights optimize_power_weights(const EffectiveNoise &noise, double p_bar, double tol = 1e-8);

// f(P̄, η) = Σ_k Σ_l log2((ε_k + r_k,l P̄) / (ε_k + (1 - η_k) r_k,l P̄))
double weighted_rate(const EffectiveNoise &noise, double p_bar, const std::vector<double> &eta);

// W_k = sqrt(η_k P_max) u_1 e_1^T (M x d): U_T Σ_k^(1/2) V_k^H with V_k = I.
Precoder build_precoder(const CMatrix &u_t, const PowerWeights &eta, double p_max_mw, Index d);

struct BeamformerSolution {
    Precoder w;
    double p_bar = 0.0;
    double t_max = 0.0;
    PowerWeights eta;
};

// Precoder stage of the joint design for a fixed Θ*.
BeamformerSolution optimize_beamformer(const LinkStats &stats, const PhaseState &theta_star,
                                       double p_max_mw, Index d);

// Equal power allocation: every W_k = sqrt(P_max / (K d)) times the first d
// columns of one Haar unitary drawn from `rng`.
Precoder epa_precoder(Index m, Index k, Index d, double p_max_mw, RandomStream &rng);

// EPA with each block rescaled so that Tr(T_B W_k W_k^H) = P_max / K exactly.
Precoder epa_precoder_normalized(const CMatrix &t_b, Index k, Index d, double p_max_mw,
                                 RandomStream &rng);

// CSV: `user,eta,tau,t_max,p_bar,power,correlated_power`.
void write_beamformer_csv(const BeamformerSolution &sol, const CMatrix &t_b, std::ostream &os);

} // namespace risopt
