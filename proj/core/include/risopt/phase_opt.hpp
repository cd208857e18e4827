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

#include <optional>
#include <ostream>
#include <vector>

#include "risopt/correlation.hpp"
#include "risopt/phase_state.hpp"
#include "risopt/rng.hpp"

namespace risopt {

// Ξ = T_I ⊙ R_I^T, so that Tr(T_I Θ R_I Θ^H) = v^H Ξ v.
CMatrix reflection_kernel(const CMatrix &t_i, const CMatrix &r_i);

double trace_objective(const CMatrix &xi, const CVector &v);
double trace_objective(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                       const PhaseState &theta);

// Wirtinger gradient with respect to conj(v): p = Ξ v.
CVector ascent_direction(const CMatrix &xi, const CVector &v);
CVector ascent_direction(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                         const PhaseState &theta);

// dφ/dθ_n = 2 Im(conj(v_n) p_n), the derivative along the torus.
RVector tangential_derivative(const CMatrix &xi, const CVector &v);

// v_n = exp(j arg(ṽ_n)). An exactly zero ṽ_n keeps the phase of `previous`
// (or phase 0 when no previous state is given).
PhaseState project_unit_modulus(const CVector &v_tilde);
PhaseState project_unit_modulus(const CVector &v_tilde, const PhaseState &previous);

// Power-iteration estimate of λ_max(Ξ).
double lambda_max_estimate(const CMatrix &xi, int iterations = 20);

PhaseState random_phases(Index n, RandomStream &rng);

struct PgaOptions {
    // Initial step; 1 / λ_max(Ξ) when empty.
    std::optional<double> alpha0;
    // Stopping threshold on |φ(t+1) - φ(t)|; 1e-8 N when empty.
    std::optional<double> tol;
    int max_iter = 5000;
    // Θ = I when empty.
    std::optional<PhaseState> initial;
    int max_halvings = 60;
};

struct PgaTrace {
    // Entry 0 is the objective at the initial point, entry t after iteration t.
    std::vector<double> objective_per_iteration;
    // Accepted step per entry (0 at the initial point and when no step was accepted).
    std::vector<double> step_sizes;
    int iterations = 0;
    bool converged = false;
};

struct PgaResult {
    PhaseState phases;
    PgaTrace trace;
};

// Projected gradient ascent on Tr(T_I Θ R_I Θ^H) over the unit-modulus torus
// with backtracking (step halved until the objective does not decrease).
PgaResult optimize_phases(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                          const PgaOptions &opts = {});
PgaResult optimize_phases(const CMatrix &xi, const PgaOptions &opts = {});

// CSV with header `iteration,objective,step_size`.
void write_pga_trace_csv(const PgaTrace &trace, std::ostream &os);

} // namespace risopt
