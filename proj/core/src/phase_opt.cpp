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

#include "risopt/phase_opt.hpp"

#include <cmath>
#include <numbers>

#include "risopt/error.hpp"
#include "risopt/format.hpp"

namespace risopt {

CMatrix reflection_kernel(const CMatrix &t_i, const CMatrix &r_i)
{
    if (t_i.rows() != t_i.cols() || r_i.rows() != t_i.rows() || r_i.cols() != t_i.cols())
        throw DimensionMismatch("reflection_kernel: T_I and R_I must both be N x N");
    return t_i.cwiseProduct(r_i.transpose());
}

double trace_objective(const CMatrix &xi, const CVector &v)
{
    if (xi.rows() != v.size() || xi.cols() != v.size())
        throw DimensionMismatch("trace_objective: Ξ and v size mismatch");
    return v.dot(xi * v).real();
}

double trace_objective(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                       const PhaseState &theta)
{
    return trace_objective(reflection_kernel(t_i.entries(), r_i.entries()), theta.v());
}

CVector ascent_direction(const CMatrix &xi, const CVector &v)
{
    if (xi.rows() != v.size() || xi.cols() != v.size())
        throw DimensionMismatch("ascent_direction: Ξ and v size mismatch");
    return xi * v;
}

CVector ascent_direction(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                         const PhaseState &theta)
{
    return ascent_direction(reflection_kernel(t_i.entries(), r_i.entries()), theta.v());
}

RVector tangential_derivative(const CMatrix &xi, const CVector &v)
{
    const CVector p = ascent_direction(xi, v);
    RVector g(v.size());
    for (Index n = 0; n < v.size(); ++n)
        g(n) = 2.0 * (std::conj(v(n)) * p(n)).imag();
    return g;
}

PhaseState project_unit_modulus(const CVector &v_tilde)
{
    return project_unit_modulus(v_tilde, PhaseState::identity(v_tilde.size()));
}

PhaseState project_unit_modulus(const CVector &v_tilde, const PhaseState &previous)
{
    if (previous.size() != v_tilde.size())
        throw DimensionMismatch("project_unit_modulus: previous state size mismatch");
    RVector theta(v_tilde.size());
    for (Index n = 0; n < v_tilde.size(); ++n)
        theta(n) = (v_tilde(n) == Complex(0.0, 0.0)) ? previous.theta()(n) : std::arg(v_tilde(n));
    return PhaseState::from_phases(theta);
}

double lambda_max_estimate(const CMatrix &xi, int iterations)
{
    const Index n = xi.rows();
    CVector x = CVector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(n)), 0.0));
    double lambda = 0.0;
    for (int it = 0; it < iterations; ++it) {
        CVector y = xi * x;
        const double norm = y.norm();
        if (norm == 0.0)
            return 0.0;
        lambda = x.dot(y).real();
        x = y / norm;
    }
    return std::max(lambda, (xi * x).norm());
}

PhaseState random_phases(Index n, RandomStream &rng)
{
    RVector theta(n);
    for (Index i = 0; i < n; ++i)
        theta(i) = 2.0 * std::numbers::pi * rng.uniform();
    return PhaseState::from_phases(theta);
}

PgaResult optimize_phases(const CorrelationMatrix &t_i, const CorrelationMatrix &r_i,
                          const PgaOptions &opts)
{
    return optimize_phases(reflection_kernel(t_i.entries(), r_i.entries()), opts);
}

PgaResult optimize_phases(const CMatrix &xi, const PgaOptions &opts)
{
    const Index n = xi.rows();
    if (n == 0 || xi.cols() != n)
        throw DimensionMismatch("optimize_phases: Ξ must be square and non-empty");
    if (opts.max_iter < 1)
        throw InvalidArgument("optimize_phases: max_iter must be at least 1");
    if (opts.alpha0 && !(*opts.alpha0 > 0.0))
        throw InvalidArgument("optimize_phases: alpha0 must be positive");
    if (opts.tol && !(*opts.tol > 0.0))
        throw InvalidArgument("optimize_phases: tol must be positive");
    if (opts.initial && opts.initial->size() != n)
        throw DimensionMismatch("optimize_phases: initial state size mismatch");

    const double tol = opts.tol.value_or(1e-8 * static_cast<double>(n));
    double alpha0 = 0.0;
    if (opts.alpha0) {
        alpha0 = *opts.alpha0;
    } else {
        const double lmax = lambda_max_estimate(xi);
        alpha0 = lmax > 0.0 ? 1.0 / lmax : 1.0;
    }

    PhaseState state = opts.initial.value_or(PhaseState::identity(n));
    double objective = trace_objective(xi, state.v());

    PgaResult result{state, {}};
    PgaTrace &trace = result.trace;
    trace.objective_per_iteration.push_back(objective);
    trace.step_sizes.push_back(0.0);

    for (int it = 0; it < opts.max_iter; ++it) {
        const CVector p = xi * state.v();
        double alpha = alpha0;
        std::optional<PhaseState> accepted;
        double accepted_objective = objective;
        for (int h = 0; h <= opts.max_halvings; ++h, alpha *= 0.5) {
            PhaseState candidate = project_unit_modulus(state.v() + alpha * p, state);
            const double value = trace_objective(xi, candidate.v());
            if (value >= objective) {
                accepted = std::move(candidate);
                accepted_objective = value;
                break;
            }
        }
        ++trace.iterations;
        double change = 0.0;
        if (accepted) {
            change = accepted_objective - objective;
            state = std::move(*accepted);
            objective = accepted_objective;
            trace.step_sizes.push_back(alpha);
        } else {
            trace.step_sizes.push_back(0.0);
        }
        trace.objective_per_iteration.push_back(objective);
        if (std::abs(change) <= tol) {
            trace.converged = true;
            break;
        }
    }
    result.phases = std::move(state);
    return result;
}

void write_pga_trace_csv(const PgaTrace &trace, std::ostream &os)
{
    os << "iteration,objective,step_size\n";
    for (std::size_t t = 0; t < trace.objective_per_iteration.size(); ++t) {
        const double step = trace.step_sizes[t];
        os << t << ',' << format_double(trace.objective_per_iteration[t]) << ','
           << format_double(step) << '\n';
    }
}

} // namespace risopt
