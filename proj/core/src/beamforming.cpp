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

#include "risopt/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "risopt/error.hpp"
#include "risopt/format.hpp"

namespace risopt {

namespace {

constexpr double inner_interval = 1e-12;
constexpr int max_outer_iterations = 1000;

void check_noise(const EffectiveNoise &noise)
{
    if (noise.eps.empty() || noise.eps.size() != noise.r.size())
        throw InvalidArgument("EffectiveNoise: eps and r must be non-empty and of equal length");
    for (double e : noise.eps)
        if (!(e > 0.0))
            throw InvalidArgument("EffectiveNoise: eps must be positive");
}

} // namespace

EffectiveNoise effective_noise(const LinkStats &stats, const PhaseState &theta_star)
{
    stats.validate();
    const Index n = stats.ris_elements();
    if (theta_star.size() != n)
        throw DimensionMismatch("effective_noise: Θ length differs from N");
    const double refl =
        reflection_trace(stats.corr.t_i.entries(), stats.corr.r_i.entries(), theta_star);
    if (!(refl > 1e-12 * static_cast<double>(n)))
        throw DegenerateGeometry("effective_noise: Tr(T_I Θ R_I Θ^H) vanishes");

    EffectiveNoise out;
    const auto k_users = static_cast<std::size_t>(stats.users());
    out.eps.resize(k_users);
    out.r.resize(k_users);
    for (std::size_t k = 0; k < k_users; ++k) {
        out.eps[k] = stats.noise_mw[k] / (stats.phi(static_cast<Index>(k)) * refl);
        out.r[k] = stats.corr.r_u[k].spectrum().values / static_cast<double>(n);
    }
    return out;
}

OptimalPower optimal_pbar(const CorrelationMatrix &t_b, double p_max_mw)
{
    if (!(p_max_mw > 0.0))
        throw InvalidArgument("optimal_pbar: P_max must be positive");
    const EigenSpectrum &spec = t_b.spectrum();
    OptimalPower out;
    out.t_max = spec.values(0);
    out.p_bar = out.t_max * p_max_mw;
    out.u_t = spec.vectors;
    return out;
}

double stationarity_rhs(double eta, double eps_k, const RVector &r_k, double p_bar)
{
    double acc = 0.0;
    for (Index l = 0; l < r_k.size(); ++l) {
        if (r_k(l) <= 0.0)
            continue;
        acc += 1.0 / (1.0 - eta + eps_k / (r_k(l) * p_bar));
    }
    return acc;
}

EtaSolution eta_from_tau(double tau, double eps_k, const RVector &r_k, double p_bar)
{
    if (!(p_bar > 0.0))
        throw InvalidArgument("eta_from_tau: P_bar must be positive");
    if (!(eps_k > 0.0))
        throw InvalidArgument("eta_from_tau: eps must be positive");
    if (r_k.size() == 0 || !(r_k.maxCoeff() > 0.0))
        throw DegenerateGeometry("eta_from_tau: user has an all-zero receive spectrum");

    if (tau <= stationarity_rhs(0.0, eps_k, r_k, p_bar))
        return {0.0, EtaBound::lower};
    if (tau >= stationarity_rhs(1.0, eps_k, r_k, p_bar))
        return {1.0, EtaBound::upper};

    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > inner_interval) {
        const double mid = 0.5 * (lo + hi);
        if (stationarity_rhs(mid, eps_k, r_k, p_bar) < tau)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), EtaBound::interior};
}

TauBounds tau_bounds(const EffectiveNoise &noise, double p_bar)
{
    check_noise(noise);
    if (!(p_bar > 0.0))
        throw InvalidArgument("tau_bounds: P_bar must be positive");
    TauBounds b;
    b.lower = std::numeric_limits<double>::infinity();
    b.upper = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < noise.eps.size(); ++k) {
        double up = 0.0;
        double low = 0.0;
        for (Index l = 0; l < noise.r[k].size(); ++l) {
            const double r = noise.r[k](l);
            if (r <= 0.0)
                continue;
            up += r * p_bar / noise.eps[k];
            low += 1.0 / (1.0 + noise.eps[k] / (r * p_bar));
        }
        b.upper = std::max(b.upper, up);
        b.lower = std::min(b.lower, low);
    }
    return b;
}

PowerWeights optimize_power_weights(const EffectiveNoise &noise, double p_bar, double tol)
{
    check_noise(noise);
    if (!(tol > 0.0))
        throw InvalidArgument("optimize_power_weights: tol must be positive");
    const auto k_users = noise.eps.size();
    const TauBounds bounds = tau_bounds(noise, p_bar);

    PowerWeights out;
    out.eta.assign(k_users, 0.0);
    out.bounds.assign(k_users, EtaBound::interior);

    auto evaluate = [&](double tau) {
        double sum = 0.0;
        for (std::size_t k = 0; k < k_users; ++k) {
            const EtaSolution s = eta_from_tau(tau, noise.eps[k], noise.r[k], p_bar);
            out.eta[k] = s.eta;
            out.bounds[k] = s.bound;
            sum += s.eta;
        }
        out.tau = tau;
        return sum;
    };

    double lo = bounds.lower;
    double hi = bounds.upper;
    bool done = false;
    // Σ η(τ) is non-decreasing in τ; Σ η(lo) = 0 and Σ η(hi) >= 1.
    if (std::abs(evaluate(hi) - 1.0) <= tol) {
        done = true;
    }
    while (!done && out.outer_iterations < max_outer_iterations) {
        ++out.outer_iterations;
        const double tau = 0.5 * (lo + hi);
        const double sum = evaluate(tau);
        if (std::abs(sum - 1.0) <= tol) {
            done = true;
            break;
        }
        if (sum < 1.0)
            lo = tau;
        else
            hi = tau;
    }
    if (!done)
        throw ConvergenceError("optimize_power_weights: outer bisection did not converge");

    out.kkt_residual = 0.0;
    for (std::size_t k = 0; k < k_users; ++k) {
        if (out.bounds[k] != EtaBound::interior)
            continue;
        const double g = out.tau - stationarity_rhs(out.eta[k], noise.eps[k], noise.r[k], p_bar);
        out.kkt_residual = std::max(out.kkt_residual, std::abs(g));
    }
    return out;
}

double weighted_rate(const EffectiveNoise &noise, double p_bar, const std::vector<double> &eta)
{
    check_noise(noise);
    if (eta.size() != noise.eps.size())
        throw DimensionMismatch("weighted_rate: eta length differs from K");
    double acc = 0.0;
    for (std::size_t k = 0; k < eta.size(); ++k) {
        for (Index l = 0; l < noise.r[k].size(); ++l) {
            const double rp = noise.r[k](l) * p_bar;
            acc += std::log2((noise.eps[k] + rp) / (noise.eps[k] + (1.0 - eta[k]) * rp));
        }
    }
    return acc;
}

Precoder build_precoder(const CMatrix &u_t, const PowerWeights &eta, double p_max_mw, Index d)
{
    if (u_t.rows() == 0 || u_t.rows() != u_t.cols())
        throw DimensionMismatch("build_precoder: U_T must be square");
    if (d < 1 || d > u_t.rows())
        throw InvalidArgument("build_precoder: d must lie in [1, M]");
    double total = 0.0;
    for (double e : eta.eta)
        total += e;
    if (std::abs(total - 1.0) > 1e-6)
        throw InvalidArgument("build_precoder: power weights must sum to one");

    Precoder w;
    w.blocks.reserve(eta.eta.size());
    for (double e : eta.eta) {
        CMatrix block = CMatrix::Zero(u_t.rows(), d);
        block.col(0) = std::sqrt(std::max(e, 0.0) * p_max_mw) * u_t.col(0);
        w.blocks.push_back(std::move(block));
    }
    return w;
}

BeamformerSolution optimize_beamformer(const LinkStats &stats, const PhaseState &theta_star,
                                       double p_max_mw, Index d)
{
    const EffectiveNoise noise = effective_noise(stats, theta_star);
    const OptimalPower power = optimal_pbar(stats.corr.t_b, p_max_mw);
    BeamformerSolution sol;
    sol.eta = optimize_power_weights(noise, power.p_bar);
    sol.p_bar = power.p_bar;
    sol.t_max = power.t_max;
    sol.w = build_precoder(power.u_t, sol.eta, p_max_mw, d);
    return sol;
}

Precoder epa_precoder(Index m, Index k, Index d, double p_max_mw, RandomStream &rng)
{
    if (m < 1 || k < 1 || d < 1 || d > m)
        throw InvalidArgument("epa_precoder: need M >= d >= 1 and K >= 1");
    if (!(p_max_mw > 0.0))
        throw InvalidArgument("epa_precoder: P_max must be positive");
    const CMatrix u = haar_unitary(m, rng);
    const double scale = std::sqrt(p_max_mw / static_cast<double>(k * d));
    Precoder w;
    w.blocks.assign(static_cast<std::size_t>(k), scale * u.leftCols(d));
    return w;
}

Precoder epa_precoder_normalized(const CMatrix &t_b, Index k, Index d, double p_max_mw,
                                 RandomStream &rng)
{
    Precoder w = epa_precoder(t_b.rows(), k, d, p_max_mw, rng);
    const double target = p_max_mw / static_cast<double>(k);
    for (Index j = 0; j < k; ++j) {
        const double current = w.correlated_power(t_b, j);
        if (!(current > 0.0))
            throw DegenerateGeometry("epa_precoder_normalized: block lies in the null space of T_B");
        w.blocks[static_cast<std::size_t>(j)] *= std::sqrt(target / current);
    }
    return w;
}

void write_beamformer_csv(const BeamformerSolution &sol, const CMatrix &t_b, std::ostream &os)
{
    os << "user,eta,tau,t_max,p_bar,power,correlated_power\n";
    for (Index k = 0; k < sol.w.users(); ++k) {
        os << k << ',' << format_double(sol.eta.eta[static_cast<std::size_t>(k)]) << ','
           << format_double(sol.eta.tau) << ',' << format_double(sol.t_max) << ','
           << format_double(sol.p_bar) << ',' << format_double(sol.w.user_power(k)) << ','
           << format_double(sol.w.correlated_power(t_b, k)) << '\n';
    }
}

} // namespace risopt
