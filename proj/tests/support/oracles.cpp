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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace risopt::oracle {

CorrelationMatrix random_correlation(Index n, RandomStream &rng, Index rank)
{
    if (rank < 0)
        rank = n;
    const CMatrix a = rng.complex_gaussian(n, rank);
    CMatrix c = a * a.adjoint();
    c = 0.5 * (c + c.adjoint()).eval();
    c *= static_cast<double>(n) / c.trace().real();
    return CorrelationMatrix(c);
}

RVector random_spectrum(Index n, double total, RandomStream &rng)
{
    RVector x(n);
    for (Index i = 0; i < n; ++i)
        x(i) = -std::log(1.0 - rng.uniform());
    return x * (total / x.sum());
}

RVector doubly_stochastic_image(const RVector &a, RandomStream &rng, int terms)
{
    const Index n = a.size();
    std::vector<double> w(static_cast<std::size_t>(terms));
    double wsum = 0.0;
    for (auto &x : w) {
        x = rng.uniform() + 1e-3;
        wsum += x;
    }
    RVector b = RVector::Zero(n);
    std::vector<Index> perm(static_cast<std::size_t>(n));
    for (int t = 0; t < terms; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        for (Index i = n - 1; i > 0; --i) {
            const auto j = static_cast<Index>(rng.uniform() * static_cast<double>(i + 1));
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(std::min(j, i))]);
        }
        for (Index i = 0; i < n; ++i)
            b(i) += w[static_cast<std::size_t>(t)] / wsum * a(perm[static_cast<std::size_t>(i)]);
    }
    return b;
}

double two_phase_grid_max(const CMatrix &xi, int points)
{
    double best = -std::numeric_limits<double>::infinity();
    CVector v(2);
    v(0) = 1.0;
    for (int i = 0; i < points; ++i) {
        const double th = 2.0 * std::numbers::pi * i / points;
        v(1) = std::polar(1.0, th);
        best = std::max(best, (v.adjoint() * xi * v)(0).real());
    }
    return best;
}

namespace {

double objective_at(const CMatrix &xi, const RVector &theta)
{
    CVector v(theta.size());
    for (Index i = 0; i < theta.size(); ++i)
        v(i) = std::polar(1.0, theta(i));
    return (v.adjoint() * xi * v)(0).real();
}

} // namespace

RVector fd_phase_gradient(const CMatrix &xi, const RVector &theta, double h)
{
    RVector g(theta.size());
    for (Index n = 0; n < theta.size(); ++n) {
        RVector tp = theta, tm = theta;
        tp(n) += h;
        tm(n) -= h;
        g(n) = (objective_at(xi, tp) - objective_at(xi, tm)) / (2.0 * h);
    }
    return g;
}

double best_random_phases(const CMatrix &xi, int draws, RandomStream &rng)
{
    double best = -std::numeric_limits<double>::infinity();
    RVector th(xi.rows());
    for (int d = 0; d < draws; ++d) {
        for (Index i = 0; i < th.size(); ++i)
            th(i) = 2.0 * std::numbers::pi * rng.uniform();
        best = std::max(best, objective_at(xi, th));
    }
    return best;
}

double power_split_objective(const EffectiveNoise &noise, double p_bar,
                             const std::vector<double> &eta)
{
    double acc = 0.0;
    for (std::size_t k = 0; k < eta.size(); ++k)
        for (Index l = 0; l < noise.r[k].size(); ++l)
            acc += std::log(noise.eps[k] + (1.0 - eta[k]) * noise.r[k](l) * p_bar);
    return acc;
}

namespace {

template <class Better>
GridPoint grid_search(const EffectiveNoise &noise, double p_bar, int points, Better better)
{
    GridPoint best;
    bool first = true;
    for (int i = 0; i < points; ++i) {
        const double e1 = static_cast<double>(i) / (points - 1);
        const double val = power_split_objective(noise, p_bar, {e1, 1.0 - e1});
        if (first || better(val, best.value)) {
            best = {e1, val};
            first = false;
        }
    }
    return best;
}

} // namespace

GridPoint power_split_grid_min(const EffectiveNoise &noise, double p_bar, int points)
{
    return grid_search(noise, p_bar, points, [](double a, double b) { return a < b; });
}

GridPoint power_split_grid_max(const EffectiveNoise &noise, double p_bar, int points)
{
    return grid_search(noise, p_bar, points, [](double a, double b) { return a > b; });
}

double epa_identity_rate_det(const LinkStats &stats, double p_max_mw)
{
    const auto k_users = static_cast<double>(stats.users());
    const auto n = static_cast<double>(stats.ris_elements());
    const double eps = p_max_mw / (k_users * n);
    const double tr = (stats.corr.t_i.entries() * stats.corr.r_i.entries()).trace().real();
    double total = 0.0;
    for (Index k = 0; k < stats.users(); ++k) {
        const double zeta = stats.noise_mw[static_cast<std::size_t>(k)] / (stats.phi(k) * tr);
        const CMatrix &r = stats.corr.r_u[static_cast<std::size_t>(k)].entries();
        const CMatrix id = CMatrix::Identity(r.rows(), r.cols());
        const CMatrix num = eps * k_users * r + zeta * id;
        const CMatrix den = eps * (k_users - 1.0) * r + zeta * id;
        total += std::log2(std::abs(num.determinant()) / std::abs(den.determinant()));
    }
    return total;
}

CMatrix random_precoder(Index m, Index cols, double p, RandomStream &rng)
{
    CMatrix w = rng.complex_gaussian(m, cols);
    return w * std::sqrt(p / w.squaredNorm());
}

} // namespace risopt::oracle
