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

#include "risopt/rate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "risopt/error.hpp"

namespace risopt {

double Precoder::total_power() const
{
    double p = 0.0;
    for (const auto &b : blocks)
        p += b.squaredNorm();
    return p;
}

double Precoder::user_power(Index k) const
{
    return blocks.at(static_cast<std::size_t>(k)).squaredNorm();
}

double Precoder::correlated_power(const CMatrix &t, Index k) const
{
    const CMatrix &b = blocks.at(static_cast<std::size_t>(k));
    if (t.rows() != b.rows() || t.cols() != b.rows())
        throw DimensionMismatch("Precoder: correlation matrix does not match the antenna count");
    // Tr(T W W^H) = Tr(W^H T W)
    return (b.adjoint() * t * b).trace().real();
}

void Precoder::check_power(double p_max_mw) const
{
    if (total_power() > p_max_mw * (1.0 + 1e-9))
        throw InvalidArgument("Precoder: total transmit power exceeds P_max");
}

namespace {

std::vector<Index> block_ranks(const Precoder &w)
{
    std::vector<Index> ranks;
    ranks.reserve(w.blocks.size());
    for (const auto &b : w.blocks)
        ranks.push_back(numerical_rank(b));
    return ranks;
}

void finish(RateReport &r)
{
    r.total = 0.0;
    for (double &x : r.per_user) {
        // log-det differences can land a few ulps below zero
        x = std::max(x, 0.0);
        r.total += x;
    }
}

} // namespace

double reflection_trace(const CMatrix &t_i, const CMatrix &r_i, const PhaseState &theta)
{
    const Index n = theta.size();
    if (t_i.rows() != n || t_i.cols() != n || r_i.rows() != n || r_i.cols() != n)
        throw DimensionMismatch("reflection_trace: T_I / R_I / Θ size mismatch");
    const CVector &v = theta.v();
    // Θ R_I Θ^H has entries v_n R_I(n, m) conj(v_m)
    const CMatrix rotated = v.asDiagonal() * r_i * v.conjugate().asDiagonal();
    return trace_product_real(t_i, rotated);
}

RateReport instantaneous_sum_rate(const ChannelRealization &real, const PhaseState &theta,
                                  const Precoder &w, std::span<const double> noise_mw)
{
    const auto k_users = w.blocks.size();
    if (real.h_iu.size() != k_users || noise_mw.size() != k_users)
        throw DimensionMismatch("instantaneous_sum_rate: user counts disagree");
    for (double s : noise_mw)
        if (!(s > 0.0))
            throw InvalidArgument("instantaneous_sum_rate: noise power must be positive");
    for (const auto &b : w.blocks)
        if (b.rows() != real.h_bi.cols())
            throw DimensionMismatch("instantaneous_sum_rate: precoder rows must equal M");

    RateReport out;
    out.kind = RateKind::instantaneous;
    out.per_user.resize(k_users);
    out.precoder_rank = block_ranks(w);

    for (std::size_t k = 0; k < k_users; ++k) {
        const CMatrix c = cascade(real.h_iu[k], theta, real.h_bi);
        const Index l = c.rows();
        CMatrix interference = noise_mw[k] * CMatrix::Identity(l, l);
        CMatrix own;
        for (std::size_t j = 0; j < k_users; ++j) {
            const CMatrix cw = c * w.blocks[j];
            CMatrix psi = cw * cw.adjoint();
            if (j == k)
                own = std::move(psi);
            else
                interference += psi;
        }
        out.per_user[k] = log2det_hpd(own + interference) - log2det_hpd(interference);
    }
    finish(out);
    return out;
}

RateReport deterministic_sum_rate(const LinkStats &stats, const PhaseState &theta,
                                  const Precoder &w)
{
    stats.validate();
    const Index n = stats.ris_elements();
    const auto k_users = static_cast<std::size_t>(stats.users());
    if (theta.size() != n)
        throw DimensionMismatch("deterministic_sum_rate: Θ length differs from N");
    if (w.blocks.size() != k_users)
        throw DimensionMismatch("deterministic_sum_rate: precoder user count differs from K");

    const double refl = reflection_trace(stats.corr.t_i.entries(), stats.corr.r_i.entries(), theta);
    if (!(refl > 1e-12 * static_cast<double>(n)))
        throw DegenerateGeometry("deterministic_sum_rate: Tr(T_I Θ R_I Θ^H) vanishes");

    std::vector<double> a(k_users);
    for (std::size_t j = 0; j < k_users; ++j)
        a[j] = w.correlated_power(stats.corr.t_b.entries(), static_cast<Index>(j));

    RateReport out;
    out.kind = RateKind::deterministic;
    out.per_user.resize(k_users);
    out.precoder_rank = block_ranks(w);

    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::size_t k = 0; k < k_users; ++k) {
        const CMatrix &r_u = stats.corr.r_u[k].entries();
        const Index l = r_u.rows();
        const double noise = stats.noise_mw[k] / (stats.phi(static_cast<Index>(k)) * refl);
        double interference_weight = 0.0;
        for (std::size_t i = 0; i < k_users; ++i)
            if (i != k)
                interference_weight += a[i];
        const CMatrix b = (interference_weight * inv_n) * r_u + noise * CMatrix::Identity(l, l);
        const CMatrix phi_k = (a[k] * inv_n) * r_u;
        out.per_user[k] = log2det_hpd(phi_k + b) - log2det_hpd(b);
    }
    finish(out);
    return out;
}

RateReport epa_identity_rate(const LinkStats &stats, double p_max_mw)
{
    stats.validate();
    if (!(p_max_mw > 0.0))
        throw InvalidArgument("epa_identity_rate: P_max must be positive");
    const Index n = stats.ris_elements();
    const auto k_users = static_cast<std::size_t>(stats.users());
    const double refl = trace_product_real(stats.corr.t_i.entries(), stats.corr.r_i.entries());
    if (!(refl > 1e-12 * static_cast<double>(n)))
        throw DegenerateGeometry("epa_identity_rate: Tr(T_I R_I) vanishes");

    const double eps = p_max_mw / (static_cast<double>(k_users) * static_cast<double>(n));
    const double others = static_cast<double>(k_users) - 1.0;

    RateReport out;
    out.kind = RateKind::epa_identity;
    out.per_user.assign(k_users, 0.0);
    for (std::size_t k = 0; k < k_users; ++k) {
        const double zeta = stats.noise_mw[k] / (stats.phi(static_cast<Index>(k)) * refl);
        const RVector &lambda = stats.corr.r_u[k].spectrum().values;
        double acc = 0.0;
        for (Index l = 0; l < lambda.size(); ++l) {
            if (lambda(l) <= 0.0)
                continue;
            // log2(1 + 1/(K-1+x)) = log2((K+x)/(K-1+x)), x = ζ/(ελ)
            const double x = zeta / (eps * lambda(l));
            acc += std::log1p(1.0 / (others + x)) / std::numbers::ln2;
        }
        out.per_user[k] = acc;
    }
    finish(out);
    return out;
}

CMatrix de_chain_rhs(const CMatrix &t1, const CMatrix &r1, const CMatrix &t2, const CMatrix &r2,
                     const CMatrix &w, double sigma1, double sigma2, Index n)
{
    if (t1.rows() != t1.cols() || w.rows() != t1.rows() || w.cols() != t1.cols())
        throw DimensionMismatch("de_chain_rhs: T1 and W must both be M x M");
    if (r1.rows() != n || r1.cols() != n || t2.rows() != n || t2.cols() != n)
        throw DimensionMismatch("de_chain_rhs: R1 and T2 must both be N x N");
    if (r2.rows() != r2.cols())
        throw DimensionMismatch("de_chain_rhs: R2 must be square");
    if (n <= 0)
        throw InvalidArgument("de_chain_rhs: N must be positive");
    const double s = sigma1 * sigma1 * sigma2 * sigma2 / static_cast<double>(n);
    const Complex scale = s * (t2 * r1).trace() * (t1 * w).trace();
    return scale * r2;
}

} // namespace risopt
