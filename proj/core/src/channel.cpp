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

#include "risopt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "risopt/error.hpp"

namespace risopt {

double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw)
{
    return 10.0 * std::log10(mw);
}

double path_loss(double distance_m, double exponent, double d0_m)
{
    if (!(distance_m > 0.0) || !std::isfinite(distance_m))
        throw InvalidArgument("path_loss: distance must be positive");
    if (!(d0_m > 0.0) || !std::isfinite(d0_m))
        throw InvalidArgument("path_loss: reference distance must be positive");
    if (!(exponent >= 0.0) || !std::isfinite(exponent))
        throw InvalidArgument("path_loss: exponent must be non-negative");
    return std::pow(distance_m / d0_m, -exponent);
}

double PathLossModel::beta_bi() const
{
    return path_loss(bs_ris.distance_m, bs_ris.exponent, d0_m);
}

std::vector<double> PathLossModel::beta_iu() const
{
    std::vector<double> out;
    out.reserve(ris_users.size());
    for (const auto &link : ris_users)
        out.push_back(path_loss(link.distance_m, link.exponent, d0_m));
    return out;
}

void SystemConfig::validate() const
{
    if (bs_antennas < 1 || ris_elements < 1 || user_antennas < 1 || users < 1 || streams < 1)
        throw InvalidArgument("SystemConfig: M, N, L, K, d must all be positive");
    const Index kd = users * streams;
    if (kd > std::min(bs_antennas, users * user_antennas))
        throw InvalidArgument("SystemConfig: stream constraint 1 <= K d <= min(M, K L) violated (K d = " +
                              std::to_string(kd) + ")");
    if (!(p_max_mw > 0.0) || !std::isfinite(p_max_mw))
        throw InvalidArgument("SystemConfig: P_max must be positive");
    if (noise_mw.size() != static_cast<std::size_t>(users))
        throw InvalidArgument("SystemConfig: need one noise power per user");
    for (double s : noise_mw)
        if (!(s > 0.0) || !std::isfinite(s))
            throw InvalidArgument("SystemConfig: noise powers must be positive");
}

CMatrix sample_channel_from_roots(double beta, const CMatrix &rx_sqrt, const CMatrix &tx_sqrt,
                                  RandomStream &rng)
{
    if (!(beta > 0.0))
        throw InvalidArgument("sample_channel: beta must be positive");
    if (rx_sqrt.rows() != rx_sqrt.cols() || tx_sqrt.rows() != tx_sqrt.cols())
        throw DimensionMismatch("sample_channel: correlation roots must be square");
    const CMatrix g = rng.complex_gaussian(rx_sqrt.rows(), tx_sqrt.rows());
    return std::sqrt(beta) * (rx_sqrt * g * tx_sqrt);
}

CMatrix sample_channel(double beta, const CorrelationMatrix &rx, const CorrelationMatrix &tx,
                       Index rows, Index cols, RandomStream &rng)
{
    if (rx.dim() != rows || tx.dim() != cols)
        throw DimensionMismatch("sample_channel: correlation dimensions do not match the channel shape");
    return sample_channel_from_roots(beta, rx.sqrt(), tx.sqrt(), rng);
}

ChannelSampler::ChannelSampler(const LinkStats &stats)
    : beta_bi_(stats.beta_bi), beta_iu_(stats.beta_iu), sqrt_t_b_(stats.corr.t_b.sqrt()),
      sqrt_t_i_(stats.corr.t_i.sqrt()), sqrt_r_i_(stats.corr.r_i.sqrt())
{
    stats.validate();
    sqrt_r_u_.reserve(stats.corr.r_u.size());
    for (const auto &r : stats.corr.r_u)
        sqrt_r_u_.push_back(r.sqrt());
}

ChannelRealization ChannelSampler::sample(std::uint64_t seed, std::uint64_t trial) const
{
    ChannelRealization out;
    out.seed = seed;
    out.trial = trial;
    {
        RandomStream rng(StreamKey{seed, trial, links::bs_ris});
        out.h_bi = sample_channel_from_roots(beta_bi_, sqrt_r_i_, sqrt_t_b_, rng);
    }
    out.h_iu.reserve(sqrt_r_u_.size());
    for (std::size_t k = 0; k < sqrt_r_u_.size(); ++k) {
        RandomStream rng(StreamKey{seed, trial, links::ris_user + k});
        out.h_iu.push_back(sample_channel_from_roots(beta_iu_[k], sqrt_r_u_[k], sqrt_t_i_, rng));
    }
    return out;
}

CMatrix cascade(const CMatrix &h_iu_k, const PhaseState &theta, const CMatrix &h_bi)
{
    const Index n = theta.size();
    if (h_iu_k.cols() != n || h_bi.rows() != n)
        throw DimensionMismatch("cascade: RIS dimension mismatch");
    for (Index i = 0; i < n; ++i)
        if (std::abs(std::abs(theta.v()(i)) - 1.0) > PhaseState::unit_modulus_tol)
            throw InvalidArgument("cascade: phase vector is not unit-modulus");
    return h_iu_k * (theta.v().asDiagonal() * h_bi);
}

} // namespace risopt
