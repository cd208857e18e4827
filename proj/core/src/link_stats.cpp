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

#include "risopt/link_stats.hpp"

#include <cmath>

#include "risopt/error.hpp"

namespace risopt {

double LinkStats::phi(Index k) const
{
    return static_cast<double>(ris_elements()) * beta_iu.at(static_cast<std::size_t>(k)) * beta_bi;
}

void LinkStats::validate() const
{
    const auto k = static_cast<std::size_t>(users());
    if (k == 0)
        throw InvalidArgument("LinkStats: at least one user is required");
    if (beta_iu.size() != k || noise_mw.size() != k)
        throw DimensionMismatch("LinkStats: beta_iu / noise_mw must have one entry per user");
    if (!(beta_bi > 0.0) || !std::isfinite(beta_bi))
        throw InvalidArgument("LinkStats: beta_bi must be positive");
    for (std::size_t i = 0; i < k; ++i) {
        if (!(beta_iu[i] > 0.0) || !std::isfinite(beta_iu[i]))
            throw InvalidArgument("LinkStats: beta_iu must be positive");
        if (!(noise_mw[i] > 0.0) || !std::isfinite(noise_mw[i]))
            throw InvalidArgument("LinkStats: noise power must be positive");
        if (corr.r_u[i].dim() != user_antennas())
            throw DimensionMismatch("LinkStats: all R_U must share the user antenna count");
    }
    if (corr.r_i.dim() != corr.t_i.dim())
        throw DimensionMismatch("LinkStats: T_I and R_I must both be N x N");
}

} // namespace risopt
