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

#include <vector>

#include "risopt/correlation.hpp"

namespace risopt {

// The four correlation families. R_I and T_I are shared by all users.
struct CorrelationSet {
    CorrelationMatrix t_b; // M x M, BS transmit side
    CorrelationMatrix t_i; // N x N, RIS transmit (reflect) side
    CorrelationMatrix r_i; // N x N, RIS receive side
    std::vector<CorrelationMatrix> r_u; // K matrices, L x L
};

// Statistical CSI: everything the optimizers are allowed to see.
struct LinkStats {
    double beta_bi = 1.0;
    std::vector<double> beta_iu;
    CorrelationSet corr;
    std::vector<double> noise_mw;

    Index bs_antennas() const { return corr.t_b.dim(); }
    Index ris_elements() const { return corr.t_i.dim(); }
    Index user_antennas() const { return corr.r_u.empty() ? 0 : corr.r_u.front().dim(); }
    Index users() const { return static_cast<Index>(corr.r_u.size()); }

    // φ_k = N β_IU,k β_BI
    double phi(Index k) const;

    // Throws InvalidArgument / DimensionMismatch on inconsistent content.
    void validate() const;
};

} // namespace risopt
