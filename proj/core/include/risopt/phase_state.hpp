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

#include "risopt/linalg.hpp"

namespace risopt {

// RIS reflection state: v_n = exp(j θ_n), θ_n wrapped to [0, 2π).
class PhaseState {
  public:
    static constexpr double unit_modulus_tol = 1e-9;

    // Θ = I
    static PhaseState identity(Index n);
    static PhaseState from_phases(const RVector &theta);
    // Throws InvalidArgument when some |v_n| deviates from 1 beyond 1e-9.
    static PhaseState from_unit_vector(const CVector &v);

    const CVector &v() const { return v_; }
    const RVector &theta() const { return theta_; }
    Index size() const { return v_.size(); }

  private:
    PhaseState(CVector v, RVector theta) : v_(std::move(v)), theta_(std::move(theta)) {}

    CVector v_;
    RVector theta_;
};

double wrap_phase(double theta);

} // namespace risopt
