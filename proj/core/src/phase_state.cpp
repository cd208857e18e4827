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

#include "risopt/phase_state.hpp"

#include <cmath>
#include <numbers>

#include "risopt/error.hpp"

namespace risopt {

double wrap_phase(double theta)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double w = std::fmod(theta, two_pi);
    if (w < 0.0)
        w += two_pi;
    if (w >= two_pi)
        w = 0.0;
    return w;
}

PhaseState PhaseState::identity(Index n)
{
    if (n <= 0)
        throw InvalidArgument("PhaseState: size must be positive");
    return PhaseState(CVector::Ones(n), RVector::Zero(n));
}

PhaseState PhaseState::from_phases(const RVector &theta)
{
    if (theta.size() == 0)
        throw InvalidArgument("PhaseState: size must be positive");
    RVector wrapped(theta.size());
    CVector v(theta.size());
    for (Index n = 0; n < theta.size(); ++n) {
        if (!std::isfinite(theta(n)))
            throw InvalidArgument("PhaseState: non-finite phase");
        wrapped(n) = wrap_phase(theta(n));
        v(n) = std::polar(1.0, wrapped(n));
    }
    return PhaseState(std::move(v), std::move(wrapped));
}

PhaseState PhaseState::from_unit_vector(const CVector &v)
{
    if (v.size() == 0)
        throw InvalidArgument("PhaseState: size must be positive");
    RVector theta(v.size());
    for (Index n = 0; n < v.size(); ++n) {
        if (std::abs(std::abs(v(n)) - 1.0) > unit_modulus_tol)
            throw InvalidArgument("PhaseState: entry is not unit-modulus");
        theta(n) = wrap_phase(std::arg(v(n)));
    }
    return PhaseState(v, std::move(theta));
}

} // namespace risopt
