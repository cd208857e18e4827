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

#include <span>
#include <vector>

#include "risopt/linalg.hpp"

namespace risopt {

// Eigenpairs of a Hermitian PSD matrix, values sorted descending.
//
// Ties are broken deterministically: within a group of equal eigenvalues the
// columns are ordered by the row index of their dominant component, and every
// column is phase-rotated so that its dominant component is real positive.
// For a diagonal input this reproduces the identity basis.
struct EigenSpectrum {
    RVector values;
    CMatrix vectors;
};

// Spatial correlation matrix (T_B, T_I, R_I or R_U).
//
// Invariants checked on construction:
//   - Hermitian to 1e-12 (scaled by the largest entry),
//   - PSD: smallest eigenvalue >= -1e-10, values in [-1e-10, 0) clamp to 0,
//   - Tr = dim to 1e-9 (relative).
// The spectrum is computed once and kept alongside the entries.
class CorrelationMatrix {
  public:
    static constexpr double hermitian_tol = 1e-12;
    static constexpr double psd_tol = 1e-10;
    static constexpr double trace_tol = 1e-9;

    // Throws InvalidArgument when an invariant is violated.
    explicit CorrelationMatrix(CMatrix entries);

    static CorrelationMatrix identity(Index dim);

    const CMatrix &entries() const { return entries_; }
    Index dim() const { return entries_.rows(); }
    const EigenSpectrum &spectrum() const { return spectrum_; }
    double trace() const { return entries_.trace().real(); }

    // Principal square root U diag(sqrt(λ)) U^H from the clamped spectrum.
    CMatrix sqrt() const;

  private:
    CMatrix entries_;
    EigenSpectrum spectrum_;
};

// Exponential model: entry(i, j) = rho^|i - j|, 0 <= rho <= 1.
CorrelationMatrix exp_correlation(Index dim, double rho);

// Builds U diag(values) U^H; `values` must be >= 0 and sum to the dimension.
CorrelationMatrix correlation_from_spectrum(const RVector &values, const CMatrix &unitary);

EigenSpectrum eig_descending(const CorrelationMatrix &a);

// Same ordering and clamping rules for any Hermitian PSD matrix.
EigenSpectrum eig_descending_hermitian(const CMatrix &a);

// a ⪰ b: both are sorted descending, every partial sum of a dominates that
// of b, and the totals agree to 1e-9 relative. Throws on length mismatch.
bool majorizes(std::span<const double> a, std::span<const double> b);
bool majorizes(const RVector &a, const RVector &b);

} // namespace risopt
