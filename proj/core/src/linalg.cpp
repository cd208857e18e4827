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

#include "risopt/linalg.hpp"

#include <cmath>

#include "risopt/error.hpp"

namespace risopt {

CMatrix hermitian_part(const CMatrix &x)
{
    return (x + x.adjoint()) * 0.5;
}

double log2det_hpd(const CMatrix &x)
{
    if (x.rows() != x.cols())
        throw DimensionMismatch("log2det_hpd: matrix is not square");
    Eigen::LLT<CMatrix> llt(hermitian_part(x));
    if (llt.info() != Eigen::Success)
        throw NumericalError("log2det_hpd: matrix is not positive definite");
    const auto &l = llt.matrixLLT();
    double acc = 0.0;
    for (Index i = 0; i < l.rows(); ++i)
        acc += std::log2(l(i, i).real());
    return 2.0 * acc;
}

double trace_product_real(const CMatrix &a, const CMatrix &b)
{
    if (a.cols() != b.rows() || a.rows() != b.cols())
        throw DimensionMismatch("trace_product_real: incompatible shapes");
    // Tr(AB) = sum_ij A_ij B_ji
    return (a.array() * b.transpose().array()).sum().real();
}

Index numerical_rank(const CMatrix &x, double rel_tol)
{
    if (x.size() == 0)
        return 0;
    Eigen::JacobiSVD<CMatrix> svd(x);
    const auto &s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0)
        return 0;
    Index r = 0;
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0))
            ++r;
    return r;
}

} // namespace risopt
