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

#include <complex>

#include <Eigen/Dense>

namespace risopt {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

// (X + X^H) / 2
CMatrix hermitian_part(const CMatrix &x);

// log2 det(X) for Hermitian positive-definite X, symmetrized before the
// Cholesky factorization. Throws NumericalError when X is not PD.
double log2det_hpd(const CMatrix &x);

// Real part of Tr(A B) without forming the product.
double trace_product_real(const CMatrix &a, const CMatrix &b);

// Numerical rank from singular values, relative tolerance `rel_tol`.
Index numerical_rank(const CMatrix &x, double rel_tol = 1e-10);

} // namespace risopt
