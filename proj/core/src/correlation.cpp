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

#include "risopt/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "risopt/error.hpp"

namespace risopt {

namespace {

Index dominant_row(const CMatrix &v, Index col)
{
    Index best = 0;
    double best_abs = -1.0;
    for (Index i = 0; i < v.rows(); ++i) {
        const double a = std::abs(v(i, col));
        // strict comparison keeps the lowest index on exact ties
        if (a > best_abs * (1.0 + 1e-12)) {
            best_abs = a;
            best = i;
        }
    }
    return best;
}

EigenSpectrum ordered_spectrum(const CMatrix &a)
{
    const Index n = a.rows();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a));
    if (solver.info() != Eigen::Success)
        throw NumericalError("eigendecomposition did not converge");

    const RVector &raw_values = solver.eigenvalues();
    const CMatrix &raw_vectors = solver.eigenvectors();

    double scale = 0.0;
    for (Index i = 0; i < n; ++i)
        scale = std::max(scale, std::abs(raw_values(i)));
    const double tie_tol = 1e-12 * std::max(1.0, scale);

    std::vector<Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Index{0});
    std::vector<Index> dom(static_cast<std::size_t>(n));
    for (Index j = 0; j < n; ++j)
        dom[static_cast<std::size_t>(j)] = dominant_row(raw_vectors, j);

    std::stable_sort(order.begin(), order.end(),
                     [&](Index x, Index y) { return raw_values(x) > raw_values(y); });
    std::vector<double> sorted_values(order.size());
    for (std::size_t j = 0; j < order.size(); ++j)
        sorted_values[j] = raw_values(order[j]);
    // Within runs of (numerically) equal values order by dominant component.
    for (std::size_t start = 0; start < order.size();) {
        std::size_t stop = start + 1;
        while (stop < order.size() &&
               raw_values(order[start]) - raw_values(order[stop]) <= tie_tol)
            ++stop;
        std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(start),
                         order.begin() + static_cast<std::ptrdiff_t>(stop),
                         [&](Index x, Index y) {
                             return dom[static_cast<std::size_t>(x)] <
                                    dom[static_cast<std::size_t>(y)];
                         });
        start = stop;
    }

    EigenSpectrum out;
    out.values.resize(n);
    out.vectors.resize(n, n);
    for (Index j = 0; j < n; ++j) {
        const Index src = order[static_cast<std::size_t>(j)];
        double value = sorted_values[static_cast<std::size_t>(j)];
        if (value < -CorrelationMatrix::psd_tol)
            throw InvalidArgument("matrix is not positive semi-definite (eigenvalue " +
                                  std::to_string(value) + ")");
        if (value < 0.0)
            value = 0.0;
        out.values(j) = value;
        CVector col = raw_vectors.col(src);
        const Complex pivot = col(dom[static_cast<std::size_t>(src)]);
        if (std::abs(pivot) > 0.0)
            col *= std::conj(pivot) / std::abs(pivot);
        out.vectors.col(j) = col;
    }
    return out;
}

} // namespace

CorrelationMatrix::CorrelationMatrix(CMatrix entries) : entries_(std::move(entries))
{
    const Index n = entries_.rows();
    if (n == 0 || entries_.cols() != n)
        throw InvalidArgument("correlation matrix must be square and non-empty");
    if (!entries_.allFinite())
        throw InvalidArgument("correlation matrix has non-finite entries");

    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > hermitian_tol * scale)
        throw InvalidArgument("correlation matrix is not Hermitian");

    const double tr = entries_.trace().real();
    if (std::abs(tr - static_cast<double>(n)) > trace_tol * static_cast<double>(n))
        throw InvalidArgument("correlation matrix trace " + std::to_string(tr) +
                              " differs from its dimension " + std::to_string(n));

    spectrum_ = ordered_spectrum(entries_);
}

CorrelationMatrix CorrelationMatrix::identity(Index dim)
{
    if (dim <= 0)
        throw InvalidArgument("identity correlation: dim must be positive");
    return CorrelationMatrix(CMatrix::Identity(dim, dim));
}

CMatrix CorrelationMatrix::sqrt() const
{
    const RVector root = spectrum_.values.cwiseSqrt();
    return spectrum_.vectors * root.cast<Complex>().asDiagonal() * spectrum_.vectors.adjoint();
}

CorrelationMatrix exp_correlation(Index dim, double rho)
{
    if (dim <= 0)
        throw InvalidArgument("exp_correlation: dim must be positive");
    if (!(rho >= 0.0 && rho <= 1.0))
        throw InvalidArgument("exp_correlation: rho must lie in [0, 1]");
    CMatrix a(dim, dim);
    for (Index i = 0; i < dim; ++i)
        for (Index j = 0; j < dim; ++j)
            a(i, j) = (i == j) ? 1.0 : std::pow(rho, static_cast<double>(std::abs(i - j)));
    return CorrelationMatrix(std::move(a));
}

CorrelationMatrix correlation_from_spectrum(const RVector &values, const CMatrix &unitary)
{
    if (unitary.rows() != values.size() || unitary.cols() != values.size())
        throw DimensionMismatch("correlation_from_spectrum: unitary/values size mismatch");
    if ((values.array() < 0.0).any())
        throw InvalidArgument("correlation_from_spectrum: negative eigenvalue");
    CMatrix a = unitary * values.cast<Complex>().asDiagonal() * unitary.adjoint();
    return CorrelationMatrix(hermitian_part(a));
}

EigenSpectrum eig_descending(const CorrelationMatrix &a)
{
    return a.spectrum();
}

EigenSpectrum eig_descending_hermitian(const CMatrix &a)
{
    if (a.rows() != a.cols())
        throw DimensionMismatch("eig_descending_hermitian: matrix is not square");
    return ordered_spectrum(a);
}

bool majorizes(std::span<const double> a, std::span<const double> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch("majorizes: vectors differ in length");
    std::vector<double> x(a.begin(), a.end());
    std::vector<double> y(b.begin(), b.end());
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());

    const double total_x = std::accumulate(x.begin(), x.end(), 0.0);
    const double total_y = std::accumulate(y.begin(), y.end(), 0.0);
    const double scale = std::max({1.0, std::abs(total_x), std::abs(total_y)});
    if (std::abs(total_x - total_y) > 1e-9 * scale)
        return false;

    double px = 0.0;
    double py = 0.0;
    const double slack = 1e-12 * scale;
    for (std::size_t k = 0; k + 1 < x.size(); ++k) {
        px += x[k];
        py += y[k];
        if (px < py - slack)
            return false;
    }
    return true;
}

bool majorizes(const RVector &a, const RVector &b)
{
    return majorizes(std::span<const double>(a.data(), static_cast<std::size_t>(a.size())),
                     std::span<const double>(b.data(), static_cast<std::size_t>(b.size())));
}

} // namespace risopt
