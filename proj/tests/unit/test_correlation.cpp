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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "risopt/correlation.hpp"
#include "risopt/error.hpp"

using namespace risopt;

namespace {

double reconstruction_error(const CMatrix &a, const EigenSpectrum &s)
{
    const CMatrix back = s.vectors * s.values.cast<Complex>().asDiagonal() * s.vectors.adjoint();
    return (back - a).norm();
}

} // namespace

TEST(ExpCorrelation, ZeroRhoIsIdentity)
{
    const auto c = exp_correlation(3, 0.0);
    EXPECT_TRUE(c.entries().isApprox(CMatrix::Identity(3, 3)));
}

TEST(ExpCorrelation, TwoByTwoClosedForm)
{
    const auto c = exp_correlation(2, 0.5);
    EXPECT_DOUBLE_EQ(c.entries()(0, 1).real(), 0.5);
    EXPECT_DOUBLE_EQ(c.entries()(1, 0).real(), 0.5);
    EXPECT_NEAR(c.spectrum().values(0), 1.5, 1e-14);
    EXPECT_NEAR(c.spectrum().values(1), 0.5, 1e-14);
}

TEST(ExpCorrelation, StrongerRhoMajorizes)
{
    EXPECT_TRUE(majorizes(exp_correlation(4, 0.9).spectrum().values,
                          exp_correlation(4, 0.2).spectrum().values));
    EXPECT_FALSE(majorizes(exp_correlation(4, 0.2).spectrum().values,
                           exp_correlation(4, 0.9).spectrum().values));
}

TEST(ExpCorrelation, RhoOneIsRankOne)
{
    const auto c = exp_correlation(5, 1.0);
    EXPECT_NEAR(c.spectrum().values(0), 5.0, 1e-12);
    for (Index i = 1; i < 5; ++i)
        EXPECT_EQ(c.spectrum().values(i), 0.0);
}

TEST(ExpCorrelation, RejectsBadArguments)
{
    EXPECT_THROW(exp_correlation(3, -0.1), InvalidArgument);
    EXPECT_THROW(exp_correlation(3, 1.1), InvalidArgument);
    EXPECT_THROW(exp_correlation(0, 0.5), InvalidArgument);
}

TEST(ExpCorrelation, InvariantsAcrossSampledSizes)
{
    RandomStream rng(11);
    for (int s = 0; s < 40; ++s) {
        const auto n = static_cast<Index>(1 + std::floor(rng.uniform() * 512));
        const double rho = s == 0 ? 1.0 : rng.uniform();
        const auto c = exp_correlation(n, rho);
        const CMatrix &e = c.entries();
        EXPECT_EQ((e - e.adjoint()).norm(), 0.0);
        EXPECT_EQ(e.imag().norm(), 0.0);
        for (Index i = 0; i < n; ++i)
            EXPECT_EQ(e(i, i).real(), 1.0);
        EXPECT_NEAR(c.trace(), static_cast<double>(n), 1e-9 * n);
        EXPECT_GE(c.spectrum().values.minCoeff(), 0.0);
    }
}

TEST(ExpCorrelation, SpectrumMajorizationIsMonotoneInRho)
{
    RandomStream rng(12);
    for (int s = 0; s < 60; ++s) {
        const auto n = static_cast<Index>(2 + std::floor(rng.uniform() * 63));
        double r1 = rng.uniform(), r2 = rng.uniform();
        if (r1 < r2)
            std::swap(r1, r2);
        if (r1 == r2)
            continue;
        EXPECT_TRUE(majorizes(exp_correlation(n, r1).spectrum().values,
                              exp_correlation(n, r2).spectrum().values))
            << "n=" << n << " rho1=" << r1 << " rho2=" << r2;
    }
}

TEST(CorrelationMatrix, RejectsNonHermitian)
{
    CMatrix a = CMatrix::Identity(2, 2);
    a(0, 1) = 0.3;
    EXPECT_THROW(CorrelationMatrix{a}, InvalidArgument);
}

TEST(CorrelationMatrix, RejectsWrongTrace)
{
    EXPECT_THROW(CorrelationMatrix{CMatrix(2.0 * CMatrix::Identity(3, 3))}, InvalidArgument);
}

TEST(CorrelationMatrix, RejectsIndefinite)
{
    CMatrix a(2, 2);
    a << 1.0, 2.0, 2.0, 1.0; // eigenvalues 3, -1
    EXPECT_THROW(CorrelationMatrix{a}, InvalidArgument);
}

TEST(CorrelationMatrix, ClampsTinyNegativeEigenvalues)
{
    CMatrix u = CMatrix::Identity(3, 3);
    RVector vals(3);
    vals << 2.0 + 5e-11, 1.0, -5e-11;
    const CMatrix a = u * vals.cast<Complex>().asDiagonal() * u.adjoint();
    const CorrelationMatrix c(a);
    EXPECT_EQ(c.spectrum().values(2), 0.0);
}

TEST(CorrelationMatrix, RejectsNonSquareAndEmpty)
{
    EXPECT_THROW(CorrelationMatrix{CMatrix(2, 3)}, InvalidArgument);
    EXPECT_THROW(CorrelationMatrix{CMatrix(0, 0)}, InvalidArgument);
}

TEST(EigDescending, IdentityKeepsIdentityBasis)
{
    const auto s = eig_descending(CorrelationMatrix::identity(3));
    EXPECT_TRUE(s.values.isApprox(RVector::Ones(3)));
    EXPECT_TRUE(s.vectors.isApprox(CMatrix::Identity(3, 3)));
}

TEST(EigDescending, DiagonalTiesFollowIndexOrder)
{
    CMatrix a = CMatrix::Zero(4, 4);
    a.diagonal() << 0.5, 1.5, 0.5, 1.5;
    const auto s = eig_descending_hermitian(a);
    EXPECT_DOUBLE_EQ(s.values(0), 1.5);
    EXPECT_DOUBLE_EQ(s.values(3), 0.5);
    EXPECT_NEAR(std::abs(s.vectors(1, 0)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.vectors(3, 1)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.vectors(0, 2)), 1.0, 1e-14);
    EXPECT_NEAR(std::abs(s.vectors(2, 3)), 1.0, 1e-14);
    for (Index j = 0; j < 4; ++j) {
        Index arg = 0;
        s.vectors.col(j).cwiseAbs().maxCoeff(&arg);
        EXPECT_GT(s.vectors(arg, j).real(), 0.0);
        EXPECT_EQ(s.vectors(arg, j).imag(), 0.0);
    }
}

TEST(EigDescending, TwoByTwo)
{
    const auto s = eig_descending(exp_correlation(2, 0.5));
    EXPECT_NEAR(s.values(0), 1.5, 1e-14);
    EXPECT_NEAR(s.values(1), 0.5, 1e-14);
}

TEST(EigDescending, ReconstructsRandomPsd)
{
    RandomStream rng(13);
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<Index>(2 + std::floor(rng.uniform() * 30));
        const auto rank = static_cast<Index>(1 + std::floor(rng.uniform() * n));
        const auto c = oracle::random_correlation(n, rng, rank);
        const auto &s = c.spectrum();
        EXPECT_LT(reconstruction_error(c.entries(), s), 1e-8 * n);
        EXPECT_LT((s.vectors.adjoint() * s.vectors - CMatrix::Identity(n, n)).norm(), 1e-9);
        for (Index i = 0; i + 1 < n; ++i)
            EXPECT_GE(s.values(i), s.values(i + 1));
        EXPECT_GE(s.values.minCoeff(), 0.0);
    }
}

TEST(EigDescending, IsDeterministic)
{
    RandomStream a(14), b(14);
    const auto c1 = oracle::random_correlation(12, a);
    const auto c2 = oracle::random_correlation(12, b);
    EXPECT_EQ(eig_descending(c1).vectors, eig_descending(c2).vectors);
}

TEST(CorrelationFromSpectrum, RoundTrip)
{
    RandomStream rng(15);
    const CMatrix u = haar_unitary(6, rng);
    const RVector vals = oracle::random_spectrum(6, 6.0, rng);
    const auto c = correlation_from_spectrum(vals, u);
    RVector sorted = vals;
    std::sort(sorted.data(), sorted.data() + sorted.size(), std::greater<>());
    EXPECT_LT((c.spectrum().values - sorted).norm(), 1e-12);
}

TEST(Majorizes, Examples)
{
    const std::vector<double> full{4, 0, 0, 0};
    const std::vector<double> flat{1, 1, 1, 1};
    EXPECT_TRUE(majorizes(full, flat));
    EXPECT_FALSE(majorizes(flat, full));
    EXPECT_TRUE(majorizes(flat, flat));
    const std::vector<double> a{2, 1, 1}, b{2, 2, 0};
    EXPECT_FALSE(majorizes(a, b));
    EXPECT_TRUE(majorizes(b, a));
}

TEST(Majorizes, UnsortedInputIsSortedFirst)
{
    const std::vector<double> a{0, 0, 3}, b{1, 1, 1};
    EXPECT_TRUE(majorizes(a, b));
}

TEST(Majorizes, UnequalTotalsAreNotComparable)
{
    const std::vector<double> a{3, 0}, b{1, 1};
    EXPECT_FALSE(majorizes(a, b));
}

TEST(Majorizes, LengthMismatchThrows)
{
    const std::vector<double> a{1, 1}, b{1, 1, 0};
    EXPECT_THROW(majorizes(a, b), DimensionMismatch);
}

TEST(Majorizes, PreorderOnSampledTriples)
{
    RandomStream rng(16);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<Index>(2 + std::floor(rng.uniform() * 10));
        const RVector a = oracle::random_spectrum(n, static_cast<double>(n), rng);
        const RVector b = oracle::doubly_stochastic_image(a, rng);
        const RVector c = oracle::doubly_stochastic_image(b, rng);
        EXPECT_TRUE(majorizes(a, a));
        EXPECT_TRUE(majorizes(a, b));
        EXPECT_TRUE(majorizes(b, c));
        EXPECT_TRUE(majorizes(a, c));
    }
}
