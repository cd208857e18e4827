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

#include "risopt/rng.hpp"

using namespace risopt;

TEST(RandomStream, SameKeySameSequence)
{
    RandomStream a(StreamKey{7, 3, 1}), b(StreamKey{7, 3, 1});
    for (int i = 0; i < 100; ++i)
        EXPECT_EQ(a.complex_normal(), b.complex_normal());
}

TEST(RandomStream, DistinctKeysDiffer)
{
    EXPECT_NE(derive_seed({7, 3, 1}), derive_seed({7, 3, 2}));
    EXPECT_NE(derive_seed({7, 3, 1}), derive_seed({7, 4, 1}));
    EXPECT_NE(derive_seed({7, 3, 1}), derive_seed({8, 3, 1}));
    EXPECT_NE(derive_seed({0, 1, 0}), derive_seed({0, 0, 1}));
}

TEST(RandomStream, ComplexNormalSplitsVarianceEvenly)
{
    RandomStream rng(21);
    const int n = 200000;
    double re2 = 0.0, im2 = 0.0, cross = 0.0;
    for (int i = 0; i < n; ++i) {
        const Complex z = rng.complex_normal();
        re2 += z.real() * z.real();
        im2 += z.imag() * z.imag();
        cross += z.real() * z.imag();
    }
    // sd of each mean-square estimate is sqrt(2/n) * 0.5
    const double se = 0.5 * std::sqrt(2.0 / n);
    EXPECT_NEAR(re2 / n, 0.5, 4 * se);
    EXPECT_NEAR(im2 / n, 0.5, 4 * se);
    EXPECT_NEAR(cross / n, 0.0, 4 * se);
}

TEST(RandomStream, UniformInUnitInterval)
{
    RandomStream rng(22);
    for (int i = 0; i < 10000; ++i) {
        const double u = rng.uniform();
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
}

TEST(HaarUnitary, IsUnitary)
{
    RandomStream rng(23);
    for (Index n : {1, 2, 5, 16}) {
        const CMatrix u = haar_unitary(n, rng);
        EXPECT_LT((u.adjoint() * u - CMatrix::Identity(n, n)).norm(), 1e-12);
    }
}

TEST(HaarUnitary, FirstEntryHasUniformMagnitudeLaw)
{
    // |U_11|^2 ~ Beta(1, n - 1): mean 1/n.
    RandomStream rng(24);
    const Index n = 4;
    const int draws = 20000;
    double acc = 0.0;
    for (int i = 0; i < draws; ++i)
        acc += std::norm(haar_unitary(n, rng)(0, 0));
    const double var = (n - 1.0) / (n * n * (n + 1.0));
    EXPECT_NEAR(acc / draws, 1.0 / n, 4 * std::sqrt(var / draws));
}
