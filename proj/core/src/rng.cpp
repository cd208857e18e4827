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

#include "risopt/rng.hpp"

#include <cmath>

namespace risopt {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t derive_seed(const StreamKey &key)
{
    std::uint64_t h = splitmix64(key.run_seed);
    h = splitmix64(h ^ key.trial);
    h = splitmix64(h ^ (key.link * 0xd6e8feb86659fd93ULL));
    return h;
}

RandomStream::RandomStream(const StreamKey &key) : engine_(derive_seed(key)) {}

RandomStream::RandomStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double RandomStream::uniform()
{
    return uniform_(engine_);
}

double RandomStream::standard_normal()
{
    return normal_(engine_);
}

Complex RandomStream::complex_normal()
{
    static const double half_sqrt = std::sqrt(0.5);
    const double re = normal_(engine_);
    const double im = normal_(engine_);
    return {re * half_sqrt, im * half_sqrt};
}

CMatrix RandomStream::complex_gaussian(Index rows, Index cols)
{
    CMatrix g(rows, cols);
    // column-major fill order is part of the reproducibility contract
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i)
            g(i, j) = complex_normal();
    return g;
}

CMatrix haar_unitary(Index n, RandomStream &rng)
{
    const CMatrix z = rng.complex_gaussian(n, n);
    Eigen::HouseholderQR<CMatrix> qr(z);
    CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        const Complex d = r(j, j);
        if (std::abs(d) > 0.0)
            q.col(j) *= d / std::abs(d);
    }
    return q;
}

} // namespace risopt
