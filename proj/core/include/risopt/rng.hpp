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

#include <cstdint>
#include <random>

#include "risopt/linalg.hpp"

namespace risopt {

// Identifies one independent random stream: (run seed, trial, link).
// Streams for distinct keys are statistically independent, so trials can be
// generated in any order and on any thread.
struct StreamKey {
    std::uint64_t run_seed = 0;
    std::uint64_t trial = 0;
    std::uint64_t link = 0;
};

namespace links {
inline constexpr std::uint64_t bs_ris = 0;
// RIS -> user k uses ris_user + k
inline constexpr std::uint64_t ris_user = 1;
inline constexpr std::uint64_t epa_unitary = 1ULL << 32;
inline constexpr std::uint64_t random_phase = (1ULL << 32) + 1;
inline constexpr std::uint64_t initial_phase = (1ULL << 32) + 2;
} // namespace links

std::uint64_t derive_seed(const StreamKey &key);

class RandomStream {
  public:
    explicit RandomStream(const StreamKey &key);
    explicit RandomStream(std::uint64_t seed);

    double uniform();         // [0, 1)
    double standard_normal(); // N(0, 1)
    // CN(0, 1): real and imaginary parts each N(0, 1/2)
    Complex complex_normal();

    CMatrix complex_gaussian(Index rows, Index cols);

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Haar-distributed n x n unitary (QR of a CN(0,1) matrix with the phases of
// diag(R) absorbed into Q).
CMatrix haar_unitary(Index n, RandomStream &rng);

} // namespace risopt
