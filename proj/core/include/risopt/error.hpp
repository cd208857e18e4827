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

#include <stdexcept>
#include <string>

namespace risopt {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A caller-supplied value violates a documented precondition.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

// Shapes of matrices/vectors do not agree.
class DimensionMismatch : public InvalidArgument {
  public:
    using InvalidArgument::InvalidArgument;
};

// Tr(T_I Θ R_I Θ^H) vanished, or a user has an all-zero receive spectrum.
class DegenerateGeometry : public Error {
  public:
    using Error::Error;
};

// An iterative solver exhausted its iteration cap.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

// Matrix factorization failed where positive definiteness was expected.
class NumericalError : public Error {
  public:
    using Error::Error;
};

} // namespace risopt
