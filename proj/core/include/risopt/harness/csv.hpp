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
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "risopt/linalg.hpp"

namespace risopt::harness {

struct ResultRow {
    double sweep_value = 0.0;
    std::string scheme;
    double rate_mean = 0.0;
    double rate_stderr = 0.0;
    double rate_deterministic = 0.0;
    std::uint64_t trials = 0;

    bool operator==(const ResultRow &) const = default;
};

struct ResultTable {
    std::vector<ResultRow> rows;

    bool operator==(const ResultTable &) const = default;
};

inline constexpr const char *result_header =
    "sweep_value,scheme,rate_mean,rate_stderr,rate_deterministic,trials";

void write_result_csv(const ResultTable &table, std::ostream &os);
// Throws InvalidArgument on a malformed header or row.
ResultTable read_result_csv(std::istream &is);

// Writes `csv_path` and, next to it, `<stem>.manifest.json` holding
// `manifest`. Throws Error naming the path on I/O failure.
void emit(const ResultTable &table, const std::string &manifest,
          const std::filesystem::path &csv_path);

// Opens `path` for writing or throws Error naming it.
void write_text_file(const std::filesystem::path &path, const std::string &content);

// CSV-matrix: one row per line, comma-separated `re+imj` entries.
std::string format_complex(Complex z);
Complex parse_complex(const std::string &text);
void write_matrix_csv(const CMatrix &m, std::ostream &os);
CMatrix read_matrix_csv(std::istream &is);
CMatrix load_matrix_csv(const std::filesystem::path &path);

} // namespace risopt::harness
