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
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "risopt/error.hpp"
#include "risopt/format.hpp"
#include "risopt/harness/csv.hpp"
#include "risopt/rng.hpp"

using namespace risopt;
using namespace risopt::harness;

namespace {

std::string slurp(const std::filesystem::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::filesystem::path scratch(const std::string &name)
{
    auto dir = std::filesystem::temp_directory_path() / ("risopt_csv_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

ResultTable sample_table()
{
    ResultTable t;
    RandomStream rng(101);
    for (int i = 0; i < 20; ++i)
        t.rows.push_back({25.0 + i * 0.1, i % 2 ? "opt_theta_opt_W" : "rand_theta_epa",
                          rng.standard_normal() * 1e3, std::abs(rng.standard_normal()) * 1e-14,
                          std::ldexp(rng.uniform(), -i * 10), static_cast<std::uint64_t>(i * 37)});
    t.rows.push_back({0.1 + 0.2, "x", 1.0 / 3.0, 0.0, -0.0, 0});
    t.rows.push_back({std::numeric_limits<double>::denorm_min(), "y",
                      std::numeric_limits<double>::max(), 5e-324, 1e300, 1});
    return t;
}

} // namespace

TEST(FormatDouble, ShortestRoundTrip)
{
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(40.0), "40");
    EXPECT_EQ(format_double(1e-9), "1e-09");
    RandomStream rng(102);
    for (int i = 0; i < 10000; ++i) {
        const double x = std::ldexp(rng.standard_normal(), static_cast<int>(rng.uniform() * 200) - 100);
        EXPECT_EQ(parse_double(format_double(x)), x);
    }
}

TEST(ParseDouble, RejectsGarbage)
{
    EXPECT_THROW(parse_double(""), InvalidArgument);
    EXPECT_THROW(parse_double("1.5x"), InvalidArgument);
    EXPECT_THROW(parse_double("abc"), InvalidArgument);
    EXPECT_EQ(parse_double("+2.5"), 2.5);
}

TEST(ResultCsv, EmptyTableIsHeaderOnly)
{
    std::ostringstream os;
    write_result_csv({}, os);
    EXPECT_EQ(os.str(), "sweep_value,scheme,rate_mean,rate_stderr,rate_deterministic,trials\n");
}

TEST(ResultCsv, RoundTripIsExact)
{
    const ResultTable t = sample_table();
    std::ostringstream os;
    write_result_csv(t, os);
    std::istringstream is(os.str());
    const ResultTable back = read_result_csv(is);
    ASSERT_EQ(back.rows.size(), t.rows.size());
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        EXPECT_EQ(back.rows[i], t.rows[i]);
        EXPECT_EQ(std::signbit(back.rows[i].rate_deterministic),
                  std::signbit(t.rows[i].rate_deterministic));
    }
}

TEST(ResultCsv, LfLineEndingsOnly)
{
    std::ostringstream os;
    write_result_csv(sample_table(), os);
    EXPECT_EQ(os.str().find('\r'), std::string::npos);
    EXPECT_EQ(os.str().back(), '\n');
}

TEST(ResultCsv, RejectsMalformedInput)
{
    std::istringstream bad_header("a,b\n");
    EXPECT_THROW(read_result_csv(bad_header), InvalidArgument);
    std::istringstream short_row(std::string(result_header) + "\n1,x,2\n");
    EXPECT_THROW(read_result_csv(short_row), InvalidArgument);
    std::istringstream bad_trials(std::string(result_header) + "\n1,x,2,3,4,-1\n");
    EXPECT_THROW(read_result_csv(bad_trials), InvalidArgument);
    ResultTable t;
    t.rows.push_back({1.0, "a,b", 0, 0, 0, 0});
    std::ostringstream os;
    EXPECT_THROW(write_result_csv(t, os), InvalidArgument);
}

TEST(Emit, WritesCsvAndManifestByteIdentically)
{
    const auto dir = scratch("emit");
    const ResultTable t = sample_table();
    emit(t, "{\"seed\": 1}\n", dir / "a.csv");
    emit(t, "{\"seed\": 1}\n", dir / "b.csv");
    EXPECT_EQ(slurp(dir / "a.csv"), slurp(dir / "b.csv"));
    EXPECT_EQ(slurp(dir / "a.manifest.json"), "{\"seed\": 1}\n");
    std::ifstream in(dir / "a.csv");
    EXPECT_EQ(read_result_csv(in), t);
}

TEST(Emit, EmptyTable)
{
    const auto dir = scratch("empty");
    emit({}, "{}\n", dir / "e.csv");
    EXPECT_EQ(slurp(dir / "e.csv"), std::string(result_header) + "\n");
}

TEST(Emit, IoFailureNamesPath)
{
    const auto dir = scratch("fail");
    const auto target = dir / "missing" / "x.csv";
    try {
        emit({}, "{}", target);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_NE(std::string(e.what()).find(target.string()), std::string::npos);
    }
}

TEST(ComplexText, FormatsAndParses)
{
    EXPECT_EQ(format_complex({1.0, 0.5}), "1+0.5j");
    EXPECT_EQ(format_complex({-1.0, -0.5}), "-1-0.5j");
    EXPECT_EQ(parse_complex("1e-3+2e-4j"), Complex(1e-3, 2e-4));
    EXPECT_EQ(parse_complex("-2.5E+2-1j"), Complex(-250.0, -1.0));
    EXPECT_EQ(parse_complex(" 0.75 "), Complex(0.75, 0.0));
    EXPECT_EQ(parse_complex("3j"), Complex(0.0, 3.0));
    EXPECT_EQ(parse_complex("-2e-4j"), Complex(0.0, -2e-4));
    EXPECT_EQ(parse_complex("1+j"), Complex(1.0, 1.0));
    EXPECT_THROW(parse_complex("1+xj"), InvalidArgument);
    EXPECT_THROW(parse_complex(""), InvalidArgument);
}

TEST(MatrixCsv, RoundTripIsExact)
{
    RandomStream rng(103);
    CMatrix m = rng.complex_gaussian(4, 3);
    m(0, 0) = Complex(0.0, -0.0);
    std::ostringstream os;
    write_matrix_csv(m, os);
    std::istringstream is(os.str());
    const CMatrix back = read_matrix_csv(is);
    EXPECT_EQ(back, m);
    EXPECT_TRUE(std::signbit(back(0, 0).imag()));
}

TEST(MatrixCsv, RejectsRaggedAndEmpty)
{
    std::istringstream ragged("1+0j,2+0j\n3+0j\n");
    EXPECT_THROW(read_matrix_csv(ragged), InvalidArgument);
    std::istringstream empty("\n\n");
    EXPECT_THROW(read_matrix_csv(empty), InvalidArgument);
    EXPECT_THROW(load_matrix_csv("/nonexistent/risopt.csv"), Error);
}
