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

#include "risopt/harness/csv.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "risopt/error.hpp"
#include "risopt/format.hpp"

namespace risopt::harness {

namespace {

std::vector<std::string> split_fields(const std::string &line)
{
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ','))
        out.push_back(field);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

std::uint64_t parse_u64(const std::string &s)
{
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidArgument("result CSV: bad trial count '" + s + "'");
    return std::stoull(s);
}

} // namespace

void write_result_csv(const ResultTable &table, std::ostream &os)
{
    os << result_header << '\n';
    for (const auto &r : table.rows) {
        if (r.scheme.find_first_of(",\n\r") != std::string::npos)
            throw InvalidArgument("result CSV: scheme label contains a separator");
        os << format_double(r.sweep_value) << ',' << r.scheme << ',' << format_double(r.rate_mean)
           << ',' << format_double(r.rate_stderr) << ',' << format_double(r.rate_deterministic)
           << ',' << r.trials << '\n';
    }
}

ResultTable read_result_csv(std::istream &is)
{
    std::string line;
    if (!std::getline(is, line) || line != result_header)
        throw InvalidArgument("result CSV: missing or unexpected header");
    ResultTable t;
    std::size_t lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty())
            continue;
        const auto f = split_fields(line);
        if (f.size() != 6)
            throw InvalidArgument("result CSV line " + std::to_string(lineno) +
                                  ": expected 6 fields");
        ResultRow r;
        r.sweep_value = parse_double(f[0]);
        r.scheme = f[1];
        r.rate_mean = parse_double(f[2]);
        r.rate_stderr = parse_double(f[3]);
        r.rate_deterministic = parse_double(f[4]);
        r.trials = parse_u64(f[5]);
        t.rows.push_back(std::move(r));
    }
    return t;
}

void write_text_file(const std::filesystem::path &path, const std::string &content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out)
        throw Error("write to '" + path.string() + "' failed");
}

void emit(const ResultTable &table, const std::string &manifest,
          const std::filesystem::path &csv_path)
{
    std::ostringstream csv;
    write_result_csv(table, csv);
    write_text_file(csv_path, csv.str());
    std::filesystem::path m = csv_path;
    m.replace_extension(".manifest.json");
    write_text_file(m, manifest);
}

std::string format_complex(Complex z)
{
    std::string out = format_double(z.real());
    if (!std::signbit(z.imag()))
        out += '+';
    out += format_double(z.imag());
    out += 'j';
    return out;
}

Complex parse_complex(const std::string &raw)
{
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t' && c != '\r')
            s += c;
    if (s.empty())
        throw InvalidArgument("CSV-matrix: empty entry");
    if (s.back() != 'j' && s.back() != 'i')
        return {parse_double(s), 0.0};
    s.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        const std::string im = s.empty() || s == "+" || s == "-" ? s + "1" : s;
        return {0.0, parse_double(im)};
    }
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "+" || im == "-")
        im += "1";
    return {parse_double(re), parse_double(im)};
}

void write_matrix_csv(const CMatrix &m, std::ostream &os)
{
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            if (j)
                os << ',';
            os << format_complex(m(i, j));
        }
        os << '\n';
    }
}

CMatrix read_matrix_csv(std::istream &is)
{
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        std::vector<Complex> row;
        for (const auto &f : split_fields(line))
            row.push_back(parse_complex(f));
        if (!rows.empty() && row.size() != rows.front().size())
            throw InvalidArgument("CSV-matrix: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty())
        throw InvalidArgument("CSV-matrix: no data");
    CMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

CMatrix load_matrix_csv(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open matrix file '" + path.string() + "'");
    try {
        return read_matrix_csv(in);
    } catch (const InvalidArgument &e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

} // namespace risopt::harness
