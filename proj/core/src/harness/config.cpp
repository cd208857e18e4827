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

#include "risopt/harness/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <nlohmann/json.hpp>

#include "risopt/format.hpp"

namespace risopt::harness {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>> &known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"system", {"M", "N", "L", "K", "d", "p_max_dbm", "noise_dbm"}},
        {"pathloss", {"d0", "d_bi", "alpha_bi", "d_iu", "alpha_iu"}},
        {"correlation",
         {"rho_tb", "rho_ti", "rho_ri", "rho_ru", "tb_file", "ti_file", "ri_file", "ru_file"}},
        {"mc", {"trials", "seed", "threads"}},
        {"sweep", {"variable", "values", "target", "n_values", "l_values"}},
        {"schemes", {"enabled"}},
        {"phase", {"fixed_theta"}},
        {"pga", {"tol", "max_iter"}},
    };
    return keys;
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream ss(text);
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

double to_real(const std::string &key, const std::string &text)
{
    try {
        return parse_double(trim(text));
    } catch (const InvalidArgument &) {
        throw ConfigError(key + ": expected a number, got '" + text + "'");
    }
}

std::uint64_t to_u64(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    std::uint64_t x = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), x);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        throw ConfigError(key + ": expected a non-negative integer, got '" + text + "'");
    return x;
}

Index to_index(const std::string &key, const std::string &text)
{
    const std::uint64_t x = to_u64(key, text);
    if (x > static_cast<std::uint64_t>(1) << 31)
        throw ConfigError(key + ": value too large");
    return static_cast<Index>(x);
}

std::vector<double> to_reals(const std::string &key, const std::string &text)
{
    std::vector<double> out;
    for (const auto &item : split_list(text))
        out.push_back(to_real(key, item));
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

std::vector<Index> to_indices(const std::string &key, const std::string &text)
{
    std::vector<Index> out;
    for (const auto &item : split_list(text))
        out.push_back(to_index(key, item));
    if (out.empty())
        throw ConfigError(key + ": empty list");
    return out;
}

class Reader {
  public:
    explicit Reader(const pt::ptree &tree) : tree_(tree) {}

    std::optional<std::string> get(const std::string &section, const std::string &key) const
    {
        const auto sec = tree_.get_child_optional(section);
        if (!sec)
            return std::nullopt;
        const auto v = sec->get_optional<std::string>(key);
        if (!v)
            return std::nullopt;
        return trim(*v);
    }

  private:
    const pt::ptree &tree_;
};

template <class T>
bool strictly_increasing(const std::vector<T> &v)
{
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            return false;
    return true;
}

void check_rho(const char *name, double rho)
{
    if (!(rho >= 0.0 && rho <= 1.0))
        throw ConfigError(std::string(name) + " must lie in [0, 1]");
}

SweepVariable parse_variable(const std::string &s)
{
    if (s == "N")
        return SweepVariable::n;
    if (s == "rho")
        return SweepVariable::rho;
    if (s == "p_max" || s == "P_max")
        return SweepVariable::p_max;
    throw ConfigError("sweep.variable: expected N, rho or p_max, got '" + s + "'");
}

CorrelationTarget parse_target(const std::string &s)
{
    if (s == "TB")
        return CorrelationTarget::tb;
    if (s == "RU")
        return CorrelationTarget::ru;
    if (s == "RIS")
        return CorrelationTarget::ris;
    throw ConfigError("sweep.target: expected TB, RU or RIS, got '" + s + "'");
}

} // namespace

std::string to_string(SweepVariable v)
{
    switch (v) {
    case SweepVariable::n: return "N";
    case SweepVariable::rho: return "rho";
    case SweepVariable::p_max: return "p_max";
    }
    return {};
}

std::string to_string(CorrelationTarget t)
{
    switch (t) {
    case CorrelationTarget::tb: return "TB";
    case CorrelationTarget::ru: return "RU";
    case CorrelationTarget::ris: return "RIS";
    }
    return {};
}

std::string to_string(Scheme s)
{
    switch (s) {
    case Scheme::opt_theta_opt_w: return "opt_theta_opt_W";
    case Scheme::rand_theta_opt_w: return "rand_theta_opt_W";
    case Scheme::opt_theta_epa: return "opt_theta_epa";
    case Scheme::rand_theta_epa: return "rand_theta_epa";
    }
    return {};
}

Scheme parse_scheme(const std::string &name)
{
    for (Scheme s : all_schemes())
        if (to_string(s) == name)
            return s;
    throw ConfigError("unknown scheme '" + name + "'");
}

void ExperimentConfig::validate() const
{
    try {
        system.validate();
    } catch (const InvalidArgument &e) {
        throw ConfigError(e.what());
    }
    if (pathloss.ris_users.size() != static_cast<std::size_t>(system.users))
        throw ConfigError("pathloss: need one RIS->user link per user");
    try {
        (void)pathloss.beta_bi();
        (void)pathloss.beta_iu();
    } catch (const InvalidArgument &e) {
        throw ConfigError(std::string("pathloss: ") + e.what());
    }
    check_rho("rho_tb", correlation.rho_tb);
    check_rho("rho_ti", correlation.rho_ti);
    check_rho("rho_ri", correlation.rho_ri);
    check_rho("rho_ru", correlation.rho_ru);
    if (mc.trials == 0)
        throw ConfigError("mc.trials must be at least 1");

    if (sweep.values.empty())
        throw ConfigError("sweep.values must not be empty");
    if (!strictly_increasing(sweep.values))
        throw ConfigError("sweep.values must be strictly increasing");
    switch (sweep.variable) {
    case SweepVariable::n:
        for (double v : sweep.values)
            if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
                throw ConfigError("sweep.values: N must be positive integers");
        if (sweep.l_values.empty() || !strictly_increasing(sweep.l_values))
            throw ConfigError("sweep.l_values must be a strictly increasing list");
        for (Index l : sweep.l_values)
            if (l < 1)
                throw ConfigError("sweep.l_values must be positive");
        break;
    case SweepVariable::rho:
        if (!sweep.target)
            throw ConfigError("sweep.target is required when sweep.variable = rho");
        for (double v : sweep.values)
            check_rho("sweep.values", v);
        if (!sweep.n_values.empty() && !strictly_increasing(sweep.n_values))
            throw ConfigError("sweep.n_values must be strictly increasing");
        for (Index n : sweep.n_values)
            if (n < 1)
                throw ConfigError("sweep.n_values must be positive");
        break;
    case SweepVariable::p_max:
        for (double v : sweep.values)
            if (!std::isfinite(v))
                throw ConfigError("sweep.values: P_max must be finite (dBm)");
        break;
    }
    if (schemes.empty())
        throw ConfigError("schemes.enabled must name at least one scheme");
    for (std::size_t i = 0; i < schemes.size(); ++i)
        for (std::size_t j = i + 1; j < schemes.size(); ++j)
            if (schemes[i] == schemes[j])
                throw ConfigError("schemes.enabled lists '" + to_string(schemes[i]) + "' twice");
    if (!std::isfinite(fixed_theta))
        throw ConfigError("phase.fixed_theta must be finite");
    if (pga_tol && !(*pga_tol > 0.0))
        throw ConfigError("pga.tol must be positive");
    if (pga_max_iter < 1)
        throw ConfigError("pga.max_iter must be positive");
}

std::string ExperimentConfig::manifest_json() const
{
    using nlohmann::ordered_json;
    ordered_json j;
    const auto num = [](double x) { return format_double(x); };
    j["system"] = {{"M", system.bs_antennas},
                   {"N", system.ris_elements},
                   {"L", system.user_antennas},
                   {"K", system.users},
                   {"d", system.streams},
                   {"p_max_dbm", num(p_max_dbm)},
                   {"p_max_mw", num(system.p_max_mw)}};
    ordered_json noise_dbm_j = ordered_json::array();
    ordered_json noise_mw_j = ordered_json::array();
    for (double x : noise_dbm)
        noise_dbm_j.push_back(num(x));
    for (double x : system.noise_mw)
        noise_mw_j.push_back(num(x));
    j["system"]["noise_dbm"] = noise_dbm_j;
    j["system"]["noise_mw"] = noise_mw_j;

    ordered_json users = ordered_json::array();
    for (const auto &link : pathloss.ris_users)
        users.push_back({{"d_iu", num(link.distance_m)}, {"alpha_iu", num(link.exponent)}});
    j["pathloss"] = {{"d0", num(pathloss.d0_m)},
                     {"d_bi", num(pathloss.bs_ris.distance_m)},
                     {"alpha_bi", num(pathloss.bs_ris.exponent)},
                     {"users", users}};

    ordered_json corr = {{"rho_tb", num(correlation.rho_tb)},
                         {"rho_ti", num(correlation.rho_ti)},
                         {"rho_ri", num(correlation.rho_ri)},
                         {"rho_ru", num(correlation.rho_ru)}};
    const auto file = [&](const char *key, const std::optional<std::filesystem::path> &p) {
        if (p)
            corr[key] = p->generic_string();
    };
    file("tb_file", correlation.tb_file);
    file("ti_file", correlation.ti_file);
    file("ri_file", correlation.ri_file);
    file("ru_file", correlation.ru_file);
    j["correlation"] = corr;

    j["mc"] = {{"trials", mc.trials}, {"seed", mc.seed}};

    ordered_json values = ordered_json::array();
    for (double v : sweep.values)
        values.push_back(num(v));
    j["sweep"] = {{"variable", to_string(sweep.variable)}, {"values", values}};
    if (sweep.target)
        j["sweep"]["target"] = to_string(*sweep.target);
    if (!sweep.n_values.empty())
        j["sweep"]["n_values"] = sweep.n_values;
    j["sweep"]["l_values"] = sweep.l_values;

    ordered_json sch = ordered_json::array();
    for (Scheme s : schemes)
        sch.push_back(to_string(s));
    j["schemes"] = sch;
    j["phase"] = {{"fixed_theta", num(fixed_theta)}};
    j["pga"] = {{"max_iter", pga_max_iter}};
    if (pga_tol)
        j["pga"]["tol"] = num(*pga_tol);
    else
        j["pga"]["tol"] = "1e-8 N";
    return j.dump(2) + "\n";
}

ExperimentConfig parse_config(std::istream &in, const std::filesystem::path &base_dir)
{
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error &e) {
        throw ConfigError(std::string("config syntax: ") + e.what());
    }

    for (const auto &[section, body] : tree) {
        const auto it = known_keys().find(section);
        if (it == known_keys().end()) {
            if (body.empty())
                throw ConfigError("key '" + section + "' outside of any section");
            throw ConfigError("unknown section [" + section + "]");
        }
        for (const auto &[key, value] : body) {
            (void)value;
            if (!it->second.count(key))
                throw ConfigError("unknown key '" + key + "' in [" + section + "]");
        }
    }

    const Reader r(tree);
    ExperimentConfig cfg;

    auto idx = [&](const char *sec, const char *key, Index &dst) {
        if (auto v = r.get(sec, key))
            dst = to_index(std::string(sec) + "." + key, *v);
    };
    auto real = [&](const char *sec, const char *key, double &dst) {
        if (auto v = r.get(sec, key))
            dst = to_real(std::string(sec) + "." + key, *v);
    };

    idx("system", "M", cfg.system.bs_antennas);
    idx("system", "N", cfg.system.ris_elements);
    idx("system", "L", cfg.system.user_antennas);
    idx("system", "K", cfg.system.users);
    idx("system", "d", cfg.system.streams);
    real("system", "p_max_dbm", cfg.p_max_dbm);
    if (auto v = r.get("system", "noise_dbm"))
        cfg.noise_dbm = to_reals("system.noise_dbm", *v);
    const auto k_users = static_cast<std::size_t>(std::max<Index>(cfg.system.users, 0));
    if (cfg.noise_dbm.size() == 1)
        cfg.noise_dbm.assign(k_users, cfg.noise_dbm.front());
    if (cfg.noise_dbm.size() != k_users)
        throw ConfigError("system.noise_dbm: give one value or one per user");

    real("pathloss", "d0", cfg.pathloss.d0_m);
    cfg.pathloss.bs_ris = {10.0, 2.2};
    real("pathloss", "d_bi", cfg.pathloss.bs_ris.distance_m);
    real("pathloss", "alpha_bi", cfg.pathloss.bs_ris.exponent);
    auto per_user = [&](const char *key, double fallback) {
        std::vector<double> v{fallback};
        if (auto t = r.get("pathloss", key))
            v = to_reals(std::string("pathloss.") + key, *t);
        if (v.size() == 1)
            v.assign(k_users, v.front());
        if (v.size() != k_users)
            throw ConfigError(std::string("pathloss.") + key + ": give one value or one per user");
        return v;
    };
    const auto d_iu = per_user("d_iu", 30.0);
    const auto a_iu = per_user("alpha_iu", 3.0);
    cfg.pathloss.ris_users.clear();
    for (std::size_t k = 0; k < k_users; ++k)
        cfg.pathloss.ris_users.push_back({d_iu[k], a_iu[k]});

    real("correlation", "rho_tb", cfg.correlation.rho_tb);
    real("correlation", "rho_ti", cfg.correlation.rho_ti);
    real("correlation", "rho_ri", cfg.correlation.rho_ri);
    real("correlation", "rho_ru", cfg.correlation.rho_ru);
    auto file = [&](const char *key, std::optional<std::filesystem::path> &dst) {
        if (auto v = r.get("correlation", key); v && !v->empty()) {
            std::filesystem::path p(*v);
            dst = p.is_absolute() ? p : base_dir / p;
        }
    };
    file("tb_file", cfg.correlation.tb_file);
    file("ti_file", cfg.correlation.ti_file);
    file("ri_file", cfg.correlation.ri_file);
    file("ru_file", cfg.correlation.ru_file);

    if (auto v = r.get("mc", "trials"))
        cfg.mc.trials = to_u64("mc.trials", *v);
    if (auto v = r.get("mc", "seed"))
        cfg.mc.seed = to_u64("mc.seed", *v);
    if (auto v = r.get("mc", "threads"))
        cfg.mc.threads = static_cast<unsigned>(to_index("mc.threads", *v));

    if (auto v = r.get("sweep", "variable"))
        cfg.sweep.variable = parse_variable(*v);
    if (auto v = r.get("sweep", "values"))
        cfg.sweep.values = to_reals("sweep.values", *v);
    if (auto v = r.get("sweep", "target"))
        cfg.sweep.target = parse_target(*v);
    if (auto v = r.get("sweep", "n_values"))
        cfg.sweep.n_values = to_indices("sweep.n_values", *v);
    if (auto v = r.get("sweep", "l_values"))
        cfg.sweep.l_values = to_indices("sweep.l_values", *v);

    if (auto v = r.get("schemes", "enabled")) {
        cfg.schemes.clear();
        for (const auto &name : split_list(*v))
            cfg.schemes.push_back(parse_scheme(name));
    }
    real("phase", "fixed_theta", cfg.fixed_theta);
    if (auto v = r.get("pga", "tol"); v && !v->empty())
        cfg.pga_tol = to_real("pga.tol", *v);
    if (auto v = r.get("pga", "max_iter"))
        cfg.pga_max_iter = static_cast<int>(to_index("pga.max_iter", *v));

    cfg.system.p_max_mw = dbm_to_mw(cfg.p_max_dbm);
    cfg.system.noise_mw.clear();
    for (double dbm : cfg.noise_dbm)
        cfg.system.noise_mw.push_back(dbm_to_mw(dbm));
    cfg.system.rng_seed = cfg.mc.seed;

    cfg.validate();
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file " + path.string());
    return parse_config(in, path.parent_path());
}

} // namespace risopt::harness
