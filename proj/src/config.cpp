#include "bgo/config.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "bgo/objective.hpp"

namespace bgo {

std::string_view to_string(Algo algo)
{
    switch (algo) {
    case Algo::rsg:
        return "rsg";
    case Algo::sgd:
        return "sgd";
    case Algo::riskpg:
        return "riskpg";
    }
    return "rsg";
}

std::string_view to_string(Metric metric)
{
    switch (metric) {
    case Metric::grad_norm_sq:
        return "grad_norm_sq";
    case Metric::optimality_gap:
        return "optimality_gap";
    case Metric::policy_risk:
        return "policy_risk";
    }
    return "grad_norm_sq";
}

Algo parse_algo(std::string_view text)
{
    for (auto a : {Algo::rsg, Algo::sgd, Algo::riskpg}) {
        if (text == to_string(a)) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algo '" + std::string(text) + "'");
}

Metric parse_metric(std::string_view text)
{
    for (auto m : {Metric::grad_norm_sq, Metric::optimality_gap, Metric::policy_risk}) {
        if (text == to_string(m)) {
            return m;
        }
    }
    throw std::invalid_argument("unknown metric '" + std::string(text) + "'");
}

namespace {

const char* const kKeys[] = {"algo",   "oracle",    "objective",    "dim",    "gamma0",     "eta0",
                             "m0",     "beta",      "lipschitz",    "n_grid", "replications", "seed",
                             "metric", "noise_std", "error_kind", "error_coeff", "out",     "functional"};

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& v)
{
    // strtod accepts what %.17g writes, including "inf" which validate rejects.
    errno = 0;
    char* end = nullptr;
    double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE) {
        throw std::invalid_argument("expected a number, got '" + v + "'");
    }
    return d;
}

template <typename Int>
Int to_int(const std::string& v)
{
    Int out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw std::invalid_argument("expected an integer, got '" + v + "'");
    }
    return out;
}

std::vector<std::int64_t> to_grid(const std::string& v)
{
    std::vector<std::int64_t> grid;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        grid.push_back(to_int<std::int64_t>(trim(item)));
    }
    if (grid.empty()) {
        throw std::invalid_argument("empty list");
    }
    return grid;
}

void assign(ExperimentConfig& c, const std::string& key, const std::string& v)
{
    if (key == "algo") {
        c.algo = parse_algo(v);
    } else if (key == "oracle") {
        c.oracle = parse_oracle_model(v);
    } else if (key == "objective") {
        c.objective = v;
    } else if (key == "dim") {
        c.dim = to_int<std::size_t>(v);
    } else if (key == "gamma0") {
        c.gamma0 = to_double(v);
    } else if (key == "eta0") {
        c.eta0 = to_double(v);
    } else if (key == "m0") {
        c.m0 = to_double(v);
    } else if (key == "beta") {
        c.beta = to_double(v);
    } else if (key == "lipschitz") {
        c.lipschitz = to_double(v);
    } else if (key == "n_grid") {
        c.n_grid = to_grid(v);
    } else if (key == "replications") {
        c.replications = to_int<std::size_t>(v);
    } else if (key == "seed") {
        c.seed = to_int<std::uint64_t>(v);
    } else if (key == "metric") {
        c.metric = parse_metric(v);
    } else if (key == "noise_std") {
        c.noise_std = to_double(v);
    } else if (key == "error_kind") {
        c.error_kind = parse_error_kind(v);
    } else if (key == "error_coeff") {
        c.error_coeff = to_double(v);
    } else if (key == "out") {
        c.out = v;
    } else if (key == "functional") {
        c.functional = RiskFunctional::parse(v);
    }
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require(bool ok, const char* field, const std::string& why)
{
    if (!ok) {
        throw ConfigError(std::string("config field '") + field + "': " + why);
    }
}

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

void ExperimentConfig::validate() const
{
    require(!n_grid.empty(), "n_grid", "must list at least one budget");
    for (std::size_t i = 0; i < n_grid.size(); ++i) {
        require(n_grid[i] >= 1, "n_grid", "budgets must be >= 1");
        require(i == 0 || n_grid[i] > n_grid[i - 1], "n_grid", "must be strictly increasing");
    }
    require(replications >= 1, "replications", "must be >= 1");
    require(positive(gamma0), "gamma0", "must be positive");
    require(positive(eta0), "eta0", "must be positive");
    require(positive(m0), "m0", "must be positive");
    if (beta) {
        require(*beta > 0.0 && *beta < 1.0, "beta", "must lie in (0, 1)");
        require(algo != Algo::sgd && oracle == OracleModel::o1, "beta", "only applies to the o1 RSG schedule");
    }
    if (lipschitz) {
        require(positive(*lipschitz), "lipschitz", "must be positive");
    }
    if (algo == Algo::riskpg) {
        require(metric == Metric::policy_risk, "metric", "riskpg reports policy_risk");
        return;
    }
    require(metric != Metric::policy_risk, "metric", "policy_risk needs algo = riskpg");
    require(dim >= 1, "dim", "must be >= 1");
    try {
        make_objective(objective, dim);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config field 'objective': ") + e.what());
    }
    require(noise_std >= 0.0 && std::isfinite(noise_std), "noise_std", "must be >= 0");
    require(error_coeff >= 0.0 && std::isfinite(error_coeff), "error_coeff", "must be >= 0");
    require(error_kind != ErrorKind::cvar_estimator, "error_kind",
            "cvar_estimator needs a CVaR objective, which the harness does not build from a name");
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig c;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            continue;
        }
        auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        bool known = false;
        for (const char* k : kKeys) {
            known = known || key == k;
        }
        if (!known) {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
        if (!seen.insert(key).second) {
            throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        }
        try {
            assign(c, key, value);
        } catch (const std::invalid_argument& e) {
            throw ConfigError("line " + std::to_string(lineno) + ", field '" + key + "': " + e.what());
        }
    }
    for (const char* k : {"algo", "oracle", "n_grid", "replications", "seed"}) {
        if (!seen.count(k)) {
            throw ConfigError(std::string("missing required field '") + k + "'");
        }
    }
    c.validate();
    return c;
}

ExperimentConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string format_config(const ExperimentConfig& c)
{
    std::ostringstream out;
    out << "algo = " << to_string(c.algo) << '\n';
    out << "oracle = " << to_string(c.oracle) << '\n';
    out << "objective = " << c.objective << '\n';
    out << "dim = " << c.dim << '\n';
    out << "gamma0 = " << num(c.gamma0) << '\n';
    out << "eta0 = " << num(c.eta0) << '\n';
    out << "m0 = " << num(c.m0) << '\n';
    if (c.beta) {
        out << "beta = " << num(*c.beta) << '\n';
    }
    if (c.lipschitz) {
        out << "lipschitz = " << num(*c.lipschitz) << '\n';
    }
    out << "n_grid = ";
    for (std::size_t i = 0; i < c.n_grid.size(); ++i) {
        out << (i ? "," : "") << c.n_grid[i];
    }
    out << '\n';
    out << "replications = " << c.replications << '\n';
    out << "seed = " << c.seed << '\n';
    out << "metric = " << to_string(c.metric) << '\n';
    out << "noise_std = " << num(c.noise_std) << '\n';
    out << "error_kind = " << to_string(c.error_kind) << '\n';
    out << "error_coeff = " << num(c.error_coeff) << '\n';
    out << "out = " << c.out << '\n';
    out << "functional = " << c.functional.to_string() << '\n';
    return out.str();
}

void write_config(const ExperimentConfig& config, const std::string& path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write config '" + path + "'");
    }
    out << format_config(config);
}

}  // namespace bgo
