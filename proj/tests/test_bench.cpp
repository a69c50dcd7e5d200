#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bgo/config.hpp"
#include "bgo/experiment.hpp"
#include "bgo/report.hpp"

using namespace bgo;

namespace {

const char* const kBasic = R"(# small nonconvex run
algo = rsg
oracle = o1
objective = bounded_nonconvex
dim = 3
n_grid = 8,16,32
replications = 6
seed = 42
metric = grad_norm_sq
)";

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("slope fit")
{
    std::vector<double> ns{4, 8, 16, 32, 64};
    std::vector<double> inv, root, third;
    for (double n : ns) {
        inv.push_back(1 / n);
        root.push_back(7.5 / std::sqrt(n));
        third.push_back(std::pow(n, -1.0 / 3));
    }
    auto a = fit_loglog_slope(ns, inv);
    CHECK(a.slope == doctest::Approx(-1.0));
    CHECK(a.stderr_ == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(fit_loglog_slope(ns, root).slope == doctest::Approx(-0.5));

    double wiggle[] = {0.01, -0.01, 0.005, -0.008, 0.01};
    for (std::size_t i = 0; i < ns.size(); ++i) {
        third[i] *= 1 + wiggle[i];
    }
    CHECK(std::abs(fit_loglog_slope(ns, third).slope + 1.0 / 3) <= 0.02);

    CHECK_THROWS_AS(fit_loglog_slope({1, 2}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog_slope({1, 2, 3}, {1, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(fit_loglog_slope({1, 2, 3}, {1, 2}), std::invalid_argument);
}

TEST_CASE("config parsing and round trip")
{
    auto c = parse_config(kBasic);
    CHECK(c.algo == Algo::rsg);
    CHECK(c.n_grid == std::vector<std::int64_t>{8, 16, 32});
    CHECK(c.seed == 42);
    CHECK(c.gamma0 == 1.0);
    CHECK(c.error_kind == ErrorKind::half_normal);
    CHECK(parse_config(format_config(c)) == c);

    c.gamma0 = 0.1;
    c.beta = 1.0 / 3;
    c.lipschitz = 2.5;
    c.noise_std = 0.7;
    c.out = "results/run.csv";
    c.functional = RiskFunctional::mean_plus_k_std(1.0 / 7);
    CHECK(parse_config(format_config(c)) == c);

    auto path = std::filesystem::temp_directory_path() / "bgo_roundtrip.cfg";
    write_config(c, path.string());
    CHECK(load_config(path.string()) == c);
    std::filesystem::remove(path);
}

TEST_CASE("config errors name the field")
{
    auto message = [](const std::string& text) {
        try {
            parse_config(text);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    std::string base = kBasic;
    CHECK(message("algo = rsg\noracle = o1\nreplications = 1\nseed = 1\n").find("n_grid") != std::string::npos);
    CHECK(message(base + "colour = blue\n").find("colour") != std::string::npos);
    CHECK(message(base + "this line has no equals\n").find("line 10") != std::string::npos);
    CHECK(message(base + "gamma0 = fast\n").find("gamma0") != std::string::npos);
    CHECK(message(base + "dim = 4\n").find("duplicate") != std::string::npos);
    CHECK(message("algo = rsg\noracle = o1\nreplications = 1\nseed = 1\nn_grid = 8,8,16\n").find("n_grid") !=
          std::string::npos);
    CHECK(message(base + "beta = 1.5\n").find("beta") != std::string::npos);
    CHECK(message(base + "objective = nope\n").find("objective") != std::string::npos);
    CHECK(message("algo = riskpg\noracle = o1\nreplications = 1\nseed = 1\nn_grid = 8\n").find("metric") !=
          std::string::npos);
    CHECK(message(std::string(kBasic).replace(base.find("grad_norm_sq"), 12, "policy_risk")).find("metric") !=
          std::string::npos);
    CHECK_THROWS_AS(load_config("/nonexistent/bgo.cfg"), ConfigError);
}

TEST_CASE("csv and summary formats")
{
    auto c = parse_config(kBasic);
    auto r = run_experiment(c);
    std::string csv = format_csv(r);
    std::istringstream lines(csv);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "n,metric_mean,metric_stderr,samples_total,oracle_calls");
    int rows = 0;
    for (std::string row; std::getline(lines, row);) {
        ++rows;
        CHECK(std::count(row.begin(), row.end(), ',') == 4);
    }
    CHECK(rows == 3);
    CHECK(csv.find('\r') == std::string::npos);

    auto j = nlohmann::json::parse(format_summary_json(r, c));
    REQUIRE(r.slope);
    CHECK(j["slope"].get<double>() == *r.slope);
    CHECK(j["config_echo"]["n_grid"].size() == 3);
    CHECK(j["config_echo"]["algo"] == "rsg");

    auto dir = std::filesystem::temp_directory_path() / "bgo_report_test";
    std::filesystem::remove_all(dir);
    write_results(r, c, (dir / "rates.csv").string());
    CHECK(slurp(dir / "rates.csv") == csv);
    CHECK(std::filesystem::exists(dir / "rates.json"));
    CHECK(slurp(dir / "rates.svg").find("<svg") == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("reproducible and split-independent")
{
    auto c = parse_config(kBasic);
    CHECK(format_csv(run_experiment(c)) == format_csv(run_experiment(c)));
    CHECK(format_csv(run_experiment(c, 1)) == format_csv(run_experiment(c, 3)));

    auto whole = run_replications(c, 16, 0, 6);
    auto left = run_replications(c, 16, 0, 2);
    auto right = run_replications(c, 16, 2, 6, 2);
    double a = 0, b = 0;
    for (double v : whole) {
        a += v;
    }
    for (double v : right) {
        b += v;
    }
    for (double v : left) {
        b += v;
    }
    CHECK(std::abs(a / 6 - b / 6) <= 1e-10);

    auto other = c;
    other.seed = 43;
    CHECK(format_csv(run_experiment(other)) != format_csv(run_experiment(c)));
}

TEST_CASE("reported samples follow the closed forms")
{
    auto c = parse_config(kBasic);
    c.n_grid = {4, 8, 16};
    c.replications = 1;
    for (double m0 : {1.0, 2.0}) {
        c.m0 = m0;
        c.oracle = OracleModel::o1;
        for (auto& p : run_experiment(c).points) {
            CHECK(p.samples_total == 2 * m0 * p.n * p.n);
            CHECK(p.oracle_calls == static_cast<std::size_t>(p.n));
        }
        c.oracle = OracleModel::o2;
        for (auto& p : run_experiment(c).points) {
            CHECK(p.samples_total == 2 * m0 * p.n * p.n * p.n);
        }
    }
    c.algo = Algo::sgd;
    c.oracle = OracleModel::o1;
    c.metric = Metric::optimality_gap;
    c.objective = "pseudo_huber";
    c.n_grid = {16, 32, 64};
    auto r = run_experiment(c);
    CHECK(r.points[0].samples_total == 2 * 768);
    for (auto& p : r.points) {
        CHECK(p.samples_total == 2 * total_samples(sgd_schedule_o1(p.n, 1, 1)));
    }
}

TEST_CASE("noiseless runs improve with the budget")
{
    auto c = parse_config(kBasic);
    c.algo = Algo::sgd;
    c.objective = "quadratic";
    c.metric = Metric::optimality_gap;
    c.noise_std = 0;
    c.error_kind = ErrorKind::none;
    c.n_grid = {8, 32, 128, 512};
    c.replications = 3;
    auto r = run_experiment(c);
    for (std::size_t i = 1; i < r.points.size(); ++i) {
        CHECK(r.points[i].metric_mean < r.points[i - 1].metric_mean);
    }
}
