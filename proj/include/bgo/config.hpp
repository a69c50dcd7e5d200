#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bgo/measurement.hpp"
#include "bgo/oracle.hpp"
#include "bgo/risk.hpp"

namespace bgo {

enum class Algo { rsg, sgd, riskpg };
enum class Metric { grad_norm_sq, optimality_gap, policy_risk };

std::string_view to_string(Algo algo);
std::string_view to_string(Metric metric);
Algo parse_algo(std::string_view text);
Metric parse_metric(std::string_view text);

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One rate experiment. Text form is one "key = value" per line; blank lines
/// and lines starting with '#' are skipped.
///
/// Required: algo, oracle, n_grid, replications, seed.
/// beta switches rsg/o1 to growing batches m_k = ceil(m0 k^beta).
/// lipschitz defaults to the objective's smoothness constant.
/// functional applies to riskpg only.
struct ExperimentConfig {
    Algo algo = Algo::rsg;
    OracleModel oracle = OracleModel::o1;
    std::string objective = "bounded_nonconvex";
    std::size_t dim = 5;
    double gamma0 = 1.0;
    double eta0 = 1.0;
    double m0 = 1.0;
    std::optional<double> beta;
    std::optional<double> lipschitz;
    std::vector<std::int64_t> n_grid;
    std::size_t replications = 1;
    std::uint64_t seed = 0;
    Metric metric = Metric::grad_norm_sq;
    double noise_std = 1.0;
    ErrorKind error_kind = ErrorKind::half_normal;
    double error_coeff = 1.0;
    std::string out;
    RiskFunctional functional = RiskFunctional::cvar(0.9);

    /// Cross-field checks; throws ConfigError naming the offending field.
    void validate() const;

    bool operator==(const ExperimentConfig&) const = default;
};

ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string& path);
std::string format_config(const ExperimentConfig& config);
void write_config(const ExperimentConfig& config, const std::string& path);

}  // namespace bgo
