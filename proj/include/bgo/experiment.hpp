#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bgo/config.hpp"
#include "bgo/objective.hpp"
#include "bgo/schedule.hpp"

namespace bgo {

struct RatePoint {
    std::int64_t n = 0;
    double metric_mean = 0.0;
    double metric_stderr = 0.0;
    SampleCount samples_total = 0;  // raw measurements (or episodes) of one run
    std::size_t oracle_calls = 0;
};

struct RateResult {
    std::vector<RatePoint> points;
    std::optional<double> slope;  // absent with fewer than three grid points
    std::optional<double> slope_stderr;
};

struct SlopeFit {
    double slope = 0.0;
    double stderr_ = 0.0;
    double intercept = 0.0;
};

/// OLS of log(values) on log(ns). Throws std::invalid_argument with fewer than
/// three points, mismatched lengths or a nonpositive entry.
SlopeFit fit_loglog_slope(const std::vector<double>& ns, const std::vector<double>& values);

/// Episodes used to score a policy for the policy_risk metric.
inline constexpr std::size_t kPolicyEvalEpisodes = 10000;

/// The schedule the config implies for budget n.
IterationSchedule build_schedule(const ExperimentConfig& config, std::int64_t n);

/// Starting point of every run: x* + (1, ..., 1) for objectives, 0 for riskpg.
Vector initial_point(const ExperimentConfig& config);

/// Metric values of replications [rep_begin, rep_end) at budget n, in
/// replication order. Each replication draws from its own stream seeded by
/// derive_seed(seed, n, rep), so the values do not depend on how the range
/// is split or on the thread count (0 = hardware concurrency).
std::vector<double> run_replications(const ExperimentConfig& config, std::int64_t n, std::size_t rep_begin,
                                     std::size_t rep_end, unsigned threads = 1);

RateResult run_experiment(const ExperimentConfig& config, unsigned threads = 1);

}  // namespace bgo
