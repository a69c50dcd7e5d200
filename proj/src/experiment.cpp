#include "bgo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "bgo/optimizer.hpp"
#include "bgo/risk_pg.hpp"

namespace bgo {

SlopeFit fit_loglog_slope(const std::vector<double>& ns, const std::vector<double>& values)
{
    if (ns.size() != values.size()) {
        throw std::invalid_argument("fit_loglog_slope: length mismatch");
    }
    if (ns.size() < 3) {
        throw std::invalid_argument("fit_loglog_slope: need at least three points");
    }
    const std::size_t n = ns.size();
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(ns[i] > 0.0) || !(values[i] > 0.0) || !std::isfinite(values[i])) {
            throw std::invalid_argument("fit_loglog_slope: values must be positive and finite");
        }
        lx[i] = std::log(ns[i]);
        ly[i] = std::log(values[i]);
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (!(sxx > 0.0)) {
        throw std::invalid_argument("fit_loglog_slope: abscissae are all equal");
    }
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double r = ly[i] - fit.intercept - fit.slope * lx[i];
        rss += r * r;
    }
    fit.stderr_ = std::sqrt(rss / static_cast<double>(n - 2) / sxx);
    return fit;
}

namespace {

double schedule_lipschitz(const ExperimentConfig& config)
{
    if (config.lipschitz) {
        return *config.lipschitz;
    }
    if (config.algo == Algo::riskpg) {
        return 1.0;
    }
    return make_objective(config.objective, config.dim)->smoothness();
}

double run_one(const ExperimentConfig& config, std::int64_t n, std::size_t rep)
{
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(n), rep));
    IterationSchedule schedule = build_schedule(config, n);
    Vector x1 = initial_point(config);

    if (config.algo == Algo::riskpg) {
        ChainSsp env = default_chain();
        auto features = PolicyFeatures::tabular(env.n_states(), env.n_actions());
        RunTrace trace = risk_pg(env, kDefaultStartState, features, x1, schedule, config.functional, rng);
        SoftmaxPolicy policy(features, trace.returned_point);
        return estimate_policy_risk(env, policy, kDefaultStartState, kPolicyEvalEpisodes, config.functional, rng);
    }

    auto objective = make_objective(config.objective, config.dim);
    MeasurementModel model{objective, config.noise_std, config.error_coeff, config.error_kind};
    Oracle oracle = make_oracle(model, config.oracle);
    RunTrace trace = config.algo == Algo::rsg ? rsg_bgo(oracle, x1, schedule, rng) : sgd_bgo(oracle, x1, schedule, rng);
    const Vector& x = trace.returned_point;
    if (config.metric == Metric::grad_norm_sq) {
        return objective->gradient(x).squaredNorm();
    }
    return objective->value(x) - objective->min_value();
}

}  // namespace

IterationSchedule build_schedule(const ExperimentConfig& config, std::int64_t n)
{
    if (config.algo == Algo::sgd) {
        return config.oracle == OracleModel::o1 ? sgd_schedule_o1(n, config.gamma0, config.eta0)
                                                : sgd_schedule_o2(n, config.gamma0, config.eta0);
    }
    double lipschitz = schedule_lipschitz(config);
    if (config.oracle == OracleModel::o2) {
        return rsg_schedule_o2(n, config.gamma0, config.eta0, config.m0, lipschitz);
    }
    if (config.beta) {
        return rsg_schedule_o1_poly(n, config.gamma0, config.eta0, config.m0, lipschitz, *config.beta);
    }
    return rsg_schedule_o1_const(n, config.gamma0, config.eta0, config.m0, lipschitz);
}

Vector initial_point(const ExperimentConfig& config)
{
    if (config.algo == Algo::riskpg) {
        ChainSsp env = default_chain();
        return Vector::Zero(static_cast<Eigen::Index>((env.n_states() - 1) * env.n_actions()));
    }
    auto objective = make_objective(config.objective, config.dim);
    return objective->minimizer() + Vector::Ones(static_cast<Eigen::Index>(config.dim));
}

std::vector<double> run_replications(const ExperimentConfig& config, std::int64_t n, std::size_t rep_begin,
                                     std::size_t rep_end, unsigned threads)
{
    if (rep_end < rep_begin) {
        throw std::invalid_argument("run_replications: empty range");
    }
    const std::size_t count = rep_end - rep_begin;
    std::vector<double> values(count);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));

    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            values[i] = run_one(config, n, rep_begin + i);
        }
        return values;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                values[i] = run_one(config, n, rep_begin + i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = count;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return values;
}

RateResult run_experiment(const ExperimentConfig& config, unsigned threads)
{
    config.validate();
    RateResult result;
    std::vector<double> ns, means;
    for (std::int64_t n : config.n_grid) {
        std::vector<double> values = run_replications(config, n, 0, config.replications, threads);
        double sum = 0.0;
        for (double v : values) {
            sum += v;
        }
        double mean = sum / static_cast<double>(values.size());
        double ss = 0.0;
        for (double v : values) {
            ss += (v - mean) * (v - mean);
        }
        RatePoint p;
        p.n = n;
        p.metric_mean = mean;
        p.metric_stderr =
            values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1) / static_cast<double>(values.size()))
                              : 0.0;
        p.samples_total = 2.0 * total_samples(build_schedule(config, n));
        p.oracle_calls = static_cast<std::size_t>(n);
        result.points.push_back(p);
        ns.push_back(static_cast<double>(n));
        means.push_back(mean);
    }
    if (ns.size() >= 3 && std::all_of(means.begin(), means.end(), [](double v) { return v > 0.0; })) {
        SlopeFit fit = fit_loglog_slope(ns, means);
        result.slope = fit.slope;
        result.slope_stderr = fit.stderr_;
    }
    return result;
}

}  // namespace bgo
