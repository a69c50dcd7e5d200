#include "bgo/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bgo {

void IterationSchedule::validate() const
{
    if (gammas.empty()) {
        throw std::invalid_argument("schedule: empty");
    }
    if (etas.size() != gammas.size() || batches.size() != gammas.size()) {
        throw std::invalid_argument("schedule: gamma, eta and batch lengths differ");
    }
    for (std::size_t k = 0; k < gammas.size(); ++k) {
        if (!(gammas[k] > 0.0) || !std::isfinite(gammas[k]) || !(etas[k] > 0.0) || !std::isfinite(etas[k])) {
            throw std::invalid_argument("schedule: nonpositive gamma or eta at k=" + std::to_string(k + 1));
        }
        if (!(batches[k] >= 1.0) || std::floor(batches[k]) != batches[k]) {
            throw std::invalid_argument("schedule: batch must be an integer >= 1 at k=" + std::to_string(k + 1));
        }
    }
}

namespace {

void require_budget(std::int64_t n)
{
    if (n < 1) {
        throw std::invalid_argument("budget N must be >= 1");
    }
}

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::invalid_argument(std::string(what) + " must be positive");
    }
}

IterationSchedule constant_schedule(std::int64_t n, double gamma, double eta, SampleCount m)
{
    auto len = static_cast<std::size_t>(n);
    return IterationSchedule{std::vector<double>(len, gamma), std::vector<double>(len, eta),
                             std::vector<SampleCount>(len, m)};
}

}  // namespace

PhasePlan phase_plan(std::int64_t n)
{
    require_budget(n);
    PhasePlan plan;
    while ((std::int64_t{1} << plan.levels) < n) {
        ++plan.levels;
    }
    for (int i = 0; i <= plan.levels; ++i) {
        std::int64_t pow2 = std::int64_t{1} << i;
        plan.boundaries.push_back(n - (n + pow2 - 1) / pow2);
    }
    plan.boundaries.push_back(n);
    return plan;
}

int phase_of(const PhasePlan& plan, std::int64_t k)
{
    if (k < 1 || k > plan.budget()) {
        throw std::out_of_range("phase_of: k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(plan.budget()) + "]");
    }
    // First boundary >= k is N_{i+1}.
    auto it = std::lower_bound(plan.boundaries.begin() + 1, plan.boundaries.end(), k);
    return static_cast<int>(it - plan.boundaries.begin()) - 1;
}

IterationSchedule rsg_schedule_o1_const(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz)
{
    require_budget(n);
    require_positive(gamma0, "gamma0");
    require_positive(eta0, "eta0");
    require_positive(m0, "m0");
    require_positive(lipschitz, "L");
    double nd = static_cast<double>(n);
    double gamma = std::min(1.0 / lipschitz, gamma0 * std::pow(nd, -2.0 / 3.0));
    double eta = eta0 * std::pow(nd, -1.0 / 6.0);
    return constant_schedule(n, gamma, eta, std::ceil(m0 * nd));
}

IterationSchedule rsg_schedule_o1_poly(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz,
                                       double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) {
        throw std::invalid_argument("beta must lie in (0, 1)");
    }
    IterationSchedule s = rsg_schedule_o1_const(n, gamma0, eta0, m0, lipschitz);
    for (std::size_t k = 0; k < s.size(); ++k) {
        s.batches[k] = std::max(1.0, std::ceil(m0 * std::pow(static_cast<double>(k + 1), beta)));
    }
    return s;
}

IterationSchedule rsg_schedule_o2(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz)
{
    require_budget(n);
    require_positive(gamma0, "gamma0");
    require_positive(eta0, "eta0");
    require_positive(m0, "m0");
    require_positive(lipschitz, "L");
    double nd = static_cast<double>(n);
    double root = std::sqrt(nd);
    return constant_schedule(n, std::min(1.0 / lipschitz, gamma0 / root), eta0 / root, std::ceil(m0 * nd * nd));
}

IterationSchedule sgd_schedule_o1(std::int64_t n, double gamma0, double eta0)
{
    require_budget(n);
    require_positive(gamma0, "gamma0");
    require_positive(eta0, "eta0");
    PhasePlan plan = phase_plan(n);
    double nd = static_cast<double>(n);
    IterationSchedule s;
    for (std::int64_t k = 1; k <= n; ++k) {
        int i = phase_of(plan, k);
        s.gammas.push_back(gamma0 * std::ldexp(1.0, -i) * std::pow(nd, -2.0 / 3.0));
        s.etas.push_back(eta0 * std::pow(2.0, -i / 4.0) * std::pow(nd, -1.0 / 6.0));
        s.batches.push_back(std::ldexp(nd, i));
    }
    return s;
}

IterationSchedule sgd_schedule_o2(std::int64_t n, double gamma0, double eta0)
{
    require_budget(n);
    require_positive(gamma0, "gamma0");
    require_positive(eta0, "eta0");
    PhasePlan plan = phase_plan(n);
    double nd = static_cast<double>(n);
    IterationSchedule s;
    for (std::int64_t k = 1; k <= n; ++k) {
        int i = phase_of(plan, k);
        s.gammas.push_back(gamma0 * std::ldexp(1.0, -i) / std::sqrt(nd));
        s.etas.push_back(eta0 * std::ldexp(1.0, -i) / nd);
        s.batches.push_back(std::ldexp(nd * nd * nd, 3 * i));
    }
    return s;
}

SampleCount total_samples(const IterationSchedule& schedule)
{
    SampleCount total = 0.0;
    for (SampleCount m : schedule.batches) {
        total += m;
    }
    return total;
}

std::size_t select_random_iterate(const std::vector<double>& gammas, Rng& rng)
{
    if (gammas.empty()) {
        throw std::invalid_argument("select_random_iterate: no weights");
    }
    for (double g : gammas) {
        if (!(g > 0.0) || !std::isfinite(g)) {
            throw std::invalid_argument("select_random_iterate: weights must be positive");
        }
    }
    std::discrete_distribution<std::size_t> pick(gammas.begin(), gammas.end());
    return pick(rng) + 1;
}

}  // namespace bgo
