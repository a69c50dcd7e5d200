#include "bgo/ssp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bgo {

ChainSsp::ChainSsp(Kernel transitions, CostTable costs, double discount, std::size_t horizon_cap)
    : kernel_(std::move(transitions)), costs_(std::move(costs)), discount_(discount), horizon_cap_(horizon_cap)
{
    const std::size_t s_count = costs_.size();
    if (s_count < 2) {
        throw std::invalid_argument("ssp: need at least two states");
    }
    const std::size_t a_count = costs_.front().size();
    if (a_count < 2) {
        throw std::invalid_argument("ssp: need at least two actions");
    }
    if (!(discount_ > 0.0 && discount_ < 1.0)) {
        throw std::invalid_argument("ssp: discount must lie in (0, 1)");
    }
    if (horizon_cap_ < 1) {
        throw std::invalid_argument("ssp: horizon cap must be >= 1");
    }
    if (kernel_.size() != s_count) {
        throw std::invalid_argument("ssp: kernel and cost table disagree on the state count");
    }

    cumulative_.resize(s_count);
    for (std::size_t s = 0; s < s_count; ++s) {
        if (kernel_[s].size() != a_count || costs_[s].size() != a_count) {
            throw std::invalid_argument("ssp: ragged action dimension at state " + std::to_string(s));
        }
        cumulative_[s].resize(a_count);
        for (std::size_t a = 0; a < a_count; ++a) {
            const auto& row = kernel_[s][a];
            if (row.size() != s_count) {
                throw std::invalid_argument("ssp: transition row has the wrong length");
            }
            double sum = 0.0;
            for (double p : row) {
                if (!(p >= 0.0)) {
                    throw std::invalid_argument("ssp: negative transition probability");
                }
                sum += p;
                cumulative_[s][a].push_back(sum);
            }
            if (std::abs(sum - 1.0) > 1e-12) {
                throw std::invalid_argument("ssp: row (" + std::to_string(s) + ", " + std::to_string(a) +
                                            ") does not sum to 1");
            }
            double c = costs_[s][a];
            if (!(c >= 0.0) || !std::isfinite(c)) {
                throw std::invalid_argument("ssp: costs must be finite and nonnegative");
            }
            if (s == 0 && c != 0.0) {
                throw std::invalid_argument("ssp: the absorbing state must be cost-free");
            }
            max_cost_ = std::max(max_cost_, c);
        }
    }
    for (std::size_t a = 0; a < a_count; ++a) {
        if (kernel_[0][a][0] != 1.0) {
            throw std::invalid_argument("ssp: state 0 must be absorbing");
        }
    }

    // reach[s]: worst-case probability of hitting 0 within t steps.
    std::vector<double> reach(s_count, 0.0);
    reach[0] = 1.0;
    for (std::size_t t = 1; t < s_count; ++t) {
        std::vector<double> next(s_count, 1.0);
        for (std::size_t s = 1; s < s_count; ++s) {
            double worst = 1.0;
            for (std::size_t a = 0; a < a_count; ++a) {
                double p = 0.0;
                for (std::size_t n = 0; n < s_count; ++n) {
                    p += kernel_[s][a][n] * reach[n];
                }
                worst = std::min(worst, p);
            }
            next[s] = worst;
        }
        reach = std::move(next);
    }
    p_min_ = *std::min_element(reach.begin() + 1, reach.end());
    if (!(p_min_ > 0.0)) {
        throw std::invalid_argument("ssp: some policy never reaches the absorbing state");
    }
}

std::size_t ChainSsp::next_state(std::size_t s, std::size_t a, double u) const
{
    const auto& cum = cumulative_[s][a];
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) {
        // u within rounding of the row total; take the last state with mass.
        std::size_t n = cum.size() - 1;
        while (n > 0 && kernel_[s][a][n] == 0.0) {
            --n;
        }
        return n;
    }
    return static_cast<std::size_t>(it - cum.begin());
}

ChainSsp default_chain()
{
    constexpr std::size_t s_count = 5;
    const double walk_cost[s_count] = {0.0, 0.0, 1.1, 0.9, 1.3};
    const double walk_forward[s_count] = {0.0, 0.0, 0.6, 0.65, 0.55};
    ChainSsp::Kernel kernel(s_count, std::vector<std::vector<double>>(2, std::vector<double>(s_count, 0.0)));
    ChainSsp::CostTable costs(s_count, std::vector<double>(2, 0.0));
    kernel[0][kAdvance][0] = 1.0;
    kernel[0][kStop][0] = 1.0;
    kernel[1][kAdvance][0] = 0.8;
    kernel[1][kAdvance][s_count - 1] = 0.2;
    kernel[1][kStop][0] = 1.0;
    costs[1][kAdvance] = 1.0;
    costs[1][kStop] = 3.0;
    for (std::size_t s = 2; s < s_count; ++s) {
        for (std::size_t a : {kAdvance, kStop}) {
            kernel[s][a][s - 1] = walk_forward[s];
            kernel[s][a][s] = 1.0 - walk_forward[s];
            costs[s][a] = walk_cost[s];
        }
    }
    return ChainSsp(std::move(kernel), std::move(costs), 0.95, 300);
}

PolicyFeatures PolicyFeatures::tabular(std::size_t n_states, std::size_t n_actions)
{
    if (n_states < 2 || n_actions < 1) {
        throw std::invalid_argument("tabular features: bad shape");
    }
    PolicyFeatures f;
    f.n_states = n_states;
    f.n_actions = n_actions;
    f.dim = (n_states - 1) * n_actions;
    f.phi.assign(n_states * n_actions, Vector::Zero(static_cast<Eigen::Index>(f.dim)));
    for (std::size_t s = 1; s < n_states; ++s) {
        for (std::size_t a = 0; a < n_actions; ++a) {
            f.phi[s * n_actions + a][static_cast<Eigen::Index>((s - 1) * n_actions + a)] = 1.0;
        }
    }
    return f;
}

SoftmaxPolicy::SoftmaxPolicy(const PolicyFeatures& features, const Vector& x) : n_actions_(features.n_actions)
{
    if (static_cast<std::size_t>(x.size()) != features.dim) {
        throw std::invalid_argument("softmax policy: parameter dimension does not match the features");
    }
    require_point(x, "policy parameter");
    probs_.resize(features.n_states * n_actions_);
    std::vector<double> logits(n_actions_);
    for (std::size_t s = 0; s < features.n_states; ++s) {
        for (std::size_t a = 0; a < n_actions_; ++a) {
            logits[a] = x.dot(features.at(s, a));
        }
        double top = *std::max_element(logits.begin(), logits.end());
        double z = 0.0;
        for (double l : logits) {
            z += std::exp(l - top);
        }
        for (std::size_t a = 0; a < n_actions_; ++a) {
            probs_[s * n_actions_ + a] = std::exp(logits[a] - top) / z;
        }
    }
}

std::size_t SoftmaxPolicy::sample(std::size_t s, double u) const
{
    double acc = 0.0;
    for (std::size_t a = 0; a + 1 < n_actions_; ++a) {
        acc += prob(s, a);
        if (u < acc) {
            return a;
        }
    }
    return n_actions_ - 1;
}

EpisodeResult rollout(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start, Rng& rng)
{
    if (start >= env.n_states()) {
        throw std::invalid_argument("rollout: start state out of range");
    }
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    EpisodeResult ep;
    std::size_t s = start;
    double weight = 1.0;
    while (s != 0) {
        if (ep.length == env.horizon_cap()) {
            ep.truncated = true;
            break;
        }
        std::size_t a = policy.sample(s, unif(rng));
        ep.total_cost += weight * env.cost(s, a);
        weight *= env.discount();
        s = env.next_state(s, a, unif(rng));
        ++ep.length;
    }
    return ep;
}

std::vector<double> sample_returns(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start,
                                   std::size_t m, Rng& rng)
{
    std::vector<double> out(m);
    for (auto& v : out) {
        v = rollout(env, policy, start, rng).total_cost;
    }
    return out;
}

double estimate_policy_risk(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start, std::size_t m,
                            const RiskFunctional& functional, Rng& rng)
{
    if (m < 1) {
        throw std::invalid_argument("estimate_policy_risk: need at least one episode");
    }
    return plugin_risk(Edf(sample_returns(env, policy, start, m, rng)), functional);
}

std::vector<double> policy_mean_values(const ChainSsp& env, const SoftmaxPolicy& policy)
{
    const auto n = static_cast<Eigen::Index>(env.n_states() - 1);
    Matrix system = Matrix::Identity(n, n);
    Vector rhs = Vector::Zero(n);
    for (std::size_t s = 1; s < env.n_states(); ++s) {
        auto row = static_cast<Eigen::Index>(s - 1);
        for (std::size_t a = 0; a < env.n_actions(); ++a) {
            double pa = policy.prob(s, a);
            rhs[row] += pa * env.cost(s, a);
            for (std::size_t next = 1; next < env.n_states(); ++next) {
                system(row, static_cast<Eigen::Index>(next - 1)) -=
                    env.discount() * pa * env.transition(s, a, next);
            }
        }
    }
    Vector v = system.partialPivLu().solve(rhs);
    std::vector<double> values(env.n_states(), 0.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        values[static_cast<std::size_t>(i + 1)] = v[i];
    }
    return values;
}

}  // namespace bgo
