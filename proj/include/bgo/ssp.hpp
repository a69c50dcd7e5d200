#pragma once

#include <cstddef>
#include <vector>

#include "bgo/risk.hpp"
#include "bgo/types.hpp"

namespace bgo {

/// Finite stochastic shortest path MDP. State 0 is absorbing and cost-free.
///
/// transitions[s][a][s'] = P(s' | s, a), costs[s][a] = k(s, a).
class ChainSsp {
public:
    using Kernel = std::vector<std::vector<std::vector<double>>>;
    using CostTable = std::vector<std::vector<double>>;

    /// Throws std::invalid_argument when a row is not stochastic within 1e-12,
    /// a cost is negative or k(0, .) != 0, the discount is outside (0, 1), or
    /// some policy can avoid state 0 forever.
    ChainSsp(Kernel transitions, CostTable costs, double discount, std::size_t horizon_cap);

    std::size_t n_states() const { return costs_.size(); }
    std::size_t n_actions() const { return costs_.front().size(); }
    double discount() const { return discount_; }
    std::size_t horizon_cap() const { return horizon_cap_; }

    double transition(std::size_t s, std::size_t a, std::size_t next) const { return kernel_[s][a][next]; }
    double cost(std::size_t s, std::size_t a) const { return costs_[s][a]; }
    double max_cost() const { return max_cost_; }

    /// Worst-case probability, over states and deterministic action choices,
    /// of reaching state 0 within n_states() - 1 steps.
    double p_min() const { return p_min_; }

    /// Samples s' ~ P(. | s, a) from a uniform draw u in [0, 1).
    std::size_t next_state(std::size_t s, std::size_t a, double u) const;

private:
    Kernel kernel_;
    std::vector<std::vector<std::vector<double>>> cumulative_;
    CostTable costs_;
    double discount_;
    std::size_t horizon_cap_;
    double max_cost_ = 0.0;
    double p_min_ = 0.0;
};

/// Five states, two actions, start in state 4. States 4, 3, 2 form a walk
/// toward state 1 where both actions coincide: step costs 1.3, 0.9, 1.1,
/// forward w.p. 0.55, 0.65, 0.6, otherwise stay. The choice happens in state 1:
/// advance costs 1 and exits w.p. 0.8 but falls back to state 4 w.p. 0.2;
/// stop exits surely at cost 3. Advance has the lower mean return and the
/// heavier tail. Discount 0.95, horizon cap 300 (>= 50 / p_min).
ChainSsp default_chain();

inline constexpr std::size_t kDefaultStartState = 4;
inline constexpr std::size_t kAdvance = 0;
inline constexpr std::size_t kStop = 1;

/// phi(s, a) for every state-action pair, all of length dim.
struct PolicyFeatures {
    std::size_t n_states = 0;
    std::size_t n_actions = 0;
    std::size_t dim = 0;
    std::vector<Vector> phi;  // index s * n_actions + a

    const Vector& at(std::size_t s, std::size_t a) const { return phi[s * n_actions + a]; }

    /// One indicator per (s, a) with s >= 1; state 0 gets zero features.
    static PolicyFeatures tabular(std::size_t n_states, std::size_t n_actions);
};

/// pi_x(a | s) proportional to exp(x . phi(s, a)), tabulated at construction.
class SoftmaxPolicy {
public:
    SoftmaxPolicy(const PolicyFeatures& features, const Vector& x);

    double prob(std::size_t s, std::size_t a) const { return probs_[s * n_actions_ + a]; }
    std::size_t sample(std::size_t s, double u) const;

private:
    std::size_t n_actions_;
    std::vector<double> probs_;
};

struct EpisodeResult {
    double total_cost = 0.0;  // sum_t discount^t k(s_t, a_t)
    std::size_t length = 0;
    bool truncated = false;
};

EpisodeResult rollout(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start, Rng& rng);

/// Discounted returns of m independent episodes.
std::vector<double> sample_returns(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start,
                                   std::size_t m, Rng& rng);

/// plugin_risk over the EDF of m episode returns.
double estimate_policy_risk(const ChainSsp& env, const SoftmaxPolicy& policy, std::size_t start, std::size_t m,
                            const RiskFunctional& functional, Rng& rng);

/// Exact expected discounted return from every state, by solving
/// (I - discount P_pi) V = k_pi. Ignores the horizon cap.
std::vector<double> policy_mean_values(const ChainSsp& env, const SoftmaxPolicy& policy);

}  // namespace bgo
