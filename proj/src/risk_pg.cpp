#include "bgo/risk_pg.hpp"

#include <cmath>
#include <stdexcept>

namespace bgo {

namespace {

std::size_t episode_count(SampleCount m)
{
    if (!(m >= 1.0) || m > 1e9) {
        throw std::invalid_argument("risk-pg: episode batch must lie in [1, 1e9]");
    }
    return static_cast<std::size_t>(m);
}

}  // namespace

GradientEstimate risk_gradient_estimate(const ChainSsp& env, std::size_t start, const PolicyFeatures& features,
                                        const Vector& x, double eta, SampleCount m,
                                        const RiskFunctional& functional, const Vector& delta, Rng& plus_stream,
                                        Rng& minus_stream)
{
    if (!(eta > 0.0)) {
        throw std::invalid_argument("risk-pg: eta must be positive");
    }
    std::size_t episodes = episode_count(m);
    SoftmaxPolicy plus(features, x + eta * delta);
    SoftmaxPolicy minus(features, x - eta * delta);
    double rho_plus = estimate_policy_risk(env, plus, start, episodes, functional, plus_stream);
    double rho_minus = estimate_policy_risk(env, minus, start, episodes, functional, minus_stream);
    return GradientEstimate{delta * ((rho_plus - rho_minus) / (2.0 * eta)), 2.0 * static_cast<double>(episodes)};
}

Oracle make_risk_oracle(const ChainSsp& env, std::size_t start, const PolicyFeatures& features,
                        const RiskFunctional& functional)
{
    if (start >= env.n_states()) {
        throw std::invalid_argument("risk-pg: start state out of range");
    }
    if (features.n_states != env.n_states() || features.n_actions != env.n_actions()) {
        throw std::invalid_argument("risk-pg: features do not match the environment");
    }
    return [env, start, features, functional](const Vector& x, double eta, SampleCount m, Rng& rng) {
        Vector delta = draw_perturbation(PerturbationKind::gaussian, features.dim, rng);
        return risk_gradient_estimate(env, start, features, x, eta, m, functional, delta, rng, rng);
    };
}

RunTrace risk_pg(const ChainSsp& env, std::size_t start, const PolicyFeatures& features, const Vector& x1,
                 const IterationSchedule& schedule, const RiskFunctional& functional, Rng& rng,
                 const RunOptions& options)
{
    return rsg_bgo(make_risk_oracle(env, start, features, functional), x1, schedule, rng, options);
}

}  // namespace bgo
