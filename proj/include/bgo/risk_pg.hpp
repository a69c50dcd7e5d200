#pragma once

#include "bgo/optimizer.hpp"
#include "bgo/ssp.hpp"

namespace bgo {

/// Two-point risk gradient with the direction fixed: rho+ from m episodes at
/// x + eta delta drawn from plus_stream, rho- from m episodes at
/// x - eta delta drawn from minus_stream. Returns delta (rho+ - rho-) / (2 eta)
/// with samples_used = 2m episodes.
GradientEstimate risk_gradient_estimate(const ChainSsp& env, std::size_t start, const PolicyFeatures& features,
                                        const Vector& x, double eta, SampleCount m,
                                        const RiskFunctional& functional, const Vector& delta, Rng& plus_stream,
                                        Rng& minus_stream);

/// Oracle over the policy parameter: Gaussian delta, disjoint episode sets
/// at the two perturbed policies.
Oracle make_risk_oracle(const ChainSsp& env, std::size_t start, const PolicyFeatures& features,
                        const RiskFunctional& functional);

/// RSG-BGO on x -> rho(K_x). total_samples counts episodes.
RunTrace risk_pg(const ChainSsp& env, std::size_t start, const PolicyFeatures& features, const Vector& x1,
                 const IterationSchedule& schedule, const RiskFunctional& functional, Rng& rng,
                 const RunOptions& options = {});

}  // namespace bgo
