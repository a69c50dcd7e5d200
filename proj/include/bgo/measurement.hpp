#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "bgo/objective.hpp"
#include "bgo/types.hpp"

namespace bgo {

enum class ErrorKind { none, deterministic_positive, half_normal, cvar_estimator };

std::string_view to_string(ErrorKind kind);
ErrorKind parse_error_kind(std::string_view text);

/// Biased function measurements with batch size m:
///
///   F(x, m) = f(x) + sigma * (xi_0 + <xi, x - x*> / sqrt(d)) + e(x, m)
///
/// xi_0 and xi are standard normal, so the noise is zero-mean with a random
/// slope; its variance is sigma^2 at x*. The estimation error is positive:
///
///   deterministic_positive   e = c_e * s(x) / sqrt(m)
///   half_normal              e = c_e * s(x) * |Z| / sqrt(m)
///
/// with weight s(x) = 1 + f(x) - f(x*) >= 1. The weight makes the error
/// depend on the query point, so it biases two-point gradient estimates
/// instead of cancelling in y+ - y-.
///
/// cvar_estimator requires a CvarObjective: the measurement is the plug-in
/// CVaR estimate over m fresh samples and nothing else is injected.
struct MeasurementModel {
    std::shared_ptr<const Objective> objective;
    double noise_std = 0.0;
    double error_coeff = 0.0;
    ErrorKind error_kind = ErrorKind::none;

    void validate() const;
};

/// One realisation of the measurement randomness for a batch. Measuring two
/// points with the same scenario uses common random numbers.
struct Scenario {
    double offset = 0.0;
    Vector slope;
    double error_draw = 0.0;
    std::vector<double> standard_normals;
};

Scenario draw_scenario(const MeasurementModel& model, SampleCount m, Rng& rng);

/// Error weight s(x) = 1 + f(x) - f(x*).
double error_weight(const Objective& objective, double fx);

double measure(const MeasurementModel& model, const Vector& x, SampleCount m, const Scenario& scenario);
double measure(const MeasurementModel& model, const Vector& x, SampleCount m, Rng& rng);

}  // namespace bgo
