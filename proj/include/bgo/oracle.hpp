#pragma once

#include <functional>
#include <string_view>

#include "bgo/measurement.hpp"
#include "bgo/types.hpp"

namespace bgo {

enum class PerturbationKind { gaussian, rademacher };
enum class OracleModel { o1, o2 };

std::string_view to_string(OracleModel model);
OracleModel parse_oracle_model(std::string_view text);

struct GradientEstimate {
    Vector grad;
    SampleCount samples_used = 0;  // function-measurement samples, 2m per two-point call
};

/// Query interface shared by the optimizers: (x, eta, m, rng) -> estimate.
using Oracle = std::function<GradientEstimate(const Vector& x, double eta, SampleCount m, Rng& rng)>;

/// One perturbation direction: i.i.d. N(0, 1) or uniform on {-1, +1}.
Vector draw_perturbation(PerturbationKind kind, std::size_t d, Rng& rng);

/// Symmetric two-point estimate with the direction and measurement
/// randomness fixed by the caller. Gaussian kind returns
/// delta * (y+ - y-) / (2 eta); Rademacher kind returns the vector with
/// entries (y+ - y-) / (2 eta delta_i). Throws std::domain_error when a
/// measurement is not finite.
GradientEstimate two_point_estimate(const MeasurementModel& model, const Vector& x, double eta, SampleCount m,
                                    PerturbationKind kind, const Vector& delta, const Scenario& plus,
                                    const Scenario& minus);

/// Draws the direction and independent measurement randomness at x +/- eta delta.
GradientEstimate two_point_estimate(const MeasurementModel& model, const Vector& x, double eta, SampleCount m,
                                    PerturbationKind kind, Rng& rng);

/// O1 oracle: two-point estimate with independent randomness at the two
/// points. Bias O(eta^2) + O(1/(eta sqrt m)), variance O(1/eta^2).
GradientEstimate oracle_call_o1(const MeasurementModel& model, const Vector& x, double eta, SampleCount m, Rng& rng,
                                PerturbationKind kind = PerturbationKind::gaussian);

/// O2 oracle: two-point estimate over one shared scenario (common random
/// numbers at x +/- eta delta). Zero-mean noise that is smooth in x then
/// enters through its derivative, so the variance stays bounded as eta -> 0
/// while the bias keeps the O1 form.
GradientEstimate oracle_call_o2(const MeasurementModel& model, const Vector& x, double eta, SampleCount m, Rng& rng,
                                PerturbationKind kind = PerturbationKind::gaussian);

Oracle make_oracle(MeasurementModel model, OracleModel which, PerturbationKind kind = PerturbationKind::gaussian);

struct OracleDiagnostics {
    double empirical_bias_sup = 0.0;   // || mean(g) - true_grad ||_inf
    double empirical_variance = 0.0;   // trace of the sample covariance
    std::size_t trials = 0;
};

/// Runs the oracle `trials` times at x and summarises bias and variance.
OracleDiagnostics probe_oracle(const Oracle& oracle, const Vector& x, const Vector& true_grad, double eta,
                               SampleCount m, std::size_t trials, Rng& rng);

}  // namespace bgo
