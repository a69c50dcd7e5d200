#include "bgo/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bgo {

std::string_view to_string(OracleModel model) { return model == OracleModel::o1 ? "o1" : "o2"; }

OracleModel parse_oracle_model(std::string_view text)
{
    if (text == "o1") {
        return OracleModel::o1;
    }
    if (text == "o2") {
        return OracleModel::o2;
    }
    throw std::invalid_argument("unknown oracle '" + std::string(text) + "'");
}

Vector draw_perturbation(PerturbationKind kind, std::size_t d, Rng& rng)
{
    if (d < 1) {
        throw std::invalid_argument("perturbation dimension must be >= 1");
    }
    Vector delta(static_cast<Eigen::Index>(d));
    if (kind == PerturbationKind::gaussian) {
        std::normal_distribution<double> normal;
        for (auto& v : delta) {
            v = normal(rng);
        }
    } else {
        std::bernoulli_distribution coin(0.5);
        for (auto& v : delta) {
            v = coin(rng) ? 1.0 : -1.0;
        }
    }
    return delta;
}

namespace {

void require_query(double eta, SampleCount m)
{
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw std::invalid_argument("perturbation constant eta must be positive");
    }
    if (!(m >= 1.0)) {
        throw std::invalid_argument("batch size m must be >= 1");
    }
}

}  // namespace

GradientEstimate two_point_estimate(const MeasurementModel& model, const Vector& x, double eta, SampleCount m,
                                    PerturbationKind kind, const Vector& delta, const Scenario& plus,
                                    const Scenario& minus)
{
    require_query(eta, m);
    double y_plus = measure(model, x + eta * delta, m, plus);
    double y_minus = measure(model, x - eta * delta, m, minus);
    if (!std::isfinite(y_plus) || !std::isfinite(y_minus)) {
        throw std::domain_error("objective returned a non-finite measurement");
    }
    double diff = (y_plus - y_minus) / (2.0 * eta);

    GradientEstimate est;
    est.samples_used = 2.0 * m;
    if (kind == PerturbationKind::gaussian) {
        est.grad = delta * diff;
    } else {
        est.grad = diff * delta.cwiseInverse();
    }
    return est;
}

GradientEstimate two_point_estimate(const MeasurementModel& model, const Vector& x, double eta, SampleCount m,
                                    PerturbationKind kind, Rng& rng)
{
    require_query(eta, m);
    Vector delta = draw_perturbation(kind, static_cast<std::size_t>(x.size()), rng);
    Scenario plus = draw_scenario(model, m, rng);
    Scenario minus = draw_scenario(model, m, rng);
    return two_point_estimate(model, x, eta, m, kind, delta, plus, minus);
}

GradientEstimate oracle_call_o1(const MeasurementModel& model, const Vector& x, double eta, SampleCount m, Rng& rng,
                                PerturbationKind kind)
{
    return two_point_estimate(model, x, eta, m, kind, rng);
}

GradientEstimate oracle_call_o2(const MeasurementModel& model, const Vector& x, double eta, SampleCount m, Rng& rng,
                                PerturbationKind kind)
{
    require_query(eta, m);
    Vector delta = draw_perturbation(kind, static_cast<std::size_t>(x.size()), rng);
    Scenario shared = draw_scenario(model, m, rng);
    return two_point_estimate(model, x, eta, m, kind, delta, shared, shared);
}

Oracle make_oracle(MeasurementModel model, OracleModel which, PerturbationKind kind)
{
    model.validate();
    if (which == OracleModel::o1) {
        return [model = std::move(model), kind](const Vector& x, double eta, SampleCount m, Rng& rng) {
            return oracle_call_o1(model, x, eta, m, rng, kind);
        };
    }
    return [model = std::move(model), kind](const Vector& x, double eta, SampleCount m, Rng& rng) {
        return oracle_call_o2(model, x, eta, m, rng, kind);
    };
}

OracleDiagnostics probe_oracle(const Oracle& oracle, const Vector& x, const Vector& true_grad, double eta,
                               SampleCount m, std::size_t trials, Rng& rng)
{
    if (trials < 2) {
        throw std::invalid_argument("probe_oracle: need at least two trials");
    }
    if (true_grad.size() != x.size()) {
        throw std::invalid_argument("probe_oracle: true gradient has the wrong dimension");
    }
    // Welford accumulators per coordinate.
    Vector mean = Vector::Zero(x.size());
    Vector m2 = Vector::Zero(x.size());
    for (std::size_t t = 1; t <= trials; ++t) {
        Vector g = oracle(x, eta, m, rng).grad;
        Vector delta = g - mean;
        mean += delta / static_cast<double>(t);
        m2 += delta.cwiseProduct(g - mean);
    }
    OracleDiagnostics diag;
    diag.trials = trials;
    diag.empirical_bias_sup = (mean - true_grad).cwiseAbs().maxCoeff();
    diag.empirical_variance = m2.sum() / static_cast<double>(trials - 1);
    return diag;
}

}  // namespace bgo
