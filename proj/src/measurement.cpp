#include "bgo/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bgo {

namespace {

// cvar_estimator draws its batch explicitly.
constexpr SampleCount kMaxExplicitBatch = 1e8;

void require_batch(SampleCount m)
{
    if (!(m >= 1.0) || !std::isfinite(m)) {
        throw std::invalid_argument("batch size must be >= 1");
    }
}

}  // namespace

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::none:
        return "none";
    case ErrorKind::deterministic_positive:
        return "deterministic_positive";
    case ErrorKind::half_normal:
        return "half_normal";
    case ErrorKind::cvar_estimator:
        return "cvar_estimator";
    }
    return "none";
}

ErrorKind parse_error_kind(std::string_view text)
{
    for (auto k : {ErrorKind::none, ErrorKind::deterministic_positive, ErrorKind::half_normal,
                   ErrorKind::cvar_estimator}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown error kind '" + std::string(text) + "'");
}

void MeasurementModel::validate() const
{
    if (!objective) {
        throw std::invalid_argument("measurement model: missing objective");
    }
    if (!(noise_std >= 0.0) || !std::isfinite(noise_std)) {
        throw std::invalid_argument("measurement model: noise_std must be >= 0");
    }
    if (!(error_coeff >= 0.0) || !std::isfinite(error_coeff)) {
        throw std::invalid_argument("measurement model: error_coeff must be >= 0");
    }
    if (error_kind == ErrorKind::cvar_estimator) {
        if (!dynamic_cast<const CvarObjective*>(objective.get())) {
            throw std::invalid_argument("measurement model: cvar_estimator needs a CVaR objective");
        }
        if (noise_std != 0.0) {
            throw std::invalid_argument("measurement model: cvar_estimator carries no injected noise");
        }
    }
}

Scenario draw_scenario(const MeasurementModel& model, SampleCount m, Rng& rng)
{
    require_batch(m);
    std::normal_distribution<double> normal;
    Scenario s;
    if (model.noise_std > 0.0) {
        s.offset = normal(rng);
        s.slope.resize(static_cast<Eigen::Index>(model.objective->dim()));
        for (auto& v : s.slope) {
            v = normal(rng);
        }
    }
    switch (model.error_kind) {
    case ErrorKind::half_normal:
        s.error_draw = std::abs(normal(rng));
        break;
    case ErrorKind::cvar_estimator: {
        if (m > kMaxExplicitBatch) {
            throw std::invalid_argument("cvar_estimator: batch too large to sample explicitly");
        }
        s.standard_normals.resize(static_cast<std::size_t>(m));
        for (auto& v : s.standard_normals) {
            v = normal(rng);
        }
        break;
    }
    case ErrorKind::none:
    case ErrorKind::deterministic_positive:
        break;
    }
    return s;
}

double error_weight(const Objective& objective, double fx) { return 1.0 + (fx - objective.min_value()); }

double measure(const MeasurementModel& model, const Vector& x, SampleCount m, const Scenario& scenario)
{
    require_batch(m);
    const Objective& obj = *model.objective;
    if (model.error_kind == ErrorKind::cvar_estimator) {
        const auto& cvar = static_cast<const CvarObjective&>(obj);
        return cvar.estimate(x, scenario.standard_normals);
    }

    double fx = obj.value(x);
    double y = fx;
    if (model.noise_std > 0.0) {
        double d = static_cast<double>(x.size());
        y += model.noise_std * (scenario.offset + scenario.slope.dot(x - obj.minimizer()) / std::sqrt(d));
    }
    switch (model.error_kind) {
    case ErrorKind::deterministic_positive:
        y += model.error_coeff * error_weight(obj, fx) / std::sqrt(m);
        break;
    case ErrorKind::half_normal:
        y += model.error_coeff * error_weight(obj, fx) * scenario.error_draw / std::sqrt(m);
        break;
    case ErrorKind::none:
    case ErrorKind::cvar_estimator:
        break;
    }
    return y;
}

double measure(const MeasurementModel& model, const Vector& x, SampleCount m, Rng& rng)
{
    return measure(model, x, m, draw_scenario(model, m, rng));
}

}  // namespace bgo
