#include "bgo/risk.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/normal.hpp>

namespace bgo {

RiskLevel::RiskLevel(double alpha) : alpha_(alpha)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("risk level must lie in (0, 1)");
    }
}

Edf::Edf(std::vector<double> samples) : sorted_(std::move(samples))
{
    if (sorted_.empty()) {
        throw std::invalid_argument("EDF needs at least one sample");
    }
    for (double v : sorted_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("EDF sample is not finite");
        }
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double Edf::order_statistic(std::size_t i) const
{
    if (i < 1 || i > sorted_.size()) {
        throw std::out_of_range("order statistic index out of range");
    }
    return sorted_[i - 1];
}

double Edf::mean() const
{
    return std::accumulate(sorted_.begin(), sorted_.end(), 0.0) / static_cast<double>(sorted_.size());
}

namespace {

std::size_t var_index(std::size_t m, double alpha)
{
    auto idx = static_cast<std::size_t>(std::floor(static_cast<double>(m) * alpha));
    return std::clamp<std::size_t>(idx, 1, m);
}

// First position (0-based) of the tail {X >= VaR}.
std::size_t tail_begin(const Edf& edf, RiskLevel level)
{
    auto xs = edf.sorted();
    double v = xs[var_index(xs.size(), level.value()) - 1];
    return static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), v) - xs.begin());
}

}  // namespace

double var_estimate(const Edf& edf, RiskLevel level)
{
    return edf.order_statistic(var_index(edf.size(), level.value()));
}

std::size_t cvar_tail_count(const Edf& edf, RiskLevel level)
{
    return edf.size() - tail_begin(edf, level);
}

double cvar_estimate(const Edf& edf, RiskLevel level)
{
    auto xs = edf.sorted();
    double tail = std::accumulate(xs.begin() + static_cast<std::ptrdiff_t>(tail_begin(edf, level)), xs.end(), 0.0);
    // m - m alpha rounds better than m (1 - alpha): exact for m = 10, alpha = 0.8.
    const double m = static_cast<double>(xs.size());
    return tail / (m - m * level.value());
}

RiskFunctional RiskFunctional::cvar(double alpha)
{
    RiskLevel check(alpha);
    return {Kind::cvar, check.value()};
}

RiskFunctional RiskFunctional::mean() { return {Kind::mean, 0.0}; }

RiskFunctional RiskFunctional::mean_plus_k_std(double k)
{
    if (!std::isfinite(k)) {
        throw std::invalid_argument("mean_plus_k_std: k must be finite");
    }
    return {Kind::mean_plus_k_std, k};
}

RiskFunctional RiskFunctional::parse(std::string_view text)
{
    auto colon = text.find(':');
    std::string_view tag = text.substr(0, colon);
    double param = 0.0;
    bool has_param = colon != std::string_view::npos;
    if (has_param) {
        std::string_view rest = text.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), param);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            throw std::invalid_argument("risk functional: bad parameter in '" + std::string(text) + "'");
        }
    }
    if (tag == "mean" && !has_param) {
        return mean();
    }
    if (tag == "cvar" && has_param) {
        return cvar(param);
    }
    if (tag == "mean_plus_k_std" && has_param) {
        return mean_plus_k_std(param);
    }
    throw std::invalid_argument("unknown risk functional '" + std::string(text) + "'");
}

std::string RiskFunctional::to_string() const
{
    // Shortest text that parses back to the same double.
    auto shortest = [](double v) {
        char buf[32];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
        return std::string(buf, end);
    };
    switch (kind) {
    case Kind::mean:
        return "mean";
    case Kind::cvar:
        return "cvar:" + shortest(param);
    case Kind::mean_plus_k_std:
        return "mean_plus_k_std:" + shortest(param);
    }
    return "";
}

double plugin_risk(const Edf& edf, const RiskFunctional& functional)
{
    switch (functional.kind) {
    case RiskFunctional::Kind::mean:
        return edf.mean();
    case RiskFunctional::Kind::cvar:
        return cvar_estimate(edf, RiskLevel(functional.param));
    case RiskFunctional::Kind::mean_plus_k_std: {
        double mu = edf.mean();
        double ss = 0.0;
        for (double v : edf.sorted()) {
            ss += (v - mu) * (v - mu);
        }
        return mu + functional.param * std::sqrt(ss / static_cast<double>(edf.size()));
    }
    }
    throw std::invalid_argument("unknown risk functional");
}

double gaussian_cvar_reference(double mu, double sigma, RiskLevel level)
{
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("gaussian_cvar_reference: sigma must be positive");
    }
    boost::math::normal_distribution<double> standard;
    double z = boost::math::quantile(standard, level.value());
    return mu + sigma * boost::math::pdf(standard, z) / (1.0 - level.value());
}

}  // namespace bgo
