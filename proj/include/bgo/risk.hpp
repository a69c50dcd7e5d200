#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgo {

/// Risk level alpha in the open interval (0, 1).
class RiskLevel {
public:
    explicit RiskLevel(double alpha);
    double value() const { return alpha_; }

private:
    double alpha_;
};

/// Empirical distribution function, stored as its sorted sample.
class Edf {
public:
    /// Throws std::invalid_argument on empty or non-finite input.
    explicit Edf(std::vector<double> samples);

    std::size_t size() const { return sorted_.size(); }
    std::span<const double> sorted() const { return sorted_; }

    /// 1-based order statistic X_[i].
    double order_statistic(std::size_t i) const;

    double mean() const;

private:
    std::vector<double> sorted_;
};

inline Edf build_edf(std::vector<double> samples) { return Edf(std::move(samples)); }

/// X_[floor(m alpha)], index clamped to [1, m].
double var_estimate(const Edf& edf, RiskLevel level);

/// (1 / (m (1 - alpha))) * sum of X_i over X_i >= var_estimate.
///
/// Ties at the VaR estimate are all counted, and the normalisation is
/// m (1 - alpha) rather than the realised tail size. On an atom at c the
/// estimate is therefore c / (1 - alpha), not c.
double cvar_estimate(const Edf& edf, RiskLevel level);

/// Number of samples entering the cvar_estimate tail sum.
std::size_t cvar_tail_count(const Edf& edf, RiskLevel level);

/// Closed registry of plug-in risk functionals.
struct RiskFunctional {
    enum class Kind { cvar, mean, mean_plus_k_std };

    Kind kind = Kind::mean;
    double param = 0.0;  // alpha for cvar, k for mean_plus_k_std

    static RiskFunctional cvar(double alpha);
    static RiskFunctional mean();
    static RiskFunctional mean_plus_k_std(double k);

    /// Parses "mean", "cvar:<alpha>" or "mean_plus_k_std:<k>".
    static RiskFunctional parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const RiskFunctional&) const = default;
};

/// rho(F_m): the functional applied to the EDF. The standard deviation in
/// mean_plus_k_std is the plug-in (1/m) one.
double plugin_risk(const Edf& edf, const RiskFunctional& functional);

/// CVaR_alpha of N(mu, sigma^2): mu + sigma * phi(Phi^{-1}(alpha)) / (1 - alpha).
double gaussian_cvar_reference(double mu, double sigma, RiskLevel level);

}  // namespace bgo
