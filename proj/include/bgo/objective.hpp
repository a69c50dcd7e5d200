#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "bgo/risk.hpp"
#include "bgo/types.hpp"

namespace bgo {

/// Smooth objective with analytic value, gradient and known minimum.
///
/// Implementations check that query points match dim() and throw
/// std::invalid_argument otherwise.
class Objective {
public:
    virtual ~Objective() = default;

    virtual std::size_t dim() const = 0;
    virtual double value(const Vector& x) const = 0;
    virtual Vector gradient(const Vector& x) const = 0;

    virtual const Vector& minimizer() const = 0;
    virtual double min_value() const = 0;

    /// Lipschitz constant of the gradient.
    virtual double smoothness() const = 0;

    virtual bool convex() const = 0;
    virtual std::string name() const = 0;

protected:
    void check_dim(const Vector& x) const;
};

/// f(x) = 1/2 (x - x*)^T A (x - x*), A symmetric positive semidefinite.
class Quadratic final : public Objective {
public:
    Quadratic(Matrix a, Vector x_star);

    std::size_t dim() const override { return static_cast<std::size_t>(x_star_.size()); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    const Vector& minimizer() const override { return x_star_; }
    double min_value() const override { return 0.0; }
    double smoothness() const override { return lipschitz_; }
    bool convex() const override { return true; }
    std::string name() const override { return "quadratic"; }

    const Matrix& hessian() const { return a_; }

private:
    Matrix a_;
    Vector x_star_;
    double lipschitz_;
};

/// f(x) = sum_i sqrt(1 + (x_i - x*_i)^2) - 1. Convex, L = 1, |df/dx_i| < 1.
class PseudoHuber final : public Objective {
public:
    explicit PseudoHuber(Vector x_star);

    std::size_t dim() const override { return static_cast<std::size_t>(x_star_.size()); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    const Vector& minimizer() const override { return x_star_; }
    double min_value() const override { return 0.0; }
    double smoothness() const override { return 1.0; }
    bool convex() const override { return true; }
    std::string name() const override { return "pseudo_huber"; }

private:
    Vector x_star_;
};

/// f(x) = sum_i u_i^2 / (1 + u_i^2), u = x - x*. Nonconvex, bounded gradient,
/// curvature bounded by 2, global minimum 0 at x*.
class BoundedNonconvex final : public Objective {
public:
    explicit BoundedNonconvex(Vector x_star);

    std::size_t dim() const override { return static_cast<std::size_t>(x_star_.size()); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override;
    const Vector& minimizer() const override { return x_star_; }
    double min_value() const override { return 0.0; }
    double smoothness() const override { return 2.0; }
    bool convex() const override { return false; }
    std::string name() const override { return "bounded_nonconvex"; }

private:
    Vector x_star_;
};

/// CVaR of N(mu(x), sigma^2) where mu is a base objective. Measured through
/// the plug-in estimator on m fresh samples, so its error is intrinsic.
class CvarObjective final : public Objective {
public:
    CvarObjective(std::shared_ptr<const Objective> base, double sigma, RiskLevel level);

    std::size_t dim() const override { return base_->dim(); }
    double value(const Vector& x) const override;
    Vector gradient(const Vector& x) const override { return base_->gradient(x); }
    const Vector& minimizer() const override { return base_->minimizer(); }
    double min_value() const override { return base_->min_value() + offset_; }
    double smoothness() const override { return base_->smoothness(); }
    bool convex() const override { return base_->convex(); }
    std::string name() const override { return "cvar(" + base_->name() + ")"; }

    double sigma() const { return sigma_; }
    RiskLevel level() const { return level_; }

    /// Plug-in CVaR estimate of mu(x) + sigma Z over the given standard normal draws.
    double estimate(const Vector& x, std::span<const double> standard_normals) const;

private:
    std::shared_ptr<const Objective> base_;
    double sigma_;
    RiskLevel level_;
    double offset_;
};

/// Named objective with harness defaults: x* = 0; the quadratic uses
/// A = diag(1/d, 2/d, ..., 1) so that L = 1.
/// Names: quadratic, pseudo_huber, bounded_nonconvex.
std::shared_ptr<const Objective> make_objective(std::string_view name, std::size_t dim);

/// Coordinatewise central differences on the exact value function.
Vector finite_diff_grad(const Objective& objective, const Vector& x, double h);

}  // namespace bgo
