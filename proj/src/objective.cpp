#include "bgo/objective.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace bgo {

void Objective::check_dim(const Vector& x) const
{
    if (static_cast<std::size_t>(x.size()) != dim()) {
        throw std::invalid_argument(name() + ": dimension mismatch (expected " + std::to_string(dim()) +
                                    ", got " + std::to_string(x.size()) + ")");
    }
}

Quadratic::Quadratic(Matrix a, Vector x_star) : a_(std::move(a)), x_star_(std::move(x_star))
{
    require_point(x_star_, "quadratic minimizer");
    if (a_.rows() != x_star_.size() || a_.cols() != x_star_.size()) {
        throw std::invalid_argument("quadratic: A must be d x d");
    }
    if (!a_.isApprox(a_.transpose(), 1e-12)) {
        throw std::invalid_argument("quadratic: A must be symmetric");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> eig(a_, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, eig.eigenvalues().cwiseAbs().maxCoeff())) {
        throw std::invalid_argument("quadratic: A must be positive semidefinite");
    }
    lipschitz_ = eig.eigenvalues().maxCoeff();
}

double Quadratic::value(const Vector& x) const
{
    check_dim(x);
    Vector u = x - x_star_;
    return 0.5 * u.dot(a_ * u);
}

Vector Quadratic::gradient(const Vector& x) const
{
    check_dim(x);
    return a_ * (x - x_star_);
}

PseudoHuber::PseudoHuber(Vector x_star) : x_star_(std::move(x_star))
{
    require_point(x_star_, "pseudo_huber minimizer");
}

double PseudoHuber::value(const Vector& x) const
{
    check_dim(x);
    double f = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double u = x[i] - x_star_[i];
        f += std::sqrt(1.0 + u * u) - 1.0;
    }
    return f;
}

Vector PseudoHuber::gradient(const Vector& x) const
{
    check_dim(x);
    Vector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double u = x[i] - x_star_[i];
        g[i] = u / std::sqrt(1.0 + u * u);
    }
    return g;
}

BoundedNonconvex::BoundedNonconvex(Vector x_star) : x_star_(std::move(x_star))
{
    require_point(x_star_, "bounded_nonconvex minimizer");
}

double BoundedNonconvex::value(const Vector& x) const
{
    check_dim(x);
    double f = 0.0;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double u2 = (x[i] - x_star_[i]) * (x[i] - x_star_[i]);
        f += u2 / (1.0 + u2);
    }
    return f;
}

Vector BoundedNonconvex::gradient(const Vector& x) const
{
    check_dim(x);
    Vector g(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double u = x[i] - x_star_[i];
        double q = 1.0 + u * u;
        g[i] = 2.0 * u / (q * q);
    }
    return g;
}

CvarObjective::CvarObjective(std::shared_ptr<const Objective> base, double sigma, RiskLevel level)
    : base_(std::move(base)), sigma_(sigma), level_(level)
{
    if (!base_) {
        throw std::invalid_argument("cvar objective: missing base objective");
    }
    offset_ = gaussian_cvar_reference(0.0, sigma_, level_);
}

double CvarObjective::value(const Vector& x) const { return base_->value(x) + offset_; }

double CvarObjective::estimate(const Vector& x, std::span<const double> standard_normals) const
{
    double mu = base_->value(x);
    std::vector<double> samples(standard_normals.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        samples[i] = mu + sigma_ * standard_normals[i];
    }
    return cvar_estimate(Edf(std::move(samples)), level_);
}

std::shared_ptr<const Objective> make_objective(std::string_view name, std::size_t dim)
{
    if (dim < 1) {
        throw std::invalid_argument("objective dimension must be >= 1");
    }
    Vector x_star = Vector::Zero(static_cast<Eigen::Index>(dim));
    if (name == "quadratic") {
        Vector diag(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) {
            diag[static_cast<Eigen::Index>(i)] = static_cast<double>(i + 1) / static_cast<double>(dim);
        }
        return std::make_shared<Quadratic>(Matrix(diag.asDiagonal()), x_star);
    }
    if (name == "pseudo_huber") {
        return std::make_shared<PseudoHuber>(x_star);
    }
    if (name == "bounded_nonconvex") {
        return std::make_shared<BoundedNonconvex>(x_star);
    }
    throw std::invalid_argument("unknown objective '" + std::string(name) + "'");
}

Vector finite_diff_grad(const Objective& objective, const Vector& x, double h)
{
    if (!(h > 0.0)) {
        throw std::invalid_argument("finite_diff_grad: h must be positive");
    }
    Vector g(x.size());
    Vector probe = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        probe[i] = x[i] + h;
        double up = objective.value(probe);
        probe[i] = x[i] - h;
        double down = objective.value(probe);
        probe[i] = x[i];
        g[i] = (up - down) / (2.0 * h);
    }
    return g;
}

}  // namespace bgo
