#pragma once

#include <cmath>
#include <memory>

#include "bgo/measurement.hpp"
#include "bgo/objective.hpp"

namespace testing {

// f(x) = c on R^d.
class Constant final : public bgo::Objective {
public:
    Constant(double c, std::size_t d) : c_(c), x_star_(bgo::Vector::Zero(static_cast<Eigen::Index>(d))) {}
    std::size_t dim() const override { return static_cast<std::size_t>(x_star_.size()); }
    double value(const bgo::Vector&) const override { return c_; }
    bgo::Vector gradient(const bgo::Vector& x) const override { return bgo::Vector::Zero(x.size()); }
    const bgo::Vector& minimizer() const override { return x_star_; }
    double min_value() const override { return c_; }
    double smoothness() const override { return 0.0; }
    bool convex() const override { return true; }
    std::string name() const override { return "constant"; }

private:
    double c_;
    bgo::Vector x_star_;
};

// f(x) = x^4 on R^1.
class Quartic final : public bgo::Objective {
public:
    Quartic() : x_star_(bgo::Vector::Zero(1)) {}
    std::size_t dim() const override { return 1; }
    double value(const bgo::Vector& x) const override { return std::pow(x[0], 4); }
    bgo::Vector gradient(const bgo::Vector& x) const override { return bgo::Vector::Constant(1, 4 * std::pow(x[0], 3)); }
    const bgo::Vector& minimizer() const override { return x_star_; }
    double min_value() const override { return 0.0; }
    double smoothness() const override { return 12.0; }
    bool convex() const override { return true; }
    std::string name() const override { return "quartic"; }

private:
    bgo::Vector x_star_;
};

// f(x) = x^2 on R^1.
inline std::shared_ptr<const bgo::Objective> square()
{
    return std::make_shared<bgo::Quadratic>(bgo::Matrix::Constant(1, 1, 2.0), bgo::Vector::Zero(1));
}

inline bgo::Vector vec(std::initializer_list<double> v)
{
    bgo::Vector out(static_cast<Eigen::Index>(v.size()));
    Eigen::Index i = 0;
    for (double x : v) {
        out[i++] = x;
    }
    return out;
}

inline bgo::MeasurementModel clean(std::shared_ptr<const bgo::Objective> obj)
{
    return bgo::MeasurementModel{std::move(obj), 0.0, 0.0, bgo::ErrorKind::none};
}

}  // namespace testing
