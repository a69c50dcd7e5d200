#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bgo/oracle.hpp"
#include "bgo/schedule.hpp"
#include "bgo/types.hpp"

namespace bgo {

struct RunOptions {
    /// Keep every stride-th iterate x_1, x_{1+s}, ... in the trace; 0 keeps none.
    std::size_t store_stride = 0;
};

struct RunTrace {
    std::vector<Vector> iterates;
    Vector final_point;      // x_{N+1}
    Vector returned_point;   // x_R for RSG, x_{N+1} for SGD
    std::size_t returned_index = 0;
    SampleCount total_samples = 0;  // raw measurements, 2 * sum m_k for two-point oracles
    std::size_t oracle_calls = 0;
};

/// Raised when an iterate stops being finite. iteration() is the 1-based k
/// whose update produced it.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(std::size_t iteration, const std::string& what)
        : std::runtime_error(what), iteration_(iteration)
    {
    }
    std::size_t iteration() const { return iteration_; }

private:
    std::size_t iteration_;
};

/// Randomized stochastic gradient: N updates x_{k+1} = x_k - gamma_k g_k,
/// returns x_R for R drawn with P(R = k) = gamma_k / sum(gamma), where x_k is
/// the iterate at which the k-th oracle call was made.
RunTrace rsg_bgo(const Oracle& oracle, const Vector& x1, const IterationSchedule& schedule, Rng& rng,
                 const RunOptions& options = {});

/// Same update loop, returns the last iterate x_{N+1}.
RunTrace sgd_bgo(const Oracle& oracle, const Vector& x1, const IterationSchedule& schedule, Rng& rng,
                 const RunOptions& options = {});

}  // namespace bgo
