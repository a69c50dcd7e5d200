#pragma once

#include <cstdint>
#include <vector>

#include "bgo/types.hpp"

namespace bgo {

/// Per-iteration step size, perturbation constant and batch size, k = 1..N
/// (stored 0-based).
struct IterationSchedule {
    std::vector<double> gammas;
    std::vector<double> etas;
    std::vector<SampleCount> batches;

    std::size_t size() const { return gammas.size(); }

    /// Throws std::invalid_argument unless the three vectors share a length
    /// N >= 1 with gamma > 0, eta > 0 and integral m >= 1.
    void validate() const;
};

/// Dyadic boundaries N_i = N - ceil(N / 2^i) for 0 <= i <= l and N_{l+1} = N,
/// with l the smallest i such that N / 2^i <= 1.
struct PhasePlan {
    int levels = 0;                       // l
    std::vector<std::int64_t> boundaries; // N_0 .. N_{l+1}

    std::int64_t budget() const { return boundaries.back(); }
};

PhasePlan phase_plan(std::int64_t n);

/// The unique phase i with N_i < k <= N_{i+1}. Throws std::out_of_range for
/// k outside [1, N].
int phase_of(const PhasePlan& plan, std::int64_t k);

/// gamma = min(1/L, gamma0 N^{-2/3}), eta = eta0 N^{-1/6}, m = ceil(m0 N).
IterationSchedule rsg_schedule_o1_const(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz);

/// As above with growing batches m_k = ceil(m0 k^beta), 0 < beta < 1.
IterationSchedule rsg_schedule_o1_poly(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz,
                                       double beta);

/// gamma = min(1/L, gamma0 / sqrt(N)), eta = eta0 / sqrt(N), m = ceil(m0 N^2).
IterationSchedule rsg_schedule_o2(std::int64_t n, double gamma0, double eta0, double m0, double lipschitz);

/// In phase i: gamma = gamma0 2^{-i} N^{-2/3}, eta = eta0 2^{-i/4} N^{-1/6}, m = 2^i N.
IterationSchedule sgd_schedule_o1(std::int64_t n, double gamma0, double eta0);

/// In phase i: gamma = gamma0 2^{-i} / sqrt(N), eta = eta0 2^{-i} / N, m = 2^{3i} N^3.
IterationSchedule sgd_schedule_o2(std::int64_t n, double gamma0, double eta0);

/// Sum of m_k.
SampleCount total_samples(const IterationSchedule& schedule);

/// Draws k in [1, N] with probability gamma_k / sum(gamma). Throws
/// std::invalid_argument on an empty list or a nonpositive weight.
std::size_t select_random_iterate(const std::vector<double>& gammas, Rng& rng);

}  // namespace bgo
