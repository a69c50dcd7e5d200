#include "bgo/optimizer.hpp"

#include <string>

namespace bgo {

namespace {

RunTrace run_updates(const Oracle& oracle, const Vector& x1, const IterationSchedule& schedule, Rng& rng,
                     const RunOptions& options, std::size_t keep_index)
{
    require_point(x1, "initial point");
    schedule.validate();

    RunTrace trace;
    Vector x = x1;
    for (std::size_t k = 1; k <= schedule.size(); ++k) {
        if (k == keep_index) {
            trace.returned_point = x;
            trace.returned_index = k;
        }
        if (options.store_stride > 0 && (k - 1) % options.store_stride == 0) {
            trace.iterates.push_back(x);
        }
        GradientEstimate g = oracle(x, schedule.etas[k - 1], schedule.batches[k - 1], rng);
        if (g.grad.size() != x.size()) {
            throw std::invalid_argument("oracle returned a gradient of the wrong dimension");
        }
        x -= schedule.gammas[k - 1] * g.grad;
        trace.total_samples += g.samples_used;
        ++trace.oracle_calls;
        if (!x.allFinite()) {
            throw DivergenceError(k, "iterate diverged at iteration " + std::to_string(k));
        }
    }
    trace.final_point = x;
    return trace;
}

}  // namespace

RunTrace rsg_bgo(const Oracle& oracle, const Vector& x1, const IterationSchedule& schedule, Rng& rng,
                 const RunOptions& options)
{
    schedule.validate();
    std::size_t r = select_random_iterate(schedule.gammas, rng);
    return run_updates(oracle, x1, schedule, rng, options, r);
}

RunTrace sgd_bgo(const Oracle& oracle, const Vector& x1, const IterationSchedule& schedule, Rng& rng,
                 const RunOptions& options)
{
    RunTrace trace = run_updates(oracle, x1, schedule, rng, options, 0);
    trace.returned_point = trace.final_point;
    trace.returned_index = schedule.size() + 1;
    return trace;
}

}  // namespace bgo
