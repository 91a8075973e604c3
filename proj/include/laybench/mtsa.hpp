// Modified Tangent Search Algorithm: population search driven by tangent
// flights, with exploration, best-directed intensification and a rare
// escape phase.
#ifndef LAYBENCH_MTSA_HPP
#define LAYBENCH_MTSA_HPP

#include "laybench/objective.hpp"

namespace laybench {
namespace mtsa {

struct Params {
    int population_size = 40;
    double dim_flip_rate = -1.0; // < 0 means the default 1.5 / dimension
    double large_flight_prob = 0.3;
    double intensification_late_prob = 0.7;
    double intensification_early_prob = 0.05;
    double intensification_gate = 0.5; // fraction of budget
    double intensification_move_prob = 0.7;
    double escape_prob = 0.01;
    double escape_repair_mix = 0.8;
    double restore_fraction_small = 0.4; // dimensions <= 4
    double restore_fraction_large = 0.2; // dimensions > 4
    double theta_scale = M_PI / 2.5;

    static Params from(const OptimizerParams& overrides);
};

// Number of coordinates restored from the pre-intensification point.
int restore_count(int dimension, const Params& params);

// Per-phase counters for statistical sanity tests.
struct Stats {
    long agent_iterations = 0;
    long escape_triggers = 0;
    long intensification_triggers = 0;
};

OptimizerResult optimize(const ObjectiveHandle& handle, EvaluationBudget& budget,
                         const Params& params, std::uint64_t seed, Stats* stats = nullptr);

// In-place phase moves; exposed for unit testing. FES is the consumed
// evaluation count at step time.
void exploration_step(Point& x, const Point& best, long fes, int dimension,
                      const Params& params, Rng& rng);
void intensification_step(Point& x, const Point& best, long fes, int dimension,
                          const Params& params, Rng& rng);
void escape_step(Point& x, double lb, double ub, Rng& rng);

void register_with_registry();

} // namespace mtsa
} // namespace laybench

#endif
