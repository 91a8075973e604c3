// Black-box objective contract: budgeted evaluation, bound repair,
// deterministic seeding and the random-search baseline.
#ifndef LAYBENCH_OBJECTIVE_HPP
#define LAYBENCH_OBJECTIVE_HPP

#include "laybench/functions.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace laybench {

struct ObjectiveHandle {
    FunctionId function;
    int dimension;
    TrigMode mode;
    double lower_bound;
    double upper_bound;
    std::uint64_t noise_seed;
};

// Throws when the dimension is below the catalog minimum.
ObjectiveHandle make_objective(FunctionId id, int dimension, TrigMode mode,
                               std::uint64_t noise_seed);

struct EvaluationBudget {
    long max_fes;
    long consumed = 0;

    long remaining() const { return max_fes - consumed; }
    bool exhausted() const { return consumed >= max_fes; }
};

struct BudgetExhausted : std::runtime_error {
    BudgetExhausted() : std::runtime_error("evaluation budget exhausted") {}
};

struct Candidate {
    Point point;
    double fitness;
};

struct OptimizerResult {
    Candidate best;
    long evaluations_used = 0;
    // (evaluation index, best-so-far fitness); non-increasing in fitness.
    std::vector<std::pair<long, double>> trace;
    std::uint64_t seed = 0;
};

// Owns the evaluation context of one run.
class Objective {
public:
    explicit Objective(const ObjectiveHandle& handle) : handle_(handle)
    {
        ctx_.mode = handle.mode;
        ctx_.noise.reseed(handle.noise_seed);
    }

    const ObjectiveHandle& handle() const { return handle_; }

    double raw(std::span<const double> x) { return evaluate(handle_.function, x, ctx_); }

private:
    ObjectiveHandle handle_;
    EvaluationContext ctx_;
};

// One budgeted call; throws BudgetExhausted instead of evaluating when the
// budget is used up.
Candidate evaluate_budgeted(Objective& objective, EvaluationBudget& budget,
                            const Point& x);

// Deterministic uniform RNG shared by the optimizers.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

private:
    std::mt19937_64 gen_;
};

// Out-of-bounds coordinates are redrawn uniformly in [lb, ub].
Point repair_random(const Point& x, double lb, double ub, Rng& rng);

// Out-of-bounds coordinates become the midpoint of a fresh uniform draw
// and the previous (in-bounds) point's coordinate.
Point repair_blend(const Point& x, const Point& prev, double lb, double ub, Rng& rng);

// Derives per-run seeds from a master seed and the run's position in the
// experiment grid. Linear index keeps distinct tuples collision-free.
struct SeedSpec {
    std::uint64_t master_seed;

    std::uint64_t run_seed(std::size_t linear_index) const
    {
        return master_seed + static_cast<std::uint64_t>(linear_index);
    }
    // Separate stream for the objective's noise source.
    static std::uint64_t noise_seed(std::uint64_t run_seed)
    {
        return run_seed ^ 0x9e3779b97f4a7c15ULL;
    }
};

using OptimizerParams = std::map<std::string, double>;
using OptimizerFn = std::function<OptimizerResult(
    const ObjectiveHandle&, EvaluationBudget&, std::uint64_t seed, const OptimizerParams&)>;

OptimizerResult random_search(const ObjectiveHandle& handle, EvaluationBudget& budget,
                              std::uint64_t seed);

// Plug-in registry for the CLI; "mtsa" and "random_search" register at startup.
void register_optimizer(const std::string& name, OptimizerFn fn);
const OptimizerFn* find_optimizer(const std::string& name);
std::vector<std::string> optimizer_names();

} // namespace laybench

#endif
