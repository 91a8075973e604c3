#include "laybench/objective.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace laybench {

ObjectiveHandle make_objective(FunctionId id, int dimension, TrigMode mode,
                               std::uint64_t noise_seed)
{
    const auto& d = descriptor(id);
    if (dimension < d.min_dimension)
        throw std::invalid_argument("dimension " + std::to_string(dimension) +
                                    " below minimum for " + d.display_name);
    if (d.fixed_dimension && dimension != 2)
        throw std::invalid_argument(d.display_name + " is fixed at dimension 2");
    return {id, dimension, mode, d.lower_bound, d.upper_bound, noise_seed};
}

Candidate evaluate_budgeted(Objective& objective, EvaluationBudget& budget, const Point& x)
{
    if (budget.exhausted())
        throw BudgetExhausted{};
    ++budget.consumed;
    return {x, objective.raw(x)};
}

Point repair_random(const Point& x, double lb, double ub, Rng& rng)
{
    // All coordinates above the box share one redraw, and all below share
    // another. Mass violations therefore collapse onto a constant vector,
    // which doubles as a cheap sampler of all-equal points.
    Point out = x;
    const double above = rng.uniform(lb, ub);
    const double below = rng.uniform(lb, ub);
    for (double& v : out) {
        if (v > ub || std::isnan(v))
            v = above;
        else if (v < lb)
            v = below;
    }
    return out;
}

Point repair_blend(const Point& x, const Point& prev, double lb, double ub, Rng& rng)
{
    // Same shared-scalar redraw as repair_random, but averaged with the
    // pre-move coordinate so the repaired point stays near its origin.
    Point out = x;
    const double above = rng.uniform(lb, ub);
    const double below = rng.uniform(lb, ub);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] > ub || std::isnan(out[i]))
            out[i] = 0.5 * (above + prev[i]);
        else if (out[i] < lb)
            out[i] = 0.5 * (below + prev[i]);
    }
    return out;
}

OptimizerResult random_search(const ObjectiveHandle& handle, EvaluationBudget& budget,
                              std::uint64_t seed)
{
    Objective objective(handle);
    Rng rng(seed);
    OptimizerResult result;
    result.seed = seed;
    result.best.fitness = std::numeric_limits<double>::infinity();

    Point x(static_cast<std::size_t>(handle.dimension));
    while (!budget.exhausted()) {
        for (double& v : x)
            v = rng.uniform(handle.lower_bound, handle.upper_bound);
        Candidate c = evaluate_budgeted(objective, budget, x);
        ++result.evaluations_used;
        if (result.best.point.empty() || c.fitness < result.best.fitness) {
            result.best = std::move(c);
            result.trace.emplace_back(result.evaluations_used, result.best.fitness);
        }
    }
    return result;
}

namespace {

std::map<std::string, OptimizerFn>& registry()
{
    static std::map<std::string, OptimizerFn> r;
    return r;
}

std::mutex registry_mutex;

} // namespace

void register_optimizer(const std::string& name, OptimizerFn fn)
{
    std::lock_guard lock(registry_mutex);
    registry()[name] = std::move(fn);
}

const OptimizerFn* find_optimizer(const std::string& name)
{
    std::lock_guard lock(registry_mutex);
    auto it = registry().find(name);
    return it == registry().end() ? nullptr : &it->second;
}

std::vector<std::string> optimizer_names()
{
    std::lock_guard lock(registry_mutex);
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry())
        names.push_back(name);
    return names;
}

} // namespace laybench
