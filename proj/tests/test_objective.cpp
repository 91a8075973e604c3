#include <doctest.h>

#include "laybench/mtsa.hpp"
#include "laybench/objective.hpp"

#include <cmath>
#include <stdexcept>

using namespace laybench;

TEST_CASE("make_objective validates the dimension")
{
    CHECK_THROWS_AS(make_objective(FunctionId::Layeb01, 1, TrigMode::Radians, 0),
                    std::invalid_argument);
    const auto h = make_objective(FunctionId::Layeb12, 10, TrigMode::Radians, 7);
    CHECK(h.dimension == 10);
    CHECK(h.lower_bound == -5.0);
    CHECK(h.upper_bound == 5.0);
}

TEST_CASE("budgeted evaluation counts and then refuses")
{
    const auto h = make_objective(FunctionId::Layeb10, 2, TrigMode::Radians, 0);
    Objective obj(h);
    EvaluationBudget budget{3};
    const Point x{0.5, 0.5};
    for (int i = 0; i < 3; ++i) {
        const Candidate c = evaluate_budgeted(obj, budget, x);
        CHECK(c.fitness == 0.0);
    }
    CHECK(budget.consumed == 3);
    CHECK(budget.exhausted());
    CHECK_THROWS_AS((void)evaluate_budgeted(obj, budget, x), BudgetExhausted);
    CHECK(budget.consumed == 3); // the refused call must not count
}

TEST_CASE("random repair leaves interior coordinates untouched")
{
    Rng rng(1);
    const Point x{0.0, 11.0, -11.0, 3.5};
    const Point out = repair_random(x, -10.0, 10.0, rng);
    CHECK(out[0] == 0.0);
    CHECK(out[3] == 3.5);
    CHECK(out[1] >= -10.0);
    CHECK(out[1] <= 10.0);
    CHECK(out[2] >= -10.0);
    CHECK(out[2] <= 10.0);
}

TEST_CASE("random repair assigns one shared value per violation side")
{
    Rng rng(2);
    const Point x{20.0, 30.0, -20.0, -30.0, 40.0};
    const Point out = repair_random(x, -10.0, 10.0, rng);
    CHECK(out[0] == out[1]);
    CHECK(out[1] == out[4]);
    CHECK(out[2] == out[3]);
    // A full violation collapses the point onto constant vectors.
    for (double v : out)
        CHECK((v == out[0] || v == out[2]));
}

TEST_CASE("blend repair averages a shared redraw with the previous point")
{
    Rng rng(3);
    const Point prev{1.0, 2.0, 3.0};
    const Point x{50.0, 0.5, 60.0};
    const Point out = repair_blend(x, prev, -10.0, 10.0, rng);
    CHECK(out[1] == 0.5);
    CHECK(out[0] >= -10.0);
    CHECK(out[0] <= 10.0);
    // Shared scalar: the two repaired coordinates differ exactly by the
    // difference of the previous point's coordinates, halved.
    CHECK(out[2] - out[0] == doctest::Approx(0.5 * (prev[2] - prev[0])));
}

TEST_CASE("seed derivation is linear with a distinct noise stream")
{
    SeedSpec spec{100};
    CHECK(spec.run_seed(0) == 100);
    CHECK(spec.run_seed(7) == 107);
    CHECK(SeedSpec::noise_seed(100) != 100);
    CHECK(SeedSpec::noise_seed(100) != SeedSpec::noise_seed(101));
}

TEST_CASE("optimizer registry resolves registered names only")
{
    mtsa::register_with_registry();
    CHECK(find_optimizer("mtsa") != nullptr);
    CHECK(find_optimizer("random_search") != nullptr);
    CHECK(find_optimizer("simulated_annealing") == nullptr);
    const auto names = optimizer_names();
    CHECK(names.size() >= 2);
}

TEST_CASE("random search is deterministic per seed and respects the budget")
{
    const auto h = make_objective(FunctionId::Layeb10, 2, TrigMode::Radians, 9);
    EvaluationBudget b1{500};
    EvaluationBudget b2{500};
    const auto r1 = random_search(h, b1, 4);
    const auto r2 = random_search(h, b2, 4);
    CHECK(r1.best.fitness == r2.best.fitness);
    CHECK(r1.best.point == r2.best.point);
    CHECK(b1.consumed == 500);
    CHECK(r1.evaluations_used == 500);

    EvaluationBudget b3{500};
    const auto r3 = random_search(h, b3, 5);
    CHECK(r3.best.point != r1.best.point);
}

TEST_CASE("trace of best-so-far fitness never increases")
{
    const auto h = make_objective(FunctionId::Layeb11, 2, TrigMode::Radians, 9);
    EvaluationBudget b{2000};
    const auto r = random_search(h, b, 11);
    REQUIRE(!r.trace.empty());
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].second <= r.trace[i - 1].second);
        CHECK(r.trace[i].first > r.trace[i - 1].first);
    }
    CHECK(r.best.fitness == r.trace.back().second);
}
