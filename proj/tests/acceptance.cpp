// End-to-end acceptance checks for the benchmark toolkit. Each numbered
// check prints exactly one PASS/FAIL line; the exit status is the number
// of failed checks. Tolerances are pinned here on purpose — they are the
// contract, not tunables.
#include "laybench/harness.hpp"
#include "laybench/metrics.hpp"
#include "laybench/mtsa.hpp"
#include "laybench/verify.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace laybench;

namespace {

constexpr std::uint64_t kMasterSeed = 1; // pinned: all stochastic checks derive from it

bool verified(FunctionId id)
{
    return descriptor(id).stated_optimum.consistency == Consistency::Verified;
}

double eval_mode(FunctionId id, const Point& x, TrigMode mode, std::uint64_t seed = 0)
{
    EvaluationContext ctx;
    ctx.mode = mode;
    ctx.noise.reseed(seed);
    return evaluate(id, x, ctx);
}

// ---- check 4 helper: distance from a 2-D point to the optimum set ----

double dist_to_points(double x, double y, const std::vector<Point>& pts)
{
    double best = 1e300;
    for (const auto& p : pts)
        best = std::min(best, std::hypot(x - p[0], y - p[1]));
    return best;
}

double dist_to_levels(double v, const std::vector<double>& levels)
{
    double best = 1e300;
    for (double c : levels)
        best = std::min(best, std::abs(v - c));
    return best;
}

double optimum_set_distance(FunctionId id, double x, double y)
{
    switch (id) {
    case FunctionId::Layeb01:
    case FunctionId::Layeb02:
    case FunctionId::Layeb19:
    case FunctionId::Layeb20:
        return std::hypot(x - 1.0, y - 1.0);
    case FunctionId::Layeb04: {
        // One coordinate at 0, the other at an odd multiple of pi.
        std::vector<Point> pts;
        for (int k : {-3, -1, 1, 3}) {
            pts.push_back({0.0, k * M_PI});
            pts.push_back({k * M_PI, 0.0});
        }
        return dist_to_points(x, y, pts);
    }
    case FunctionId::Layeb05: {
        // The zero set is a union of lattice families; enumerate the
        // pi/12 lattice and keep the nodes whose exact (degree-mode)
        // value reaches the 2-D optimum.
        const double stated = stated_optimum_value(id, 2).value;
        std::vector<Point> pts;
        for (int i = -38; i <= 38; ++i)
            for (int j = -38; j <= 38; ++j) {
                const double px = i * M_PI / 12.0;
                const double py = j * M_PI / 12.0;
                if (std::abs(px) > 10.0 || std::abs(py) > 10.0)
                    continue;
                if (eval_mode(id, {px, py}, TrigMode::Degrees) <= stated + 1e-9)
                    pts.push_back({px, py});
            }
        return dist_to_points(x, y, pts);
    }
    case FunctionId::Layeb06: {
        // Minimizing lines y = (2k-1)*pi, any x.
        std::vector<double> levels;
        for (int k : {-1, 0, 1, 2})
            levels.push_back((2 * k - 1) * M_PI);
        return dist_to_levels(y, levels);
    }
    case FunctionId::Layeb09: {
        // Lines y = 0 and y = odd multiple of pi/2, any x.
        std::vector<double> levels{0.0};
        for (int k = -3; k <= 3; ++k)
            levels.push_back((2 * k + 1) * M_PI_2);
        return dist_to_levels(y, levels);
    }
    case FunctionId::Layeb10:
        return dist_to_points(x, y, {{0.5, 0.5}, {-0.5, -0.5}});
    case FunctionId::Layeb11: {
        // Points on the parabola y = x^2 - 1 with x^3 - x a multiple of
        // 2*pi; solve the cubic by Newton from a coarse sweep.
        std::vector<Point> pts;
        for (int m = -160; m <= 160; ++m) {
            const double target = 2.0 * M_PI * m;
            for (double x0 = -10.0; x0 <= 10.0; x0 += 0.25) {
                double r = x0;
                for (int it = 0; it < 60; ++it) {
                    const double f = r * r * r - r - target;
                    const double df = 3.0 * r * r - 1.0;
                    if (std::abs(df) < 1e-9)
                        break;
                    r -= f / df;
                }
                if (std::abs(r * r * r - r - target) > 1e-8)
                    continue;
                const double py = r * r - 1.0;
                if (std::abs(r) <= 10.0 && std::abs(py) <= 10.0)
                    pts.push_back({r, py});
            }
        }
        return dist_to_points(x, y, pts);
    }
    case FunctionId::Layeb12: {
        // y = 2x - 2 - 8m with x*y an integer: x solves 2x^2-(2+8m)x-j=0.
        std::vector<Point> pts;
        for (int m = -2; m <= 2; ++m)
            for (int j = -25; j <= 25; ++j) {
                const double b = 2.0 + 8.0 * m;
                const double disc = b * b + 8.0 * j;
                if (disc < 0.0)
                    continue;
                for (double s : {-1.0, 1.0}) {
                    const double px = (b + s * std::sqrt(disc)) / 4.0;
                    const double py = 2.0 * px - 2.0 - 8.0 * m;
                    if (std::abs(px) <= 5.0 && std::abs(py) <= 5.0)
                        pts.push_back({px, py});
                }
            }
        return dist_to_points(x, y, pts);
    }
    case FunctionId::Layeb13: {
        std::vector<Point> pts;
        for (int m = -7; m <= 6; ++m) {
            const double a = (2 * m + 1) * M_PI_4;
            if (std::abs(a) <= 10.0)
                pts.push_back({a, -a});
        }
        return dist_to_points(x, y, pts);
    }
    case FunctionId::Layeb15:
        return dist_to_points(x, y, {{-1.0, 1.0}, {1.0, -1.0}});
    case FunctionId::Layeb17:
        return dist_to_points(x, y, {{0.0, -1.0}, {-1.0, 0.0}});
    case FunctionId::Layeb18: {
        // Optimum curves x*y = (2m+1)*pi^2/4: first-order distance to the
        // nearest hyperbola branch.
        double best = 1e300;
        for (int m = -21; m <= 21; ++m) {
            const double c = (2 * m + 1) * M_PI * M_PI / 4.0;
            const double g = std::hypot(y, x);
            if (g < 1e-12)
                continue;
            best = std::min(best, std::abs(x * y - c) / g);
        }
        return best;
    }
    case FunctionId::CrossLegTable: {
        // Lines x = k*pi or y = k*pi.
        std::vector<double> levels;
        for (int k = -3; k <= 3; ++k)
            levels.push_back(k * M_PI);
        return std::min(dist_to_levels(x, levels), dist_to_levels(y, levels));
    }
    default:
        return 1e300; // not part of the grid check
    }
}

struct DeskRuns {
    double mtsa_mean_error;
    double random_mean_value;
    double mtsa_mean_value;
};

DeskRuns desk_runs_10d(FunctionId id)
{
    const int dim = 10;
    const long budget = 100000;
    const double stated = stated_optimum_value(id, dim).value;
    DeskRuns out{0.0, 0.0, 0.0};
    for (int run = 0; run < 30; ++run) {
        const std::uint64_t rs = kMasterSeed + static_cast<std::uint64_t>(run);
        const auto h =
            make_objective(id, dim, TrigMode::Radians, SeedSpec::noise_seed(rs));
        EvaluationBudget bm{budget};
        const auto rm = mtsa::optimize(h, bm, mtsa::Params{}, rs);
        EvaluationBudget br{budget};
        const auto rr = random_search(h, br, rs);
        out.mtsa_mean_error += (rm.best.fitness - stated) / 30.0;
        out.mtsa_mean_value += rm.best.fitness / 30.0;
        out.random_mean_value += rr.best.fitness / 30.0;
    }
    return out;
}

bool report(int number, bool ok, const std::string& what)
{
    std::printf("%s check %d: %s\n", ok ? "PASS" : "FAIL", number, what.c_str());
    std::fflush(stdout);
    return ok;
}

// ---- the nine checks ----

bool check1_stated_optima()
{
    for (int n : {2, 10, 30}) {
        for (FunctionId id : list_functions()) {
            const auto& d = descriptor(id);
            if (!verified(id) || (d.fixed_dimension && n != 2))
                continue;
            const auto ref = reference_optimum_point(id, n);
            if (!ref)
                return false;
            const double stated = stated_optimum_value(id, n).value;
            const bool degrees = optimum_on_pi_grid(id);
            const double measured =
                eval_mode(id, *ref, degrees ? TrigMode::Degrees : TrigMode::Radians);
            const double tol = degrees ? 1e-9 : 1e-6;
            if (!(std::abs(measured - stated) <= tol))
                return false;
        }
    }
    return true;
}

bool check2_table_constants()
{
    return std::abs(stated_optimum_value(FunctionId::Layeb04, 30).value - (-229.3249)) <=
               5e-4 &&
           std::abs(stated_optimum_value(FunctionId::Layeb08, 30).value - (-200.3249)) <=
               5e-4 &&
           std::abs(stated_optimum_value(FunctionId::Layeb12, 30).value - (-107.8301)) <=
               5e-4 &&
           std::abs(stated_optimum_value(FunctionId::Layeb11, 30).value - (-29.0)) <= 5e-4;
}

bool check3_precision_demo()
{
    const Point pp{M_PI, M_PI};
    const double radians = eval_mode(FunctionId::CrossLegTable, pp, TrigMode::Radians);
    const double degrees = eval_mode(FunctionId::CrossLegTable, pp, TrigMode::Degrees);
    return std::abs(radians - (-0.079592386218981)) <= 1e-12 && degrees == -1.0 &&
           std::abs(std::sin(M_PI) - 1.224646799147353e-16) <= 1e-22;
}

bool check4_grid_oracle()
{
    for (FunctionId id : list_functions()) {
        if (!verified(id))
            continue;
        const auto& d = descriptor(id);
        const auto scan = grid_oracle_2d(id, 1001, preferred_verification_mode(id));
        const double stated = stated_optimum_value(id, 2).value;
        if (!(scan.grid_min >= stated - 1e-3))
            return false;
        const double cell = (d.upper_bound - d.lower_bound) / 1000.0;
        const double dist = optimum_set_distance(id, scan.argmin[0], scan.argmin[1]);
        if (!(dist <= std::sqrt(2.0) * cell))
            return false;
    }
    return true;
}

bool check5_desk_scale_runs()
{
    int wins = 0;
    bool ok = true;
    for (FunctionId id : list_functions()) {
        if (descriptor(id).fixed_dimension)
            continue;
        const DeskRuns r = desk_runs_10d(id);
        if (r.mtsa_mean_value < r.random_mean_value)
            ++wins;
        if (id == FunctionId::Layeb01 || id == FunctionId::Layeb02)
            ok = ok && r.mtsa_mean_error <= 1e-8;
        if (id == FunctionId::Layeb19 || id == FunctionId::Layeb20)
            ok = ok && r.mtsa_mean_error <= 1e-3;
    }
    return ok && wins >= 15;
}

bool check6_total_error()
{
    // Identities first.
    const Point opt{2.0, 2.0};
    std::vector<RunRecord> at_opt{
        {FunctionId::Layeb12, "mtsa", 2, 0, -5.0, opt, 10, 1},
        {FunctionId::Layeb12, "mtsa", 2, 1, -5.0, opt, 10, 2}};
    if (mte(at_opt, -5.0, opt) != 0.0 || bte(at_opt.front(), -5.0, opt) != 0.0)
        return false;
    std::vector<RunRecord> one{{FunctionId::Layeb12, "mtsa", 2, 0, -4.5, {2.0, 3.2}, 10, 1}};
    if (std::abs(mte(one, -5.0, opt) - 1.7) > 1e-15)
        return false;

    // 30-dimensional reproduction: 30 seeded runs at the full budget.
    const int dim = 30;
    const long budget = 10000L * dim;
    const double stated = stated_optimum_value(FunctionId::Layeb12, dim).value;
    const Point global(dim, 2.0);
    std::vector<RunRecord> records;
    for (int run = 0; run < 30; ++run) {
        const std::uint64_t rs = kMasterSeed + static_cast<std::uint64_t>(run);
        const auto h =
            make_objective(FunctionId::Layeb12, dim, TrigMode::Radians,
                           SeedSpec::noise_seed(rs));
        EvaluationBudget b{budget};
        const auto r = mtsa::optimize(h, b, mtsa::Params{}, rs);
        records.push_back({FunctionId::Layeb12, "mtsa", dim, run, r.best.fitness,
                           r.best.point, r.evaluations_used, rs});
    }
    return mte(records, stated, global) < 1.0;
}

bool check7_friedman()
{
    const auto tied = friedman_ranks({{5.0, 5.0}, {1.0, 2.0}}, {"a", "b"});
    if (tied.normalized_matrix.empty())
        return false;
    if (std::abs(tied.average_ranks[0] - 1.25) > 1e-12 ||
        std::abs(tied.average_ranks[1] - 1.75) > 1e-12)
        return false;

    const auto fx = friedman_ranks(
        {{0.1, 0.2, 0.3}, {1.0, 2.0, 3.0}, {5.0, 7.0, 6.0}, {0.4, 0.2, 0.9}},
        {"a", "b", "c"});
    double sum = 0.0;
    for (double r : fx.average_ranks)
        sum += r;
    return std::abs(sum - 6.0) <= 1e-12 && std::abs(fx.friedman_statistic - 4.5) <= 1e-12;
}

bool check8_determinism()
{
    namespace fs = std::filesystem;
    mtsa::register_with_registry();
    ExperimentConfig cfg;
    cfg.functions = {FunctionId::Layeb10, FunctionId::Layeb12, FunctionId::Layeb15};
    cfg.dimensions = {2};
    cfg.runs = 3;
    cfg.budget_override = 500;
    cfg.master_seed = kMasterSeed;

    const fs::path d1 = fs::temp_directory_path() / "laybench_accept_a";
    const fs::path d2 = fs::temp_directory_path() / "laybench_accept_b";
    fs::remove_all(d1);
    fs::remove_all(d2);
    fs::create_directories(d1);
    fs::create_directories(d2);
    cfg.output_directory = d1.string();
    (void)run_and_write(cfg);
    cfg.output_directory = d2.string();
    (void)run_and_write(cfg);

    bool ok = true;
    for (const char* name : {"runs.csv", "summary.csv", "total_error.csv", "ranks_2d.csv"}) {
        std::ifstream a(d1 / name, std::ios::binary);
        std::ifstream b(d2 / name, std::ios::binary);
        std::ostringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        ok = ok && !sa.str().empty() && sa.str() == sb.str();
    }
    fs::remove_all(d1);
    fs::remove_all(d2);
    return ok;
}

bool check9_budget_compliance()
{
    for (int dim : {2, 5}) {
        const long max_fes = 10000L * dim;
        for (FunctionId id : {FunctionId::Layeb10, FunctionId::Layeb12}) {
            const auto h = make_objective(id, dim, TrigMode::Radians, 3);
            EvaluationBudget bm{max_fes};
            const auto rm = mtsa::optimize(h, bm, mtsa::Params{}, 3);
            if (bm.consumed > max_fes || rm.evaluations_used != bm.consumed)
                return false;
            EvaluationBudget br{max_fes};
            const auto rr = random_search(h, br, 3);
            if (br.consumed > max_fes || rr.evaluations_used != br.consumed)
                return false;
        }
    }
    return true;
}

} // namespace

int main()
{
    int failures = 0;
    failures += !report(1, check1_stated_optima(),
                        "stated optima reproduced at reference points (n = 2, 10, 30)");
    failures += !report(2, check2_table_constants(),
                        "30-dimensional optimum constants match the catalog metadata");
    failures += !report(3, check3_precision_demo(),
                        "crosslegtable radian/degree precision demonstration");
    failures += !report(4, check4_grid_oracle(),
                        "1001x1001 grid oracle brackets every verified 2-D optimum");
    failures += !report(5, check5_desk_scale_runs(),
                        "30-run desk-scale reproduction at 10d (unimodal + noisy means, "
                        "baseline comparison)");
    failures += !report(6, check6_total_error(),
                        "total-error identities and layeb12 30d mean total error < 1.0");
    failures += !report(7, check7_friedman(),
                        "Friedman rank sums, tie averaging and chi-square fixture");
    failures += !report(8, check8_determinism(),
                        "byte-identical result files for identical configurations");
    failures += !report(9, check9_budget_compliance(),
                        "no optimizer exceeds the 10^4 x D evaluation budget");
    return failures;
}
