// Seeded experiment runner: executes an algorithms x functions x
// dimensions x runs grid and writes the result CSVs.
#ifndef LAYBENCH_HARNESS_HPP
#define LAYBENCH_HARNESS_HPP

#include "laybench/metrics.hpp"
#include "laybench/objective.hpp"

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace laybench {

// Invalid user configuration (unknown name, bad budget, ...); mapped to
// its own exit code by the command-line front end.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::vector<FunctionId> functions;   // empty -> all non-fixed-dimension entries
    std::vector<std::string> algorithms{"mtsa", "random_search"};
    std::vector<int> dimensions{10, 30};
    int runs = 30;
    long budget_per_dimension = 10000;   // max_fes = budget_per_dimension * dim
    long budget_override = -1;           // >0 replaces the rule
    TrigMode mode = TrigMode::Radians;
    std::uint64_t master_seed = 1;
    std::string output_directory = ".";
    bool friedman_raw_runs = false;      // rank per (function, run) rows instead of means
    OptimizerParams optimizer_params;
};

// Throws ConfigError on invalid settings.
void validate(const ExperimentConfig& config);

long budget_for(const ExperimentConfig& config, int dim);

// Executes the full grid in a fixed order (dimensions, then functions,
// then algorithms, then runs); run seeds are master_seed + linear index.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

void write_runs_csv(const std::vector<RunRecord>& records, std::ostream& out);
void write_summary_csv(const ExperimentConfig& config,
                       const std::vector<RunRecord>& records, std::ostream& out);
void write_total_error_csv(const ExperimentConfig& config,
                           const std::vector<RunRecord>& records, std::ostream& out);
// Normalized mean-error matrix, average ranks and the Friedman statistic
// for one dimension; requires >= 2 algorithms and >= 2 functions.
void write_rank_csv(const ExperimentConfig& config,
                    const std::vector<RunRecord>& records, int dim,
                    std::ostream& out);

// Runs the experiment and writes runs.csv, summary.csv, total_error.csv
// and ranks_<dim>d.csv into config.output_directory.
std::vector<RunRecord> run_and_write(const ExperimentConfig& config);

// Full-precision serialization used by every CSV writer: shortest
// round-trip decimal, infinities as "inf"/"-inf".
std::string format_number(double v);

} // namespace laybench

#endif
