#include "laybench/harness.hpp"

#include "laybench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <tuple>

namespace laybench {

namespace {

std::vector<FunctionId> effective_functions(const ExperimentConfig& config)
{
    if (!config.functions.empty())
        return config.functions;
    std::vector<FunctionId> out;
    for (FunctionId id : list_functions())
        if (!descriptor(id).fixed_dimension)
            out.push_back(id);
    return out;
}

using CellKey = std::tuple<FunctionId, std::string, int>;

std::map<CellKey, std::vector<RunRecord>>
group_by_cell(const std::vector<RunRecord>& records)
{
    std::map<CellKey, std::vector<RunRecord>> cells;
    for (const RunRecord& r : records)
        cells[{r.function, r.algorithm, r.dimension}].push_back(r);
    return cells;
}

} // namespace

std::string format_number(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    if (std::isnan(v))
        return "nan";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void validate(const ExperimentConfig& config)
{
    if (config.runs < 1)
        throw ConfigError("runs must be >= 1");
    if (config.budget_override == 0 || config.budget_override < -1)
        throw ConfigError("budget override must be positive");
    if (config.budget_per_dimension < 1)
        throw ConfigError("budget per dimension must be positive");
    if (config.algorithms.empty())
        throw ConfigError("at least one algorithm is required");
    for (const std::string& name : config.algorithms)
        if (!find_optimizer(name))
            throw ConfigError("unknown algorithm: " + name);
    if (config.dimensions.empty())
        throw ConfigError("at least one dimension is required");
    for (FunctionId id : effective_functions(config)) {
        const FunctionDescriptor& d = descriptor(id);
        for (int dim : config.dimensions) {
            if (dim < d.min_dimension)
                throw ConfigError(d.display_name + " requires dimension >= " +
                                  std::to_string(d.min_dimension));
            if (d.fixed_dimension && dim != 2)
                throw ConfigError(d.display_name + " is fixed at dimension 2");
        }
    }
}

long budget_for(const ExperimentConfig& config, int dim)
{
    if (config.budget_override > 0)
        return config.budget_override;
    return config.budget_per_dimension * static_cast<long>(dim);
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config)
{
    validate(config);
    const std::vector<FunctionId> functions = effective_functions(config);
    const SeedSpec seeds{config.master_seed};

    std::vector<RunRecord> records;
    std::size_t linear_index = 0;
    for (int dim : config.dimensions) {
        const long max_fes = budget_for(config, dim);
        for (FunctionId id : functions) {
            for (const std::string& name : config.algorithms) {
                const OptimizerFn& fn = *find_optimizer(name);
                for (int run = 0; run < config.runs; ++run, ++linear_index) {
                    const std::uint64_t run_seed = seeds.run_seed(linear_index);
                    ObjectiveHandle handle = make_objective(
                        id, dim, config.mode, SeedSpec::noise_seed(run_seed));
                    EvaluationBudget budget{max_fes};
                    OptimizerResult result =
                        fn(handle, budget, run_seed, config.optimizer_params);
                    records.push_back({id, name, dim, run, result.best.fitness,
                                       result.best.point, result.evaluations_used,
                                       run_seed});
                }
            }
        }
    }
    return records;
}

void write_runs_csv(const std::vector<RunRecord>& records, std::ostream& out)
{
    out << "function,algorithm,dim,run,seed,best_value,error,evals,best_point\n";
    for (const RunRecord& r : records) {
        const double stated = stated_optimum_value(r.function, r.dimension).value;
        out << descriptor(r.function).display_name << ',' << r.algorithm << ','
            << r.dimension << ',' << r.run_index << ',' << r.seed << ','
            << format_number(r.best_value) << ','
            << format_number(r.best_value - stated) << ',' << r.evaluations_used
            << ',';
        for (std::size_t i = 0; i < r.best_point.size(); ++i) {
            if (i)
                out << ';';
            out << format_number(r.best_point[i]);
        }
        out << '\n';
    }
}

void write_summary_csv(const ExperimentConfig& config,
                       const std::vector<RunRecord>& records, std::ostream& out)
{
    (void)config;
    out << "function,algorithm,dim,mean,std,min,max,count\n";
    for (const auto& [key, cell] : group_by_cell(records)) {
        const auto& [id, algorithm, dim] = key;
        const StatsSummary s =
            summarize(cell, stated_optimum_value(id, dim).value);
        out << descriptor(id).display_name << ',' << algorithm << ',' << dim
            << ',' << format_number(s.mean) << ',' << format_number(s.std_dev)
            << ',' << format_number(s.min) << ',' << format_number(s.max) << ','
            << s.count << '\n';
    }
}

void write_total_error_csv(const ExperimentConfig& config,
                           const std::vector<RunRecord>& records,
                           std::ostream& out)
{
    (void)config;
    out << "function,algorithm,dim,mte,bte\n";
    for (const auto& [key, cell] : group_by_cell(records)) {
        const auto& [id, algorithm, dim] = key;
        out << descriptor(id).display_name << ',' << algorithm << ',' << dim
            << ',';
        const std::optional<Point> ref = reference_optimum_point(id, dim);
        if (ref) {
            const double global = stated_optimum_value(id, dim).value;
            const RunRecord* best = &cell.front();
            for (const RunRecord& r : cell)
                if (r.best_value < best->best_value)
                    best = &r;
            out << format_number(mte(cell, global, *ref)) << ','
                << format_number(bte(*best, global, *ref));
        } else {
            out << "nan,nan";
        }
        out << '\n';
    }
}

void write_rank_csv(const ExperimentConfig& config,
                    const std::vector<RunRecord>& records, int dim,
                    std::ostream& out)
{
    const std::vector<FunctionId> functions = effective_functions(config);
    const auto cells = group_by_cell(records);

    std::vector<std::vector<double>> matrix;
    std::vector<std::string> row_labels;
    for (FunctionId id : functions) {
        const int row_count = config.friedman_raw_runs ? config.runs : 1;
        for (int run = 0; run < row_count; ++run) {
            std::vector<double> row;
            for (const std::string& name : config.algorithms) {
                auto it = cells.find({id, name, dim});
                if (it == cells.end())
                    throw ConfigError("missing cell for rank table");
                const double stated = stated_optimum_value(id, dim).value;
                if (config.friedman_raw_runs)
                    row.push_back(it->second.at(static_cast<std::size_t>(run))
                                      .best_value -
                                  stated);
                else
                    row.push_back(summarize(it->second, stated).mean);
            }
            matrix.push_back(std::move(row));
            row_labels.push_back(descriptor(id).display_name +
                                 (config.friedman_raw_runs
                                      ? "/run" + std::to_string(run)
                                      : std::string{}));
        }
    }

    const RankTable table =
        friedman_ranks(normalize_matrix(matrix), config.algorithms);

    out << "row";
    for (const std::string& name : config.algorithms)
        out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < table.normalized_matrix.size(); ++i) {
        out << row_labels[i];
        for (double v : table.normalized_matrix[i])
            out << ',' << format_number(v);
        out << '\n';
    }
    out << "average_rank";
    for (double r : table.average_ranks)
        out << ',' << format_number(r);
    out << '\n';
    out << "friedman_chi2," << format_number(table.friedman_statistic) << '\n';
}

std::vector<RunRecord> run_and_write(const ExperimentConfig& config)
{
    std::vector<RunRecord> records = run_experiment(config);
    const std::filesystem::path dir(config.output_directory);
    std::filesystem::create_directories(dir);

    const auto open = [&](const std::string& name) {
        std::ofstream out(dir / name, std::ios::binary);
        if (!out)
            throw std::runtime_error("cannot write " + (dir / name).string());
        return out;
    };

    {
        auto out = open("runs.csv");
        write_runs_csv(records, out);
    }
    {
        auto out = open("summary.csv");
        write_summary_csv(config, records, out);
    }
    {
        auto out = open("total_error.csv");
        write_total_error_csv(config, records, out);
    }
    if (config.algorithms.size() >= 2 && effective_functions(config).size() >= 2) {
        for (int dim : config.dimensions) {
            auto out = open("ranks_" + std::to_string(dim) + "d.csv");
            write_rank_csv(config, records, dim, out);
        }
    }
    return records;
}

} // namespace laybench
