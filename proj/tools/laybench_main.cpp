// Command-line front end: list the catalog, evaluate points, run seeded
// experiments, verify stated optima, export surface grids and re-rank
// existing summaries.
#include "laybench/harness.hpp"
#include "laybench/metrics.hpp"
#include "laybench/mtsa.hpp"
#include "laybench/objective.hpp"
#include "laybench/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitVerification = 3;

using namespace laybench;

std::string default_output_dir()
{
    if (const char* env = std::getenv("LAYBENCH_OUTPUT_DIR"))
        return env;
    return ".";
}

TrigMode parse_mode(const std::string& text)
{
    if (text == "radians")
        return TrigMode::Radians;
    if (text == "degrees")
        return TrigMode::Degrees;
    throw ConfigError("mode must be 'radians' or 'degrees'");
}

FunctionId parse_function(const std::string& name)
{
    if (std::optional<FunctionId> id = function_from_name(name))
        return *id;
    throw ConfigError("unknown function: " + name);
}

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_list()
{
    std::cout << "name,dim,bounds,modality,separable,noisy,consistency\n";
    for (FunctionId id : list_functions()) {
        const FunctionDescriptor& d = descriptor(id);
        const char* flag = "";
        switch (d.stated_optimum.consistency) {
        case Consistency::Verified: flag = "verified"; break;
        case Consistency::InconsistentAsPrinted: flag = "inconsistent-as-printed"; break;
        case Consistency::Ambiguous: flag = "ambiguous"; break;
        }
        std::cout << d.display_name << ','
                  << (d.fixed_dimension ? "2" : (">=" + std::to_string(d.min_dimension)))
                  << ",[" << d.lower_bound << ';' << d.upper_bound << "],"
                  << (d.modality == Modality::Unimodal ? "unimodal" : "multimodal")
                  << ',' << (d.separable ? "yes" : "no") << ','
                  << (d.noisy ? "yes" : "no") << ',' << flag << '\n';
    }
    return kExitOk;
}

int cmd_eval(const std::string& function, const std::string& point_text,
             const std::string& mode_text, std::uint64_t seed)
{
    const FunctionId id = parse_function(function);
    Point x;
    for (const std::string& part : split(point_text, ',')) {
        std::size_t used = 0;
        const double v = std::stod(part, &used);
        if (used != part.size())
            throw ConfigError("cannot parse coordinate: " + part);
        x.push_back(v);
    }
    EvaluationContext ctx{parse_mode(mode_text), NoiseSource{seed}};
    std::cout << format_number(evaluate(id, x, ctx)) << '\n';
    return kExitOk;
}

int cmd_verify(double tolerance, const std::string& output_dir)
{
    const VerificationReport report = run_verification(tolerance);
    write_report_text(report, std::cout);

    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    std::ofstream csv(dir / "verification.csv", std::ios::binary);
    write_report_csv(report, csv);
    std::ofstream text(dir / "verification.txt", std::ios::binary);
    write_report_text(report, text);
    return report.all_passed ? kExitOk : kExitVerification;
}

int cmd_surface(const std::string& function, int resolution,
                const std::string& mode_text, const std::string& output_dir)
{
    if (resolution < 2)
        throw ConfigError("resolution must be >= 2");
    const FunctionId id = parse_function(function);
    const FunctionDescriptor& d = descriptor(id);
    const TrigMode mode = parse_mode(mode_text);

    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    std::ofstream out(dir / (d.display_name + "_surface.csv"), std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write surface file");

    EvaluationContext ctx{mode, NoiseSource{0x5eedULL}};
    out << "x,y,f\n";
    Point p(2);
    for (int i = 0; i < resolution; ++i) {
        p[0] = (d.lower_bound * (resolution - 1 - i) + d.upper_bound * i) /
               (resolution - 1);
        for (int j = 0; j < resolution; ++j) {
            p[1] = (d.lower_bound * (resolution - 1 - j) + d.upper_bound * j) /
                   (resolution - 1);
            if (d.noisy)
                ctx.noise.reseed(0x5eedULL +
                                 static_cast<std::uint64_t>(i) * resolution + j);
            out << format_number(p[0]) << ',' << format_number(p[1]) << ','
                << format_number(evaluate(id, p, ctx)) << '\n';
        }
    }
    return kExitOk;
}

int cmd_rank(const std::string& summary_path, const std::string& output_dir)
{
    std::ifstream in(summary_path);
    if (!in)
        throw ConfigError("cannot read " + summary_path);
    std::string line;
    if (!std::getline(in, line) ||
        line.rfind("function,algorithm,dim,mean", 0) != 0)
        throw ConfigError("unrecognized summary header in " + summary_path);

    // mean error per (dim)(function)(algorithm); insertion order preserved.
    std::map<int, std::map<std::string, std::map<std::string, double>>> by_dim;
    std::vector<std::string> algorithms;
    while (std::getline(in, line)) {
        const std::vector<std::string> cols = split(line, ',');
        if (cols.size() < 4)
            continue;
        const int dim = std::stoi(cols[2]);
        by_dim[dim][cols[0]][cols[1]] = std::stod(cols[3]);
        if (std::find(algorithms.begin(), algorithms.end(), cols[1]) ==
            algorithms.end())
            algorithms.push_back(cols[1]);
    }
    if (algorithms.size() < 2)
        throw ConfigError("ranking needs at least two algorithms");

    const std::filesystem::path dir(output_dir);
    std::filesystem::create_directories(dir);
    for (const auto& [dim, rows] : by_dim) {
        std::vector<std::vector<double>> matrix;
        std::vector<std::string> labels;
        for (const auto& [fn, cells] : rows) {
            std::vector<double> row;
            for (const std::string& a : algorithms) {
                auto it = cells.find(a);
                if (it == cells.end())
                    throw ConfigError("incomplete summary: " + fn + "/" + a);
                row.push_back(it->second);
            }
            matrix.push_back(std::move(row));
            labels.push_back(fn);
        }
        if (matrix.size() < 2)
            throw ConfigError("ranking needs at least two functions");
        const RankTable table =
            friedman_ranks(normalize_matrix(matrix), algorithms);

        std::ofstream out(dir / ("ranks_" + std::to_string(dim) + "d.csv"),
                          std::ios::binary);
        out << "row";
        for (const std::string& a : algorithms)
            out << ',' << a;
        out << '\n';
        for (std::size_t i = 0; i < table.normalized_matrix.size(); ++i) {
            out << labels[i];
            for (double v : table.normalized_matrix[i])
                out << ',' << format_number(v);
            out << '\n';
        }
        out << "average_rank";
        for (double r : table.average_ranks)
            out << ',' << format_number(r);
        out << "\nfriedman_chi2," << format_number(table.friedman_statistic)
            << '\n';
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    laybench::mtsa::register_with_registry();

    CLI::App app{"Benchmark suite for hard global-optimization functions"};
    app.require_subcommand(1);
    app.set_config("--config")->description(
        "key=value config file; command-line flags take precedence");

    app.add_subcommand("list", "Print the function catalog");

    std::string eval_function, eval_point, eval_mode = "radians";
    std::uint64_t eval_seed = 0x5eedULL;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a function at a point");
    eval->add_option("function", eval_function)->required();
    eval->add_option("point", eval_point, "comma-separated coordinates")->required();
    eval->add_option("--mode", eval_mode, "radians|degrees");
    eval->add_option("--seed", eval_seed, "noise seed for noisy functions");

    std::string run_functions, run_algorithms = "mtsa,random_search";
    std::string run_dimensions = "10,30", run_mode = "radians";
    std::string run_output = default_output_dir();
    int run_runs = 30;
    long run_budget_per_dim = 10000, run_budget = -1;
    std::uint64_t run_master_seed = 1;
    bool run_raw_friedman = false;
    CLI::App* run = app.add_subcommand("run", "Run a seeded experiment grid");
    run->add_option("--functions", run_functions,
                    "comma-separated names; default: all scalable functions");
    run->add_option("--algorithms", run_algorithms);
    run->add_option("--dimensions", run_dimensions);
    run->add_option("--runs", run_runs);
    run->add_option("--budget-per-dim", run_budget_per_dim,
                    "max evaluations = this * dimension");
    run->add_option("--budget", run_budget, "fixed evaluation budget (overrides rule)");
    run->add_option("--mode", run_mode, "radians|degrees");
    run->add_option("--master-seed", run_master_seed);
    run->add_option("--output-dir", run_output);
    run->add_flag("--friedman-raw-runs", run_raw_friedman,
                  "rank per (function, run) rows instead of mean errors");

    double verify_tolerance = 1e-9;
    std::string verify_output = default_output_dir();
    CLI::App* verify = app.add_subcommand("verify", "Check stated optima");
    verify->add_option("--tolerance", verify_tolerance);
    verify->add_option("--output-dir", verify_output);

    std::string surf_function, surf_mode = "radians";
    std::string surf_output = default_output_dir();
    int surf_resolution = 201;
    CLI::App* surface = app.add_subcommand("surface", "Export a 2-D value grid");
    surface->add_option("function", surf_function)->required();
    surface->add_option("--resolution", surf_resolution);
    surface->add_option("--mode", surf_mode, "radians|degrees");
    surface->add_option("--output-dir", surf_output);

    std::string rank_summary, rank_output = default_output_dir();
    CLI::App* rank = app.add_subcommand("rank", "Re-rank an existing summary CSV");
    rank->add_option("summary", rank_summary, "path to summary.csv")->required();
    rank->add_option("--output-dir", rank_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("list"))
            return cmd_list();
        if (app.got_subcommand("eval"))
            return cmd_eval(eval_function, eval_point, eval_mode, eval_seed);
        if (app.got_subcommand("verify"))
            return cmd_verify(verify_tolerance, verify_output);
        if (app.got_subcommand("surface"))
            return cmd_surface(surf_function, surf_resolution, surf_mode,
                               surf_output);
        if (app.got_subcommand("rank"))
            return cmd_rank(rank_summary, rank_output);

        // run
        ExperimentConfig config;
        for (const std::string& name : split(run_functions, ','))
            config.functions.push_back(parse_function(name));
        config.algorithms = split(run_algorithms, ',');
        config.dimensions.clear();
        for (const std::string& d : split(run_dimensions, ','))
            config.dimensions.push_back(std::stoi(d));
        config.runs = run_runs;
        config.budget_per_dimension = run_budget_per_dim;
        config.budget_override = run_budget;
        config.mode = parse_mode(run_mode);
        config.master_seed = run_master_seed;
        config.output_directory = run_output;
        config.friedman_raw_runs = run_raw_friedman;
        run_and_write(config);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
