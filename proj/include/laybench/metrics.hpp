// Error measures (plain error, mean/best total error), run statistics,
// min-max normalization and Friedman average ranks.
#ifndef LAYBENCH_METRICS_HPP
#define LAYBENCH_METRICS_HPP

#include "laybench/functions.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace laybench {

struct RunRecord {
    FunctionId function;
    std::string algorithm;
    int dimension;
    int run_index;
    double best_value;
    Point best_point;
    long evaluations_used;
    std::uint64_t seed;
};

struct StatsSummary {
    double mean;
    double std_dev; // sample standard deviation (n-1), 0 for a single record
    double min;
    double max;
    std::size_t count;
};

struct RankTable {
    std::vector<std::string> algorithms;
    std::vector<std::vector<double>> normalized_matrix; // rows: functions
    std::vector<double> average_ranks;                  // per algorithm
    double friedman_statistic;
};

double error(const RunRecord& record, double stated_value);

// Mean total error: value gap plus Euclidean distance to the canonical
// optimum, averaged over runs.
double mte(const std::vector<RunRecord>& records, double global_value,
           const Point& global_point);

// Best total error: the same sum for the best-value run.
double bte(const RunRecord& record, double global_value, const Point& global_point);

// Statistics over the records' error values (best_value - stated_value).
StatsSummary summarize(const std::vector<RunRecord>& records, double stated_value);
StatsSummary summarize(const std::vector<double>& values);

// Per-row min-max normalization to [0,1]; +infinity entries are clamped
// to 10x the row's largest finite value first; constant rows map to zeros.
std::vector<std::vector<double>>
normalize_matrix(const std::vector<std::vector<double>>& raw);

// Per-row ranks (1 = lowest, ties averaged) and the Friedman chi-square
// statistic over the column-average ranks.
RankTable friedman_ranks(const std::vector<std::vector<double>>& matrix,
                         const std::vector<std::string>& algorithms);

} // namespace laybench

#endif
