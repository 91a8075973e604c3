#include "laybench/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace laybench {

namespace {

double point_distance(const Point& a, const Point& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("point dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

} // namespace

double error(const RunRecord& record, double stated_value)
{
    return record.best_value - stated_value;
}

double mte(const std::vector<RunRecord>& records, double global_value,
           const Point& global_point)
{
    if (records.empty())
        throw std::invalid_argument("mte over empty record set");
    double sum = 0.0;
    for (const auto& r : records)
        sum += (r.best_value - global_value) + point_distance(r.best_point, global_point);
    return sum / static_cast<double>(records.size());
}

double bte(const RunRecord& record, double global_value, const Point& global_point)
{
    return (record.best_value - global_value) +
           point_distance(record.best_point, global_point);
}

StatsSummary summarize(const std::vector<double>& values)
{
    if (values.empty())
        throw std::invalid_argument("summarize over empty input");
    const double n = static_cast<double>(values.size());
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (double v : values)
        ss += (v - mean) * (v - mean);
    const double std_dev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    return {mean, std_dev, *mn, *mx, values.size()};
}

StatsSummary summarize(const std::vector<RunRecord>& records, double stated_value)
{
    std::vector<double> errors;
    errors.reserve(records.size());
    for (const auto& r : records)
        errors.push_back(error(r, stated_value));
    return summarize(errors);
}

std::vector<std::vector<double>>
normalize_matrix(const std::vector<std::vector<double>>& raw)
{
    std::vector<std::vector<double>> out;
    out.reserve(raw.size());
    for (const auto& row : raw) {
        std::vector<double> r = row;
        // Clamp overflow fitnesses so a "worst" stays worst without NaNs.
        double max_finite = -std::numeric_limits<double>::infinity();
        for (double v : r)
            if (std::isfinite(v))
                max_finite = std::max(max_finite, v);
        for (double& v : r) {
            if (std::isinf(v) && v > 0.0)
                v = std::isfinite(max_finite) ? 10.0 * std::fabs(max_finite) : 1.0;
        }
        const auto [mn, mx] = std::minmax_element(r.begin(), r.end());
        const double span = *mx - *mn;
        if (span == 0.0) {
            std::fill(r.begin(), r.end(), 0.0);
        } else {
            const double lo = *mn;
            for (double& v : r)
                v = (v - lo) / span;
        }
        out.push_back(std::move(r));
    }
    return out;
}

RankTable friedman_ranks(const std::vector<std::vector<double>>& matrix,
                         const std::vector<std::string>& algorithms)
{
    const std::size_t rows = matrix.size();
    const std::size_t cols = algorithms.size();
    if (rows < 2 || cols < 2)
        throw std::invalid_argument("friedman requires >= 2 functions and >= 2 algorithms");
    for (const auto& row : matrix)
        if (row.size() != cols)
            throw std::invalid_argument("matrix column count mismatch");

    RankTable table;
    table.algorithms = algorithms;
    table.normalized_matrix = matrix;
    table.average_ranks.assign(cols, 0.0);

    for (const auto& row : matrix) {
        // Rank with tie averaging: rank = (#smaller) + (#equal + 1) / 2.
        for (std::size_t j = 0; j < cols; ++j) {
            int smaller = 0;
            int equal = 0;
            for (std::size_t l = 0; l < cols; ++l) {
                if (row[l] < row[j])
                    ++smaller;
                else if (row[l] == row[j])
                    ++equal;
            }
            table.average_ranks[j] += smaller + 0.5 * (equal + 1.0);
        }
    }
    for (double& r : table.average_ranks)
        r /= static_cast<double>(rows);

    const double a = static_cast<double>(cols);
    const double n = static_cast<double>(rows);
    double sum_sq = 0.0;
    for (double r : table.average_ranks)
        sum_sq += r * r;
    table.friedman_statistic =
        12.0 * n / (a * (a + 1.0)) * (sum_sq - a * (a + 1.0) * (a + 1.0) / 4.0);
    return table;
}

} // namespace laybench
