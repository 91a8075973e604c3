#include "laybench/functions.hpp"

#include "laybench/degree_trig.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace laybench {

namespace {

// Trig dispatch: in degree mode every trigonometric argument a (radians)
// is transformed to a/pi*180 and evaluated with the degree primitives, so
// zeros at multiples of pi become exact.
struct Trig {
    TrigMode mode;

    double s(double a) const
    {
        return mode == TrigMode::Radians ? std::sin(a) : sin_deg(to_degrees(a));
    }
    double c(double a) const
    {
        return mode == TrigMode::Radians ? std::cos(a) : cos_deg(to_degrees(a));
    }
    double t(double a) const
    {
        return mode == TrigMode::Radians ? std::tan(a) : tan_deg(to_degrees(a));
    }
};

double opt_zero(int) { return 0.0; }
double opt_neg_n_minus_1(int n) { return -static_cast<double>(n) + 1.0; }
double opt_ln001(int n) { return std::log(0.001) * (n - 1); }
double opt_ln001_minus_1(int n) { return (std::log(0.001) - 1.0) * (n - 1); }
double opt_neg_e_plus_1(int n) { return -(M_E + 1.0) * (n - 1); }
double opt_neg_one(int) { return -1.0; }

const std::array<FunctionDescriptor, kFunctionCount> kCatalog = {{
    {FunctionId::Layeb01, "layeb01", Modality::Unimodal, true, false, -100.0, 100.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb02, "layeb02", Modality::Unimodal, true, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb03, "layeb03", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_neg_n_minus_1, Consistency::InconsistentAsPrinted}},
    {FunctionId::Layeb04, "layeb04", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_ln001_minus_1, Consistency::Verified}},
    {FunctionId::Layeb05, "layeb05", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_ln001, Consistency::Verified}},
    {FunctionId::Layeb06, "layeb06", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb07, "layeb07", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::Ambiguous}},
    {FunctionId::Layeb08, "layeb08", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_ln001, Consistency::InconsistentAsPrinted}},
    {FunctionId::Layeb09, "layeb09", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb10, "layeb10", Modality::Multimodal, false, false, -100.0, 100.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb11, "layeb11", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_neg_n_minus_1, Consistency::Verified}},
    {FunctionId::Layeb12, "layeb12", Modality::Multimodal, false, false, -5.0, 5.0, 2, false,
     {opt_neg_e_plus_1, Consistency::Verified}},
    {FunctionId::Layeb13, "layeb13", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::Verified}},
    // Printed with a leading minus that turns the stated minimum into a
    // maximum; implemented without it (see catalog notes in the README).
    {FunctionId::Layeb14, "layeb14", Modality::Multimodal, false, false, -100.0, 100.0, 2, false,
     {opt_zero, Consistency::InconsistentAsPrinted}},
    {FunctionId::Layeb15, "layeb15", Modality::Multimodal, false, false, -100.0, 100.0, 2, false,
     {opt_zero, Consistency::Verified}},
    // Same leading-minus situation as layeb14.
    {FunctionId::Layeb16, "layeb16", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_zero, Consistency::InconsistentAsPrinted}},
    {FunctionId::Layeb17, "layeb17", Modality::Multimodal, false, false, -100.0, 100.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb18, "layeb18", Modality::Multimodal, false, false, -10.0, 10.0, 2, false,
     {opt_ln001, Consistency::Verified}},
    {FunctionId::Layeb19, "layeb19", Modality::Unimodal, true, true, -5.0, 5.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::Layeb20, "layeb20", Modality::Unimodal, true, true, -5.0, 5.0, 2, false,
     {opt_zero, Consistency::Verified}},
    {FunctionId::CrossLegTable, "crosslegtable", Modality::Multimodal, false, false, -10.0, 10.0,
     2, true, {opt_neg_one, Consistency::Verified}},
}};

void check_dimension(FunctionId id, std::size_t n)
{
    const auto& d = descriptor(id);
    if (static_cast<int>(n) < d.min_dimension)
        throw std::invalid_argument("point dimension " + std::to_string(n) +
                                    " below minimum for " + d.display_name);
    if (d.fixed_dimension && n != 2)
        throw std::invalid_argument(d.display_name + " is fixed at dimension 2");
}

} // namespace

const FunctionDescriptor& descriptor(FunctionId id)
{
    return kCatalog[static_cast<int>(id)];
}

const std::vector<FunctionId>& list_functions()
{
    static const std::vector<FunctionId> order = [] {
        std::vector<FunctionId> v;
        v.reserve(kFunctionCount);
        for (const auto& d : kCatalog)
            v.push_back(d.id);
        return v;
    }();
    return order;
}

std::optional<FunctionId> function_from_name(const std::string& name)
{
    for (const auto& d : kCatalog)
        if (d.display_name == name)
            return d.id;
    return std::nullopt;
}

double evaluate(FunctionId id, std::span<const double> x, EvaluationContext& ctx)
{
    check_dimension(id, x.size());
    const Trig tg{ctx.mode};
    const std::size_t n = x.size();
    double sum = 0.0;

    switch (id) {
    case FunctionId::Layeb01:
        for (std::size_t i = 0; i < n; ++i) {
            const double d = x[i] - 1.0;
            sum += 10000.0 * std::sqrt(std::fabs(std::exp(d * d) - 1.0));
        }
        return sum;

    case FunctionId::Layeb02:
        for (std::size_t i = 0; i < n; ++i) {
            const double d = x[i] - 1.0;
            sum += std::fabs(std::exp(100.0 * d * d / std::exp(x[i] + 1.0)) - 1.0);
        }
        return sum;

    case FunctionId::Layeb03:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double amp = std::exp(std::fabs(100.0 - std::hypot(x[i], x[i + 1]) / M_PI));
            sum += std::pow(std::fabs(tg.s(x[i]) * amp + tg.s(x[i + 1]) + 1.0), -0.1);
        }
        return sum;

    case FunctionId::Layeb04:
        for (std::size_t i = 0; i + 1 < n; ++i)
            sum += std::log(std::fabs(x[i] * x[i + 1]) + 0.001) + tg.c(x[i] + x[i + 1]);
        return sum;

    case FunctionId::Layeb05:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double num =
                std::log(std::fabs(tg.s(x[i] - M_PI_2) + tg.c(x[i + 1] - M_PI)) + 0.001);
            const double den = std::fabs(tg.c(2.0 * x[i] - x[i + 1] + M_PI_2)) + 1.0;
            sum += num / den;
        }
        return sum;

    case FunctionId::Layeb06:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double inner =
                tg.c(std::hypot(x[i], x[i + 1])) * tg.s(x[i + 1]) + tg.c(x[i + 1]) + 1.0;
            sum += std::pow(std::fabs(inner), 0.1);
        }
        return sum;

    case FunctionId::Layeb07:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            sum += 100.0 * std::pow(std::fabs(tg.c(x[i] + x[i + 1] - M_PI_2)), 0.1) -
                   std::exp(tg.c(16.0 * x[i] * x[i + 1] / M_PI)) + M_E;
        }
        return sum;

    case FunctionId::Layeb08:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double d = x[i] - x[i + 1];
            sum += std::log(std::fabs(d) + 0.001) + std::fabs(100.0 * tg.c(d));
        }
        return sum;

    case FunctionId::Layeb09:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double cross = tg.c(x[i] + x[i + 1]);
            const double a = std::fabs(x[i + 1]) * (std::fabs(tg.s(x[i + 1])) - 1.0) + cross;
            sum += std::sqrt(std::fabs(std::exp(a) / std::exp(cross) - 1.0));
        }
        return sum;

    case FunctionId::Layeb10:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double l = std::log(x[i] * x[i] + x[i + 1] * x[i + 1] + 0.5);
            sum += l * l + std::fabs(100.0 * tg.s(x[i] - x[i + 1]));
        }
        return sum;

    case FunctionId::Layeb11:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double den = 100.0 * std::fabs(x[i] * x[i] - x[i + 1] - 1.0);
            sum += tg.c(x[i] * x[i + 1] + M_PI) / (den * den + 1.0);
        }
        return sum;

    case FunctionId::Layeb12:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double a = M_PI_2 * x[i] - M_PI_4 * x[i + 1] - M_PI_2;
            sum -= tg.c(a) * std::exp(tg.c(2.0 * M_PI * x[i] * x[i + 1])) + 1.0;
        }
        return sum;

    case FunctionId::Layeb13:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            sum += std::fabs(tg.c(x[i] - x[i + 1])) +
                   100.0 * std::pow(std::fabs(std::log(std::fabs(x[i] + x[i + 1]) + 1.0)), 0.1);
        }
        return sum;

    case FunctionId::Layeb14:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s = x[i] + x[i + 1] + 2.0;
            sum += 100.0 * std::pow(std::fabs(x[i] * x[i] - x[i + 1] - 1.0), 0.1) +
                   std::fabs(std::log(s * s));
        }
        return sum;

    case FunctionId::Layeb15:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double th = std::tanh(2.0 * std::fabs(x[i]) - x[i + 1] * x[i + 1] - 1.0);
            sum += 10.0 * std::sqrt(std::fabs(th)) +
                   std::fabs(std::exp(x[i] * x[i + 1] + 1.0) - 1.0);
        }
        return sum;

    case FunctionId::Layeb16:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double cx = tg.c(x[i]);
            const double sy = tg.s(x[i + 1]);
            const double inner = tg.t(x[i + 1]) * x[i] +
                                 100.0 * std::fabs(cx * cx - sy * sy) - M_PI_4;
            sum += std::pow(std::fabs(inner), 0.2);
        }
        return sum;

    case FunctionId::Layeb17:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s = x[i] + x[i + 1] + 2.0;
            const double den = 1000.0 * (x[i] * x[i] - x[i + 1] - 1.0);
            sum += 10.0 * std::fabs(std::log(s * s)) - 1.0 / (den * den + 1.0) + 1.0;
        }
        return sum;

    case FunctionId::Layeb18:
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double num =
                std::log(std::fabs(tg.c(2.0 * x[i] * x[i + 1] / M_PI)) + 0.001);
            const double den = std::fabs(tg.s(x[i] + x[i + 1]) * tg.c(x[i])) + 1.0;
            sum += num / den;
        }
        return sum;

    case FunctionId::Layeb19:
        for (std::size_t i = 0; i < n; ++i) {
            const double u = ctx.noise.next();
            const double d = x[i] - 1.0;
            const double l = std::log(d * d + 1.0);
            sum += 100.0 * std::pow(u, static_cast<double>(i + 1)) * l * l;
        }
        return sum;

    case FunctionId::Layeb20:
        for (std::size_t i = 0; i < n; ++i) {
            const double u = ctx.noise.next();
            const double d = x[i] - 1.0;
            sum += std::pow(u, static_cast<double>(i + 1)) * d * d;
        }
        return sum;

    case FunctionId::CrossLegTable: {
        const double amp = std::exp(100.0 - std::hypot(x[0], x[1]) / M_PI);
        const double inner = std::fabs(tg.s(x[0]) * tg.s(x[1]) * amp) + 1.0;
        return -1.0 / std::pow(inner, 0.1);
    }
    }
    throw std::logic_error("unknown function id");
}

StatedOptimum stated_optimum_value(FunctionId id, int n)
{
    const auto& d = descriptor(id);
    if (n < d.min_dimension)
        throw std::invalid_argument("dimension below minimum");
    return {d.stated_optimum.value(n), d.stated_optimum.consistency};
}

namespace {

Point fill(int n, double v)
{
    return Point(static_cast<std::size_t>(n), v);
}

Point alternate(int n, double a, double b)
{
    Point p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[i] = (i % 2 == 0) ? a : b;
    return p;
}

} // namespace

std::optional<Point> reference_optimum_point(FunctionId id, int n, int k)
{
    const auto& d = descriptor(id);
    if (n < d.min_dimension || (d.fixed_dimension && n != 2))
        throw std::invalid_argument("invalid dimension for reference point");
    const double kk = k;
    switch (id) {
    case FunctionId::Layeb01:
    case FunctionId::Layeb02:
    case FunctionId::Layeb19:
    case FunctionId::Layeb20:
        return fill(n, 1.0);
    case FunctionId::Layeb03:
        return fill(n, kk * M_PI);
    case FunctionId::Layeb04:
        return alternate(n, 0.0, (2.0 * kk - 1.0) * M_PI);
    case FunctionId::Layeb05:
        return alternate(n, (2.0 * kk - 1.0) * M_PI, 2.0 * kk * M_PI);
    case FunctionId::Layeb06:
        return fill(n, (2.0 * kk - 1.0) * M_PI);
    case FunctionId::Layeb07:
        // The printed pattern requires x_{i+1} to be both k*pi and an odd
        // multiple of pi/2 when n > 2; no canonical point exists there.
        if (n > 2)
            return std::nullopt;
        return Point{(2.0 * kk - 1.0) * M_PI_2, kk * M_PI};
    case FunctionId::Layeb08:
        return alternate(n, M_PI_4, -M_PI_4);
    case FunctionId::Layeb09:
        return fill(n, (2.0 * kk - 1.0) * M_PI_2);
    case FunctionId::Layeb10:
        return fill(n, 0.5);
    case FunctionId::Layeb11:
        return alternate(n, -1.0, 0.0);
    case FunctionId::Layeb12:
        return fill(n, 2.0);
    case FunctionId::Layeb13:
        return alternate(n, (2.0 * kk + 1.0) * M_PI_4, -(2.0 * kk + 1.0) * M_PI_4);
    case FunctionId::Layeb14:
        return alternate(n, 0.0, -1.0);
    case FunctionId::Layeb15:
        return alternate(n, 1.0, -1.0);
    case FunctionId::Layeb16:
        return fill(n, M_PI_4);
    case FunctionId::Layeb17:
        return alternate(n, -1.0, 0.0);
    case FunctionId::Layeb18:
        return fill(n, (2.0 * kk - 1.0) * M_PI_2);
    case FunctionId::CrossLegTable:
        return fill(2, kk * M_PI);
    }
    return std::nullopt;
}

std::optional<Point> reference_optimum_point(FunctionId id, int n)
{
    switch (id) {
    case FunctionId::Layeb04:
    case FunctionId::Layeb05:
    case FunctionId::Layeb06:
    case FunctionId::Layeb07:
    case FunctionId::Layeb09:
    case FunctionId::Layeb18:
        return reference_optimum_point(id, n, 1);
    default:
        return reference_optimum_point(id, n, 0);
    }
}

Point to_degrees(const Point& x)
{
    Point out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = to_degrees(x[i]);
    return out;
}

bool optimum_on_pi_grid(FunctionId id)
{
    switch (id) {
    case FunctionId::Layeb03:
    case FunctionId::Layeb04:
    case FunctionId::Layeb05:
    case FunctionId::Layeb06:
    case FunctionId::Layeb07:
    case FunctionId::Layeb08:
    case FunctionId::Layeb09:
    case FunctionId::Layeb13:
    case FunctionId::Layeb16:
    case FunctionId::Layeb18:
        return true;
    default:
        return false;
    }
}

} // namespace laybench
