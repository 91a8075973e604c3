// Benchmark function suite: 20 scalable "layeb" objectives plus the
// 2-dimensional crosslegtable precision demonstrator, with bounds and
// optimum metadata and a radian/degree evaluation switch.
#ifndef LAYBENCH_FUNCTIONS_HPP
#define LAYBENCH_FUNCTIONS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace laybench {

using Point = std::vector<double>;

enum class FunctionId : int {
    Layeb01 = 0,
    Layeb02,
    Layeb03,
    Layeb04,
    Layeb05,
    Layeb06,
    Layeb07,
    Layeb08,
    Layeb09,
    Layeb10,
    Layeb11,
    Layeb12,
    Layeb13,
    Layeb14,
    Layeb15,
    Layeb16,
    Layeb17,
    Layeb18,
    Layeb19,
    Layeb20,
    CrossLegTable,
};

inline constexpr int kFunctionCount = 21;

enum class Modality { Unimodal, Multimodal };

enum class TrigMode { Radians, Degrees };

// How the stated optimum relates to the implemented formula.
enum class Consistency {
    Verified,             // f(reference point) == stated value within 1e-9
    InconsistentAsPrinted, // printed formula cannot reproduce the stated value
    Ambiguous,             // no canonical optimum point can be generated
};

struct OptimumSpec {
    // Stated optimum value as a function of the dimension.
    double (*value)(int n);
    Consistency consistency;
};

struct FunctionDescriptor {
    FunctionId id;
    std::string display_name;
    Modality modality;
    bool separable;
    bool noisy;
    double lower_bound;
    double upper_bound;
    int min_dimension;       // 2 for everything in the catalog
    bool fixed_dimension;    // crosslegtable only: dimension locked at 2
    OptimumSpec stated_optimum;
};

// Deterministic uniform [0,1) stream for the noisy functions.
class NoiseSource {
public:
    explicit NoiseSource(std::uint64_t seed = 0) : gen_(seed) {}

    double next()
    {
        // 53-bit mantissa draw; identical across platforms.
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    void reseed(std::uint64_t seed) { gen_.seed(seed); }

private:
    std::mt19937_64 gen_;
};

struct EvaluationContext {
    TrigMode mode = TrigMode::Radians;
    NoiseSource noise{0};
};

struct StatedOptimum {
    double value;
    Consistency consistency;
};

const FunctionDescriptor& descriptor(FunctionId id);

// Stable catalog order: layeb01..layeb20, crosslegtable last.
const std::vector<FunctionId>& list_functions();

std::optional<FunctionId> function_from_name(const std::string& name);

// Throws std::invalid_argument on dimension mismatch.
double evaluate(FunctionId id, std::span<const double> x, EvaluationContext& ctx);

StatedOptimum stated_optimum_value(FunctionId id, int n);

// Canonical optimum point for dimension n and shift parameter k; nullopt
// when the catalog flags the pattern as ambiguous for that dimension.
std::optional<Point> reference_optimum_point(FunctionId id, int n, int k);
std::optional<Point> reference_optimum_point(FunctionId id, int n); // default k

// Per-coordinate radian-to-degree transform x_i -> x_i / pi * 180.
Point to_degrees(const Point& x);

// True when the canonical optimum involves multiples of pi, i.e. the
// optimum is exact only in degree mode.
bool optimum_on_pi_grid(FunctionId id);

} // namespace laybench

#endif
