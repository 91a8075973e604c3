#include "laybench/degree_trig.hpp"

#include <cmath>
#include <limits>

namespace laybench {

namespace {

constexpr double kSqrt3Over2 = 0.86602540378443859659; // sqrt(3)/2
constexpr double kSqrt1Over2 = 0.70710678118654752440; // sqrt(1/2)

inline double deg2rad(double d)
{
    return d * (M_PI / 180.0);
}

// Reduce to [0, 360). fmod is exact, so exact multiples stay exact.
inline double reduce360(double d)
{
    double r = std::fmod(d, 360.0);
    if (r < 0.0)
        r += 360.0;
    return r;
}

} // namespace

double sin_deg(double degrees)
{
    if (!std::isfinite(degrees))
        return std::numeric_limits<double>::quiet_NaN();
    double r = reduce360(degrees);
    bool negate = false;
    if (r >= 180.0) {
        r -= 180.0; // Sterbenz: exact for r in [180, 360)
        negate = true;
    }
    if (r > 90.0)
        r = 180.0 - r; // exact for r in (90, 180)
    double s;
    if (r == 0.0)
        s = 0.0;
    else if (r == 30.0)
        s = 0.5;
    else if (r == 45.0)
        s = kSqrt1Over2;
    else if (r == 60.0)
        s = kSqrt3Over2;
    else if (r == 90.0)
        s = 1.0;
    else
        s = std::sin(deg2rad(r));
    return negate ? -s : s;
}

double cos_deg(double degrees)
{
    if (!std::isfinite(degrees))
        return std::numeric_limits<double>::quiet_NaN();
    double r = reduce360(std::fabs(degrees));
    if (r >= 180.0)
        r = 360.0 - r; // exact
    bool negate = false;
    if (r > 90.0) {
        r = 180.0 - r;
        negate = true;
    }
    double c;
    if (r == 0.0)
        c = 1.0;
    else if (r == 30.0)
        c = kSqrt3Over2;
    else if (r == 45.0)
        c = kSqrt1Over2;
    else if (r == 60.0)
        c = 0.5;
    else if (r == 90.0)
        c = 0.0;
    else
        c = std::cos(deg2rad(r));
    return negate ? -c : c;
}

double tan_deg(double degrees)
{
    if (!std::isfinite(degrees))
        return std::numeric_limits<double>::quiet_NaN();
    double r = std::fmod(degrees, 180.0);
    if (r < 0.0)
        r += 180.0;
    bool negate = false;
    if (r > 90.0) {
        r = 180.0 - r;
        negate = true;
    }
    double t;
    if (r == 0.0)
        t = 0.0;
    else if (r == 45.0)
        t = 1.0;
    else if (r == 90.0)
        t = std::numeric_limits<double>::infinity();
    else
        t = std::tan(deg2rad(r));
    return negate ? -t : t;
}

double to_degrees(double radians)
{
    return radians / M_PI * 180.0;
}

} // namespace laybench
