// Degree-argument trigonometric primitives, exact at the special angles
// (multiples of 30, 45 and 90 degrees) so that optima sitting at multiples
// of pi evaluate exactly in degree mode.
#ifndef LAYBENCH_DEGREE_TRIG_HPP
#define LAYBENCH_DEGREE_TRIG_HPP

namespace laybench {

// sin/cos/tan of an angle given in degrees. sin_deg(180*k) == 0 exactly,
// cos_deg(180*k) == +-1 exactly, tan_deg(45) == 1 exactly.
double sin_deg(double degrees);
double cos_deg(double degrees);
double tan_deg(double degrees);

// Radian -> degree transform: x / pi * 180.
double to_degrees(double radians);

} // namespace laybench

#endif
