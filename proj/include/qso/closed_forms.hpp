#pragma once

#include <cmath>

namespace qso {

/// Threshold (2 - sqrt 3)/2 separating the 2-cycle and fixed-point regimes of V_4 at a = 1/2.
inline const double kTwoCycleThreshold = (2.0 - std::sqrt(3.0)) / 2.0;

/// x2-coordinate of the fixed point of V_4 (a = 1/2) on the line x1 = b:
/// the root in [0,1] of x^2 - (3 - 2b) x + (1 - b). Domain [0, 1].
double fixed_curve_B(double b);

/// Roots of x^2 - (1 - 2c) x + c; the 2-cycle of V_4 (a = 1/2) on x1 = c.
/// Domain [0, (2 - sqrt 3)/2].
double two_cycle_C_plus(double c);
double two_cycle_C_minus(double c);

/// x2-coordinate of the edge fixed point (0, A, 1 - A) of V_28, a != 1/2.
/// The closed form and its rationalized variant agree; the latter is used,
/// which also evaluates to 1/2 at a = 1/2.
double edge_fixed_point_A(double a);

}  // namespace qso
