#include "qso/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qso {
namespace {

void require_in(double v, double lo, double hi, const char* what) {
  if (!(v >= lo && v <= hi))
    throw std::domain_error(std::string(what) + " argument " + std::to_string(v) + " outside [" +
                            std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// Discriminant 4c^2 - 8c + 1 vanishes at the threshold; clamp rounding below zero.
double cycle_discriminant(double c) { return std::max(0.0, 4.0 * c * c - 8.0 * c + 1.0); }

}  // namespace

double fixed_curve_B(double b) {
  require_in(b, 0.0, 1.0, "B");
  const double s = 1.0 - b;
  // (3 - 2b - sqrt(4b^2 - 8b + 5)) / 2, rationalized
  return 2.0 * s / (1.0 + 2.0 * s + std::sqrt(1.0 + 4.0 * s * s));
}

double two_cycle_C_plus(double c) {
  require_in(c, 0.0, kTwoCycleThreshold, "C+");
  return (1.0 - 2.0 * c + std::sqrt(cycle_discriminant(c))) / 2.0;
}

double two_cycle_C_minus(double c) {
  require_in(c, 0.0, kTwoCycleThreshold, "C-");
  // product of the roots is c
  const double plus = two_cycle_C_plus(c);
  return plus > 0.0 ? c / plus : 0.0;
}

double edge_fixed_point_A(double a) {
  require_in(a, 0.0, 1.0, "A");
  const double d = 1.0 - 2.0 * a;
  return 2.0 / (2.0 + d + std::sqrt(4.0 + d * d));
}

}  // namespace qso
