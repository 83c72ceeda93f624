#pragma once

#include <span>

namespace qso {

/// f_a(x) = x^2 + 2 a x (1 - x) on [0, 1].
class ScalarMap {
 public:
  explicit ScalarMap(double a);

  double a() const { return a_; }
  double operator()(double x) const;

 private:
  double a_;
};

struct ScalarOrbit {
  double limit;  // last iterate
  long steps;
  bool reached;  // within tol of the target
};

/// Iterates f from x0 until |f^n(x0) - target| <= tol or max_steps.
ScalarOrbit iterate_towards(const ScalarMap& f, double x0, double target, double tol, long max_steps);

struct ScalarMapReport {
  bool fixed_points = true;  // f(0) = 0, f(1) = 1, f(x) != x on interior grid points
  bool increasing = true;    // f(x) <= f(y) for grid x <= y
  bool sign = true;          // (a - 1/2)(f(x) - x) > 0 on interior grid points
  bool orbits = true;        // interior orbits reach 0 (a < 1/2) or 1 (a > 1/2)
  double min_sign_product = 0.0;
  double worst_orbit_distance = 0.0;
  long max_orbit_steps = 0;

  bool ok() const { return fixed_points && increasing && sign && orbits; }
};

/// Checks the four scalar-map properties on a grid; a must differ from 1/2.
ScalarMapReport f_properties_check(const ScalarMap& f, std::span<const double> grid,
                                   double orbit_tol = 1e-9, long max_steps = 100000);

}  // namespace qso
