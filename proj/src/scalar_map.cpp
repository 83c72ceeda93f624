#include "qso/scalar_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace qso {

ScalarMap::ScalarMap(double a) : a_(a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("f_a parameter outside [0,1]");
}

double ScalarMap::operator()(double x) const {
  if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("f_a argument " + std::to_string(x) + " outside [0,1]");
  return x * x + 2.0 * a_ * x * (1.0 - x);
}

ScalarOrbit iterate_towards(const ScalarMap& f, double x0, double target, double tol, long max_steps) {
  double x = x0;
  long n = 0;
  while (std::abs(x - target) > tol && n < max_steps) {
    x = f(x);
    ++n;
  }
  return {x, n, std::abs(x - target) <= tol};
}

ScalarMapReport f_properties_check(const ScalarMap& f, std::span<const double> grid, double orbit_tol,
                                   long max_steps) {
  if (f.a() == 0.5) throw std::domain_error("f_1/2 is the identity; properties need a != 1/2");
  ScalarMapReport r;
  r.min_sign_product = std::numeric_limits<double>::infinity();

  if (f(0.0) != 0.0 || f(1.0) != 1.0) r.fixed_points = false;

  std::vector<double> sorted(grid.begin(), grid.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (f(sorted[i - 1]) > f(sorted[i])) r.increasing = false;

  const double target = f.a() < 0.5 ? 0.0 : 1.0;
  for (double x : sorted) {
    if (x <= 0.0 || x >= 1.0) continue;
    const double fx = f(x);
    if (fx == x) r.fixed_points = false;
    const double product = (f.a() - 0.5) * (fx - x);
    r.min_sign_product = std::min(r.min_sign_product, product);
    if (!(product > 0.0)) r.sign = false;
    const ScalarOrbit orbit = iterate_towards(f, x, target, orbit_tol, max_steps);
    r.max_orbit_steps = std::max(r.max_orbit_steps, orbit.steps);
    r.worst_orbit_distance = std::max(r.worst_orbit_distance, std::abs(orbit.limit - target));
    if (!orbit.reached) r.orbits = false;
  }
  return r;
}

}  // namespace qso
