#pragma once

#include "qso/simplex.hpp"
#include "qso/tensor.hpp"

#include <string>
#include <vector>

namespace qso {

/// x^(0), ..., x^(n) with x^(t+1) = V(x^(t)).
std::vector<SimplexPointd> iterate(const HeredityTensord& t, const SimplexPointd& x0, long n);

enum class OutcomeKind { fixed_point, two_cycle, undecided };

std::string to_string(OutcomeKind kind);

struct Outcome {
  OutcomeKind kind = OutcomeKind::undecided;
  /// One point for a fixed point, two (orbit order) for a 2-cycle, none when undecided.
  std::vector<SimplexPointd> points;
};

struct KeptIterate {
  long step;
  SimplexPointd x;
};

struct TrajectoryReport {
  SimplexPointd initial;
  std::vector<KeptIterate> iterates;  // every step up to 100, then geometrically spaced, plus the last
  long steps = 0;
  Outcome outcome;
  double step_residual = 0.0;     // |x^(n+1) - x^(n)|_1
  double period2_residual = 0.0;  // |x^(n+2) - x^(n)|_1
};

struct OmegaOptions {
  double tol = 1e-9;
  long max_iter = 100000;

  /// Hyperbolic defaults; a = 1/2 orbits can converge sub-geometrically.
  static OmegaOptions for_parameter(double a) {
    return a == 0.5 ? OmegaOptions{1e-6, 1000000} : OmegaOptions{1e-9, 100000};
  }
};

/// Iterates until the orbit settles on a fixed point or a 2-cycle.
///
/// Fixed point: |x^(n+1) - x^(n)|_1 <= tol. Two-cycle: |x^(n+2) - x^(n)|_1 <= tol
/// while |x^(n+1) - x^(n)|_1 > 10 tol. Either decision additionally needs the
/// geometric tail d rho / (1 - rho) of the relevant residual sequence to be
/// within tol, where rho is the ratio of consecutive residuals.
TrajectoryReport omega_limit(const HeredityTensord& t, const SimplexPointd& x0,
                             const OmegaOptions& options = {});

/// Regions of S^2 used by the V_13 invariance arguments.
enum class RegionKind { vertex, edge, line_13, lower_half, upper_half };

struct Region {
  RegionKind kind;
  int index = -1;  // 0-based vertex or edge index (Gamma_i: x_i = 0), -1 otherwise
};

std::string to_string(const Region& region);

/// Most specific region: vertex, then edge Gamma_i, then l_13 (x1 = x3), then the
/// strict half-simplices x1 < x3 (lower) and x1 > x3 (upper).
Region region_classify(const SimplexPointd& x);

}  // namespace qso
