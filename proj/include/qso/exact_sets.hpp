#pragma once

#include "qso/simplex.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qso {

class UnsupportedOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operators with closed-form dynamics: V_4, V_13, V_25, V_28.
bool has_closed_form(int op_id);

/// Parametric curve t -> point in S^2 over [lo, hi].
struct SimplexCurve {
  std::string label;
  double lo = 0.0;
  double hi = 1.0;
  std::function<SimplexPointd(double)> at;

  /// l1 distance from x to the curve (dense scan plus golden-section refinement).
  double distance(const SimplexPointd& x) const;
  /// n points at evenly spaced parameters, endpoints included.
  std::vector<SimplexPointd> sample(int n) const;
};

/// Finite points plus parametric continua.
struct PointSet {
  std::vector<SimplexPointd> points;
  std::vector<SimplexCurve> curves;

  bool empty() const { return points.empty() && curves.empty(); }
  bool is_finite() const { return curves.empty(); }
  double distance(const SimplexPointd& x) const;
  /// points, followed by `per_curve` samples of each curve.
  std::vector<SimplexPointd> sample(int per_curve) const;
};

PointSet fixed_points_exact(int op_id, double a);

/// Points of minimal period 2.
PointSet periodic2_exact(int op_id, double a);

}  // namespace qso
