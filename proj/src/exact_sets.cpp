#include "qso/exact_sets.hpp"

#include "qso/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qso {
namespace {

SimplexPointd point3(double x1, double x2, double x3) { return SimplexPointd{x1, x2, x3}; }

SimplexCurve edge_curve(int i) {
  const std::string label = "Gamma_" + std::to_string(i + 1);
  return {label, 0.0, 1.0, [i](double t) {
            Eigen::Vector3d v;
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            v[i] = 0.0;
            v[std::min(j, k)] = t;
            v[std::max(j, k)] = 1.0 - t;
            return SimplexPointd(Eigen::VectorXd(v));
          }};
}

SimplexCurve line13_curve() {
  return {"l_13", 0.0, 0.5, [](double t) { return point3(t, std::max(0.0, 1.0 - 2.0 * t), t); }};
}

SimplexCurve fixed_B_curve() {
  return {"(b, B(b), 1-b-B(b))", 0.0, 1.0, [](double b) {
            const double x2 = fixed_curve_B(b);
            return point3(b, x2, std::max(0.0, 1.0 - b - x2));
          }};
}

SimplexCurve cycle_curve(bool plus) {
  return {plus ? "(c, C+(c), 1-c-C+(c))" : "(c, C-(c), 1-c-C-(c))", 0.0, kTwoCycleThreshold,
          [plus](double c) {
            const double x2 = plus ? two_cycle_C_plus(c) : two_cycle_C_minus(c);
            return point3(c, x2, std::max(0.0, 1.0 - c - x2));
          }};
}

void require_supported(int op_id) {
  if (!has_closed_form(op_id))
    throw UnsupportedOperator("no closed-form results for V_" + std::to_string(op_id) +
                              " (supported: 4, 13, 25, 28)");
}

void require_parameter(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("parameter a outside [0,1]");
}

}  // namespace

bool has_closed_form(int op_id) { return op_id == 4 || op_id == 13 || op_id == 25 || op_id == 28; }

double SimplexCurve::distance(const SimplexPointd& x) const {
  constexpr int kScan = 1024;
  auto f = [&](double t) { return l1_distance(x, at(t)); };
  double best = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i <= kScan; ++i) {
    const double d = f(lo + (hi - lo) * i / kScan);
    if (d < best) {
      best = d;
      best_i = i;
    }
  }
  double left = lo + (hi - lo) * std::max(0, best_i - 1) / kScan;
  double right = lo + (hi - lo) * std::min(kScan, best_i + 1) / kScan;
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = right - ratio * (right - left), d = left + ratio * (right - left);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && right - left > 1e-16; ++it) {
    if (fc < fd) {
      right = d;
      d = c;
      fd = fc;
      c = right - ratio * (right - left);
      fc = f(c);
    } else {
      left = c;
      c = d;
      fc = fd;
      d = left + ratio * (right - left);
      fd = f(d);
    }
  }
  return std::min({best, fc, fd});
}

std::vector<SimplexPointd> SimplexCurve::sample(int n) const {
  std::vector<SimplexPointd> out;
  if (n <= 0) return out;
  if (n == 1) return {at(lo)};
  for (int i = 0; i < n; ++i) out.push_back(at(lo + (hi - lo) * i / (n - 1)));
  return out;
}

double PointSet::distance(const SimplexPointd& x) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : points) best = std::min(best, l1_distance(x, p));
  for (const auto& c : curves) best = std::min(best, c.distance(x));
  return best;
}

std::vector<SimplexPointd> PointSet::sample(int per_curve) const {
  std::vector<SimplexPointd> out = points;
  for (const auto& c : curves) {
    auto s = c.sample(per_curve);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

PointSet fixed_points_exact(int op_id, double a) {
  require_supported(op_id);
  require_parameter(a);
  const bool half = a == 0.5;
  const auto e1 = vertex(0, 3), e2 = vertex(1, 3), e3 = vertex(2, 3);
  switch (op_id) {
    case 13:
      if (half) return {{}, {edge_curve(1), line13_curve()}};
      return {{e1, e2, e3}, {}};
    case 4:
      if (half) return {{}, {fixed_B_curve()}};
      return {{e1, point3(0.0, (3.0 - std::sqrt(5.0)) / 2.0, (std::sqrt(5.0) - 1.0) / 2.0)}, {}};
    case 28:
      if (half) return {{e1, point3(0.0, 0.5, 0.5)}, {}};
      {
        const double x2 = edge_fixed_point_A(a);
        return {{e1, point3(0.0, x2, 1.0 - x2)}, {}};
      }
    case 25:
      if (half) return {{e1}, {edge_curve(0)}};
      return {{e1, e2, e3}, {}};
  }
  return {};
}

PointSet periodic2_exact(int op_id, double a) {
  require_supported(op_id);
  require_parameter(a);
  const bool half = a == 0.5;
  switch (op_id) {
    case 4:
      if (half) return {{}, {cycle_curve(true), cycle_curve(false)}};
      return {{vertex(1, 3), vertex(2, 3)}, {}};
    case 28:
      if (half) {
        // Gamma_1 without its midpoint, which is fixed.
        SimplexCurve edge = edge_curve(0);
        edge.label = "Gamma_1 \\ {(0,1/2,1/2)}";
        return {{}, {edge}};
      }
      return {{vertex(1, 3), vertex(2, 3)}, {}};
    default:
      return {};
  }
}

}  // namespace qso
