#include "qso/trajectory.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace qso {
namespace {

// Residuals at or below this are rounding noise; no tail estimate is needed.
constexpr double kResidualFloor = 1e-15;

double tail_estimate(double current, double previous) {
  if (current <= kResidualFloor) return 0.0;
  if (!(previous > 0.0)) return std::numeric_limits<double>::infinity();
  const double rho = current / previous;
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  return current * rho / (1.0 - rho);
}

class Thinning {
 public:
  bool keep(long step) {
    if (step <= 100) return true;
    if (step < next_) return false;
    next_ = static_cast<long>(std::ceil(static_cast<double>(next_) * 1.25));
    return true;
  }

 private:
  long next_ = 125;
};

}  // namespace

std::vector<SimplexPointd> iterate(const HeredityTensord& t, const SimplexPointd& x0, long n) {
  if (n < 0) throw std::invalid_argument("iteration count must be >= 0");
  std::vector<SimplexPointd> orbit{x0};
  orbit.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i < n; ++i) orbit.push_back(apply(t, orbit.back()));
  return orbit;
}

std::string to_string(OutcomeKind kind) {
  switch (kind) {
    case OutcomeKind::fixed_point: return "fixed_point";
    case OutcomeKind::two_cycle: return "two_cycle";
    case OutcomeKind::undecided: return "undecided";
  }
  return "undecided";
}

TrajectoryReport omega_limit(const HeredityTensord& t, const SimplexPointd& x0,
                             const OmegaOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (options.max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");

  TrajectoryReport report{x0, {{0, x0}}, 0, {}, 0.0, 0.0};
  Thinning thinning;

  // Window of the last three iterates and the recent residual histories.
  std::deque<SimplexPointd> window{x0};
  double step_prev = 0.0;
  std::deque<double> period2_history;

  for (long n = 1; n <= options.max_iter; ++n) {
    window.push_back(apply(t, window.back()));
    if (window.size() > 3) window.pop_front();
    const SimplexPointd& cur = window.back();
    const SimplexPointd& prev = window[window.size() - 2];

    const double step = l1_distance(cur, prev);
    const double step_tail = tail_estimate(step, step_prev);
    step_prev = step;

    double period2 = std::numeric_limits<double>::infinity();
    double period2_tail = std::numeric_limits<double>::infinity();
    if (window.size() == 3) {
      period2 = l1_distance(cur, window.front());
      const double two_back = period2_history.size() >= 2 ? period2_history[period2_history.size() - 2] : 0.0;
      period2_tail = tail_estimate(period2, two_back);
      period2_history.push_back(period2);
      if (period2_history.size() > 2) period2_history.pop_front();
    }

    report.steps = n;
    report.step_residual = step;
    report.period2_residual = std::isfinite(period2) ? period2 : 0.0;
    if (thinning.keep(n)) report.iterates.push_back({n, cur});

    if (step <= options.tol && step_tail <= options.tol) {
      report.outcome = {OutcomeKind::fixed_point, {cur}};
      break;
    }
    if (period2 <= options.tol && step > 10.0 * options.tol && period2_tail <= options.tol) {
      report.outcome = {OutcomeKind::two_cycle, {prev, cur}};
      break;
    }
  }
  if (report.iterates.back().step != report.steps) report.iterates.push_back({report.steps, window.back()});
  return report;
}

std::string to_string(const Region& region) {
  switch (region.kind) {
    case RegionKind::vertex: return "vertex e" + std::to_string(region.index + 1);
    case RegionKind::edge: return "edge Gamma_" + std::to_string(region.index + 1);
    case RegionKind::line_13: return "line l_13";
    case RegionKind::lower_half: return "S_{1<=3} (strict)";
    case RegionKind::upper_half: return "S_{1>=3} (strict)";
  }
  return "unknown";
}

Region region_classify(const SimplexPointd& x) {
  if (x.dim() != 3) throw std::invalid_argument("region classification needs m = 3");
  const IndexSet s = support(x);
  if (s.size() == 1) return {RegionKind::vertex, s.members().front()};
  for (int i = 0; i < 3; ++i)
    if (!s.contains(i)) return {RegionKind::edge, i};
  const double gap = x[0] - x[2];
  if (std::abs(gap) <= kZeroThreshold) return {RegionKind::line_13};
  return {gap < 0.0 ? RegionKind::lower_half : RegionKind::upper_half};
}

}  // namespace qso
