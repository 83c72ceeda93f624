#include "qso/fixed_point_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qso {
namespace {

constexpr double kDamping = 0.5;
constexpr long kMaxRefineSteps = 20000;

double residual(const HeredityTensord& t, const Eigen::VectorXd& x) {
  return (evaluate(t, x) - x).cwiseAbs().sum();
}

// All compositions of n into m nonnegative parts, as points k/n.
void grid_points(int m, int n, int pos, int left, Eigen::VectorXd& cur, std::vector<Eigen::VectorXd>& out) {
  if (pos == m - 1) {
    cur[pos] = static_cast<double>(left) / n;
    out.push_back(cur);
    return;
  }
  for (int k = 0; k <= left; ++k) {
    cur[pos] = static_cast<double>(k) / n;
    grid_points(m, n, pos + 1, left - k, cur, out);
  }
}

Eigen::VectorXd refine(const HeredityTensord& t, Eigen::VectorXd x, double target) {
  for (long s = 0; s < kMaxRefineSteps; ++s) {
    const Eigen::VectorXd vx = evaluate(t, x);
    if ((vx - x).cwiseAbs().sum() <= target) break;
    x += kDamping * (vx - x);
    x = SimplexPointd(x).coords();
  }
  return x;
}

Eigen::VectorXd edge_point(int m, int j, int k, double s) {
  Eigen::VectorXd x = Eigen::VectorXd::Zero(m);
  x[j] = s;
  x[k] = 1.0 - s;
  return x;
}

bool edge_invariant(const HeredityTensord& t, int j, int k) {
  for (double s : {0.25, 0.5, 0.75}) {
    const Eigen::VectorXd v = evaluate(t, edge_point(t.dim(), j, k, s));
    for (int i = 0; i < t.dim(); ++i)
      if (i != j && i != k && std::abs(v[i]) > kZeroThreshold) return false;
  }
  return true;
}

// Roots of phi(s) = V(x(s))_j - s on the edge x(s) = s e_j + (1 - s) e_k.
void bisect_edge(const HeredityTensord& t, int j, int k, int segments, std::vector<Eigen::VectorXd>& out) {
  const int m = t.dim();
  auto phi = [&](double s) { return evaluate(t, edge_point(m, j, k, s))[j] - s; };
  for (int i = 0; i < segments; ++i) {
    double lo = static_cast<double>(i) / segments, hi = static_cast<double>(i + 1) / segments;
    double flo = phi(lo), fhi = phi(hi);
    if (flo == 0.0 || fhi == 0.0 || (flo < 0.0) == (fhi < 0.0)) continue;
    for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const double fm = phi(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    out.push_back(edge_point(m, j, k, 0.5 * (lo + hi)));
  }
}

}  // namespace

std::vector<SimplexPointd> fixed_points_numeric(const HeredityTensord& t, int grid_n, double refine_tol) {
  if (grid_n < 10) throw std::invalid_argument("grid_n must be >= 10");
  if (!(refine_tol > 0.0)) throw std::invalid_argument("refine_tol must be positive");
  const int m = t.dim();

  std::vector<Eigen::VectorXd> seeds;
  Eigen::VectorXd cur(m);
  grid_points(m, grid_n, 0, grid_n, cur, seeds);

  std::vector<Eigen::VectorXd> candidates;
  for (const auto& s : seeds) candidates.push_back(refine(t, s, refine_tol / 100.0));
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (edge_invariant(t, j, k)) bisect_edge(t, j, k, grid_n, candidates);

  struct Found {
    Eigen::VectorXd x;
    double r;
  };
  std::vector<Found> found;
  for (const auto& c : candidates) {
    const double r = residual(t, c);
    if (!(r <= refine_tol)) continue;
    auto hit = std::find_if(found.begin(), found.end(), [&](const Found& f) {
      return (f.x - c).cwiseAbs().sum() <= 10.0 * refine_tol;
    });
    if (hit == found.end())
      found.push_back({c, r});
    else if (r < hit->r)
      *hit = {c, r};
  }

  std::vector<SimplexPointd> out;
  for (const auto& f : found) out.emplace_back(f.x);
  std::sort(out.begin(), out.end(), [](const SimplexPointd& p, const SimplexPointd& q) {
    return std::lexicographical_compare(p.coords().begin(), p.coords().end(), q.coords().begin(),
                                        q.coords().end());
  });
  return out;
}

double hausdorff_distance(const std::vector<SimplexPointd>& a, const std::vector<SimplexPointd>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto directed = [](const auto& from, const auto& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, l1_distance(p, q));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace qso
