#pragma once

#include "qso/simplex.hpp"
#include "qso/tensor.hpp"

#include <vector>

namespace qso {

/// Numerical fixed points of V, independent of the closed forms.
///
/// Seeds the barycentric grid {k/grid_n} over S^{m-1} and refines each seed by
/// damped iteration x <- x + (V(x) - x)/2. Edges mapped into themselves are also
/// scanned by bisection on the one-dimensional residual, which picks up roots
/// that repel within the edge. Results within 10*refine_tol of each other are
/// merged; only points with |V(x) - x|_1 <= refine_tol are returned, sorted
/// lexicographically.
std::vector<SimplexPointd> fixed_points_numeric(const HeredityTensord& t, int grid_n = 50,
                                                double refine_tol = 1e-12);

/// l1 Hausdorff distance between finite point sets (infinity if exactly one is empty).
double hausdorff_distance(const std::vector<SimplexPointd>& a, const std::vector<SimplexPointd>& b);

}  // namespace qso
