#pragma once

#include "qso/exact_sets.hpp"
#include "qso/simplex.hpp"
#include "qso/trajectory.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qso {

/// Predicted omega-limit of one orbit: a single fixed point or a 2-cycle.
struct PredictedLimit {
  OutcomeKind kind = OutcomeKind::fixed_point;
  std::vector<SimplexPointd> points;
  std::string branch;  // case label, e.g. "x1 = 0"
};

/// An initial-point regime of a theorem. Initial points are drawn uniformly
/// from `face` (all coordinates outside it zero) and kept if `admits` them.
struct TheoremCase {
  std::string label;
  IndexSet face;
  double x1_lo = 0.0;  // admitted x1 range, bounds included per `lo_open`/`hi_open`
  double x1_hi = 1.0;
  bool lo_open = false;
  bool hi_open = false;

  bool admits(const SimplexPointd& x) const;
};

/// Throws UnsupportedOperator outside {4, 13, 25, 28}; std::domain_error for
/// parameters no theorem covers (V_4 with a < 1/2) and a outside [0, 1].
std::vector<TheoremCase> theorem_cases(int op_id, double a);

PredictedLimit predicted_omega_limit(int op_id, double a, const SimplexPointd& x0);

/// omega_limit settings and acceptance radius used for (op, a) unless overridden.
OmegaOptions default_omega_options(int op_id, double a);
double default_accept_tol(int op_id, double a);

struct VerifyOptions {
  int seeds = 100;  // initial points per case
  std::uint64_t base_seed = 1;
  std::optional<double> tol;
  std::optional<long> max_iter;
  std::optional<double> accept_tol;
};

struct PointResult {
  double a;
  std::string case_label;
  int index;  // within its case
  SimplexPointd x0;
  PredictedLimit predicted;
  OutcomeKind outcome;
  std::vector<SimplexPointd> limit;
  long steps;
  double distance;  // infinity when the outcome kind differs from the prediction
  bool pass;
};

struct VerificationReport {
  int op_id;
  std::vector<double> a_values;
  int seeds;
  std::uint64_t base_seed;
  std::vector<PointResult> results;  // ordered by a, case, index

  int passed() const;
  int failed() const { return static_cast<int>(results.size()) - passed(); }
  bool all_passed() const { return failed() == 0; }
  double worst_distance() const;
};

/// Samples `seeds` points per case (away from Fix and Per_2 by 1e-9), runs
/// omega_limit and compares with the prediction. Deterministic in base_seed.
VerificationReport verify_theorem(int op_id, const std::vector<double>& a_values,
                                  const VerifyOptions& options = {});

/// l1 distance between an observed limit and a prediction of the same kind
/// (2-cycles: the better of the two pairings, worst coordinate pair).
double limit_distance(const std::vector<SimplexPointd>& observed, const std::vector<SimplexPointd>& predicted);

}  // namespace qso
