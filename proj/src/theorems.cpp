#include "qso/theorems.hpp"

#include "qso/catalog.hpp"
#include "qso/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace qso {
namespace {

constexpr double kExclusionRadius = 1e-9;
constexpr int kMaxRejections = 1000000;

const IndexSet kWhole{std::vector<int>{0, 1, 2}};
const IndexSet kGamma1{std::vector<int>{1, 2}};
const IndexSet kGamma2{std::vector<int>{0, 2}};

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t base, int op_id, double a, std::size_t case_index) {
  std::uint64_t h = splitmix(base);
  h = splitmix(h ^ static_cast<std::uint64_t>(op_id));
  h = splitmix(h ^ std::bit_cast<std::uint64_t>(a));
  return splitmix(h ^ static_cast<std::uint64_t>(case_index));
}

void require_parameter(double a) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::domain_error("parameter a outside [0,1]");
}

void require_supported(int op_id) {
  if (!has_closed_form(op_id))
    throw UnsupportedOperator("no theorem for V_" + std::to_string(op_id) + " (supported: 4, 13, 25, 28)");
}

SimplexPointd e(int i) { return vertex(i, 3); }

PredictedLimit fixed(SimplexPointd p, std::string branch) {
  return {OutcomeKind::fixed_point, {std::move(p)}, std::move(branch)};
}

PredictedLimit cycle(SimplexPointd p, SimplexPointd q, std::string branch) {
  return {OutcomeKind::two_cycle, {std::move(p), std::move(q)}, std::move(branch)};
}

bool is_zero(double v) { return std::abs(v) <= kZeroThreshold; }

}  // namespace

bool TheoremCase::admits(const SimplexPointd& x) const {
  const double x1 = x[0];
  const bool above = lo_open ? x1 > x1_lo : x1 >= x1_lo;
  const bool below = hi_open ? x1 < x1_hi : x1 <= x1_hi;
  return above && below;
}

std::vector<TheoremCase> theorem_cases(int op_id, double a) {
  require_supported(op_id);
  require_parameter(a);
  const bool half = a == 0.5;
  switch (op_id) {
    case 13:
      if (half) return {{"x1 > 1/2", kWhole, 0.5, 1.0, true, false}, {"x1 <= 1/2", kWhole, 0.0, 0.5}};
      if (a < 0.5) return {{"x2 != 0", kWhole}, {"x2 = 0", kGamma2}};
      return {{"x1 != 0", kWhole}, {"x1 = 0", kGamma1}};
    case 4:
      if (half)
        return {{"x1 < (2-sqrt3)/2", kWhole, 0.0, kTwoCycleThreshold, false, true},
                {"x1 >= (2-sqrt3)/2", kWhole, kTwoCycleThreshold, 1.0}};
      if (a < 0.5) throw std::domain_error("V_4 dynamics are only established for a >= 1/2");
      return {{"x1 != 0", kWhole}, {"x1 = 0", kGamma1}};
    case 28:
    case 25:
      if (half) return {{"x1 != 0", kWhole}};
      return {{"x1 != 0", kWhole}, {"x1 = 0", kGamma1}};
  }
  return {};
}

PredictedLimit predicted_omega_limit(int op_id, double a, const SimplexPointd& x0) {
  require_supported(op_id);
  require_parameter(a);
  if (x0.dim() != 3) throw std::invalid_argument("theorem predictions need m = 3");
  const bool half = a == 0.5;
  const double x1 = x0[0];
  switch (op_id) {
    case 13:
      if (half) {
        if (x1 > 0.5) return fixed(SimplexPointd{x1, 0.0, 1.0 - x1}, "x1 > 1/2");
        return fixed(SimplexPointd{x1, std::max(0.0, 1.0 - 2.0 * x1), x1}, "x1 <= 1/2");
      }
      if (a < 0.5) return is_zero(x0[1]) ? fixed(e(2), "x2 = 0") : fixed(e(1), "x2 != 0");
      return is_zero(x1) ? fixed(e(1), "x1 = 0") : fixed(e(0), "x1 != 0");
    case 4:
      if (half) {
        if (x1 < kTwoCycleThreshold) {
          const double p = two_cycle_C_plus(x1), q = two_cycle_C_minus(x1);
          return cycle(SimplexPointd{x1, p, std::max(0.0, 1.0 - x1 - p)},
                       SimplexPointd{x1, q, std::max(0.0, 1.0 - x1 - q)}, "x1 < (2-sqrt3)/2");
        }
        const double b = fixed_curve_B(x1);
        return fixed(SimplexPointd{x1, b, std::max(0.0, 1.0 - x1 - b)}, "x1 >= (2-sqrt3)/2");
      }
      if (a < 0.5) throw std::domain_error("V_4 dynamics are only established for a >= 1/2");
      return is_zero(x1) ? cycle(e(1), e(2), "x1 = 0") : fixed(e(0), "x1 != 0");
    case 28:
      if (is_zero(x1)) {
        if (half) throw std::invalid_argument("Gamma_1 consists of fixed and 2-periodic points at a = 1/2");
        return cycle(e(1), e(2), "x1 = 0");
      }
      return fixed(e(0), "x1 != 0");
    case 25:
      if (is_zero(x1)) {
        if (half) throw std::invalid_argument("Gamma_1 consists of fixed points at a = 1/2");
        return fixed(a < 0.5 ? e(2) : e(1), "x1 = 0");
      }
      return fixed(e(0), "x1 != 0");
  }
  return {};
}

OmegaOptions default_omega_options(int op_id, double a) {
  if (op_id == 25) return {1e-9, 100000};
  return OmegaOptions::for_parameter(a);
}

double default_accept_tol(int op_id, double a) {
  if (op_id == 25) return 1e-6;
  return a == 0.5 ? 1e-4 : 1e-6;
}

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(results.begin(), results.end(), [](const PointResult& r) { return r.pass; }));
}

double VerificationReport::worst_distance() const {
  double worst = 0.0;
  for (const auto& r : results) worst = std::max(worst, r.distance);
  return worst;
}

double limit_distance(const std::vector<SimplexPointd>& observed, const std::vector<SimplexPointd>& predicted) {
  if (observed.size() != predicted.size() || observed.empty()) return std::numeric_limits<double>::infinity();
  if (observed.size() == 1) return l1_distance(observed[0], predicted[0]);
  const double straight = std::max(l1_distance(observed[0], predicted[0]), l1_distance(observed[1], predicted[1]));
  const double crossed = std::max(l1_distance(observed[0], predicted[1]), l1_distance(observed[1], predicted[0]));
  return std::min(straight, crossed);
}

VerificationReport verify_theorem(int op_id, const std::vector<double>& a_values, const VerifyOptions& options) {
  require_supported(op_id);
  if (options.seeds < 1) throw std::invalid_argument("seeds must be >= 1");
  const HeredityTensord probe = catalog_operator(op_id, 0.0);  // validates op_id range
  (void)probe;

  struct Job {
    double a;
    std::size_t case_index;
    TheoremCase tc;
  };
  std::vector<Job> jobs;
  for (double a : a_values) {
    const auto cases = theorem_cases(op_id, a);
    for (std::size_t c = 0; c < cases.size(); ++c) jobs.push_back({a, c, cases[c]});
  }

  auto run = [&](const Job& job) {
    const HeredityTensord t = catalog_operator(op_id, job.a);
    const PointSet fix = fixed_points_exact(op_id, job.a);
    const PointSet per2 = periodic2_exact(op_id, job.a);
    OmegaOptions omega = default_omega_options(op_id, job.a);
    if (options.tol) omega.tol = *options.tol;
    if (options.max_iter) omega.max_iter = *options.max_iter;
    const double accept = options.accept_tol.value_or(default_accept_tol(op_id, job.a));

    SimplexSampler sampler(3, stream_seed(options.base_seed, op_id, job.a, job.case_index));
    std::vector<PointResult> out;
    for (int i = 0; i < options.seeds; ++i) {
      SimplexPointd x0 = sampler.next_on_face(job.tc.face);
      int tries = 0;
      while (!job.tc.admits(x0) || fix.distance(x0) <= kExclusionRadius || per2.distance(x0) <= kExclusionRadius) {
        if (++tries > kMaxRejections) throw std::runtime_error("could not sample case " + job.tc.label);
        x0 = sampler.next_on_face(job.tc.face);
      }
      const PredictedLimit predicted = predicted_omega_limit(op_id, job.a, x0);
      const TrajectoryReport report = omega_limit(t, x0, omega);
      const bool same_kind = report.outcome.kind == predicted.kind;
      const double d = same_kind ? limit_distance(report.outcome.points, predicted.points)
                                 : std::numeric_limits<double>::infinity();
      out.push_back({job.a, job.tc.label, i, x0, predicted, report.outcome.kind, report.outcome.points,
                     report.steps, d, same_kind && d <= accept});
    }
    return out;
  };

  std::vector<std::future<std::vector<PointResult>>> futures;
  for (const auto& job : jobs) futures.push_back(std::async(std::launch::async, run, std::cref(job)));

  VerificationReport report{op_id, a_values, options.seeds, options.base_seed, {}};
  for (auto& f : futures) {
    auto part = f.get();
    report.results.insert(report.results.end(), part.begin(), part.end());
  }
  return report;
}

}  // namespace qso
