#pragma once

#include "qso/permutation.hpp"
#include "qso/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qso {

/// One of the 36 catalog operators: off-diagonal rows from table I_{case_one},
/// diagonal rows from table II_{case_two}, parameter a.
struct OperatorSpec {
  int case_one = 1;
  int case_two = 1;
  double a = 0.0;

  /// Catalog id n = 6 (case_one - 1) + case_two.
  int id() const { return 6 * (case_one - 1) + case_two; }
  static OperatorSpec from_id(int id, double a);
  void validate() const;
};

inline constexpr int kCatalogSize = 36;

HeredityTensord build_operator(const OperatorSpec& spec);
inline HeredityTensord catalog_operator(int id, double a) {
  return build_operator(OperatorSpec::from_id(id, a));
}

/// Expanded homogeneous polynomial per output, e.g. "x1' = x1^2 + 0.6*x1*x2 + 0.6*x1*x3".
std::vector<std::string> render_polynomial(const HeredityTensord& t);

/// Shortest decimal that round-trips to the same double.
std::string format_number(double value);

enum class ParameterMatching {
  /// V_n(a) ~ V_m(a) only.
  same_parameter,
  /// V_n(a) ~ V_m(a) or V_n(a) ~ V_m(1 - a): conjugacy of the parametric families.
  reflected_parameter,
};

struct ConjugacyLink {
  int from;
  int to;
  Permutation permutation;
  bool reflected;  // matched V_to at 1 - a
};

struct ConjugacyClass {
  std::vector<int> members;  // sorted catalog ids
  std::vector<ConjugacyLink> links;
};

/// Conjugacy classes of the 36 operators at parameter a, ordered by smallest member.
std::vector<ConjugacyClass> classify_catalog(
    double a, ParameterMatching matching = ParameterMatching::reflected_parameter);

/// The reference classes K_1, ..., K_20.
const std::vector<std::vector<int>>& printed_classes();

/// 1-based K label of a reference class with exactly these members.
std::optional<int> printed_label(const std::vector<int>& members);

/// Set equality with the reference classes.
bool matches_printed(const std::vector<ConjugacyClass>& classes);

/// a in {0, 1/2, 1}, where catalog operators coincide or gain symmetry.
bool is_degenerate_parameter(double a);

}  // namespace qso
