#pragma once

#include "qso/catalog.hpp"
#include "qso/tensor.hpp"
#include "qso/theorems.hpp"
#include "qso/trajectory.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace qso {

inline constexpr int kSchemaVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json to_json(const SimplexPointd& x);
/// Re-parses through the SimplexPoint constructor; throws FormatError on bad shape or values.
SimplexPointd point_from_json(const nlohmann::json& j);

/// {"m": m, "P": [m^3 values, row-major (i, j, k)]}.
nlohmann::json tensor_to_json(const HeredityTensord& t);
/// Throws FormatError on bad shape or on a tensor that fails validate().
HeredityTensord tensor_from_json(const nlohmann::json& j);
HeredityTensord read_tensor_file(const std::string& path);

nlohmann::json trajectory_to_json(const TrajectoryReport& r);
/// Kept iterates as "step,x1,...,xm,u,v" rows (u, v ternary coordinates; m = 3 only).
std::string trajectory_csv(const TrajectoryReport& r);

nlohmann::json verification_to_json(const VerificationReport& r);

/// Per operator: id, case pair, polynomials, structural class, xi_2 check.
nlohmann::json catalog_to_json(double a);
nlohmann::json classes_to_json(double a, const std::vector<ConjugacyClass>& classes);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& j);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qso
