#include "qso/io.hpp"

#include "qso/partition.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qso {
namespace {

using nlohmann::json;

std::string format17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json points_to_json(const std::vector<SimplexPointd>& pts) {
  json out = json::array();
  for (const auto& p : pts) out.push_back(to_json(p));
  return out;
}

json structure_to_json(const StructuralClass& c) {
  json j{{"kind", to_string(c.kind)}, {"ell", c.ell}, {"tau", c.tau.cycle_notation()}};
  json idx = json::array();
  for (int i : c.volterra_indices.members()) idx.push_back(i + 1);
  j["volterra_indices"] = idx;
  return j;
}

}  // namespace

json to_json(const SimplexPointd& x) {
  json out = json::array();
  for (int i = 0; i < x.dim(); ++i) out.push_back(x[i]);
  return out;
}

SimplexPointd point_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("point must be a non-empty array of numbers");
  Eigen::VectorXd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw FormatError("point coordinate " + std::to_string(i + 1) + " is not a number");
    v[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  try {
    return SimplexPointd(std::move(v));
  } catch (const SimplexError& e) {
    throw FormatError(e.what());
  }
}

json tensor_to_json(const HeredityTensord& t) { return {{"m", t.dim()}, {"P", t.flat()}}; }

HeredityTensord tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("P"))
    throw FormatError("tensor file needs an object with keys \"m\" and \"P\"");
  if (!j["m"].is_number_integer() || j["m"].get<long>() < 1) throw FormatError("\"m\" must be a positive integer");
  const int m = j["m"].get<int>();
  const json& p = j["P"];
  const std::size_t n = static_cast<std::size_t>(m) * m * m;
  if (!p.is_array() || p.size() != n)
    throw FormatError("\"P\" must be an array of m^3 = " + std::to_string(n) + " numbers");
  std::vector<double> flat;
  flat.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!p[i].is_number()) throw FormatError("\"P\" entry " + std::to_string(i) + " is not a number");
    flat.push_back(p[i].get<double>());
  }
  HeredityTensord t = HeredityTensord::from_flat(m, flat);
  const ValidationReport report = validate(t);
  if (!report.ok()) {
    const TensorViolation& v = report.violations.front();
    std::ostringstream msg;
    msg << "invalid heredity tensor: " << to_string(v.kind);
    if (v.k >= 0)
      msg << " at (i,j,k) = (" << v.i + 1 << "," << v.j + 1 << "," << v.k + 1 << ")";
    else
      msg << " at (i,j) = (" << v.i + 1 << "," << v.j + 1 << ")";
    msg << ", magnitude " << format17(v.magnitude) << " (" << report.violations.size() << " violation(s))";
    throw FormatError(msg.str());
  }
  return t;
}

HeredityTensord read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open tensor file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError("tensor file " + path + " is not valid JSON: " + e.what());
  }
  return tensor_from_json(j);
}

json trajectory_to_json(const TrajectoryReport& r) {
  json iterates = json::array();
  for (const auto& it : r.iterates) iterates.push_back({{"step", it.step}, {"x", to_json(it.x)}});
  return {{"schema_version", kSchemaVersion},
          {"initial", to_json(r.initial)},
          {"steps", r.steps},
          {"outcome", {{"kind", to_string(r.outcome.kind)}, {"points", points_to_json(r.outcome.points)}}},
          {"final_residuals", {{"step", r.step_residual}, {"period2", r.period2_residual}}},
          {"iterates", iterates}};
}

std::string trajectory_csv(const TrajectoryReport& r) {
  if (r.initial.dim() != 3) throw std::invalid_argument("CSV export needs m = 3");
  std::string out = "step,x1,x2,x3,u,v\n";
  for (const auto& it : r.iterates) {
    const double u = it.x[1] + it.x[2] / 2.0;
    const double v = std::sqrt(3.0) / 2.0 * it.x[2];
    out += std::to_string(it.step);
    for (double c : {it.x[0], it.x[1], it.x[2], u, v}) out += "," + format17(c);
    out += "\n";
  }
  return out;
}

json verification_to_json(const VerificationReport& r) {
  json results = json::array();
  for (const auto& p : r.results) {
    results.push_back({{"a", p.a},
                       {"case", p.case_label},
                       {"index", p.index},
                       {"x0", to_json(p.x0)},
                       {"predicted", {{"kind", to_string(p.predicted.kind)}, {"points", points_to_json(p.predicted.points)}}},
                       {"outcome", {{"kind", to_string(p.outcome)}, {"points", points_to_json(p.limit)}}},
                       {"steps", p.steps},
                       {"distance", finite_or_null(p.distance)},
                       {"pass", p.pass}});
  }
  return {{"schema_version", kSchemaVersion},
          {"op", r.op_id},
          {"a_values", r.a_values},
          {"seeds", r.seeds},
          {"base_seed", r.base_seed},
          {"passed", r.passed()},
          {"failed", r.failed()},
          {"worst_distance", finite_or_null(r.worst_distance())},
          {"results", results}};
}

json catalog_to_json(double a) {
  const CoupledIndexPartition xi2 = standard_partitions()[1];
  json ops = json::array();
  for (int id = 1; id <= kCatalogSize; ++id) {
    const OperatorSpec spec = OperatorSpec::from_id(id, a);
    const HeredityTensord t = build_operator(spec);
    const XiCheckReport xi = xi_s_check(t, xi2);
    json violations = json::array();
    for (const auto& v : xi.violations) violations.push_back(v.condition + ": " + v.detail);
    ops.push_back({{"id", id},
                   {"cases", {spec.case_one, spec.case_two}},
                   {"polynomial", render_polynomial(t)},
                   {"structure", structure_to_json(classify_structure(t))},
                   {"xi2", {{"pass", xi.pass()}, {"violations", violations}}},
                   {"tensor_valid", validate(t).ok()}});
  }
  return {{"schema_version", kSchemaVersion}, {"a", a}, {"operators", ops}};
}

json classes_to_json(double a, const std::vector<ConjugacyClass>& classes) {
  json list = json::array();
  for (const auto& c : classes) {
    json links = json::array();
    for (const auto& l : c.links)
      links.push_back({{"from", l.from}, {"to", l.to}, {"permutation", l.permutation.cycle_notation()},
                       {"reflected", l.reflected}});
    const auto label = printed_label(c.members);
    list.push_back({{"members", c.members}, {"printed_label", label ? json("K" + std::to_string(*label)) : json(nullptr)},
                    {"links", links}});
  }
  std::string comparison = is_degenerate_parameter(a) ? "degenerate parameter"
                           : matches_printed(classes)  ? "MATCH"
                                                       : "MISMATCH";
  return {{"schema_version", kSchemaVersion},
          {"a", a},
          {"class_count", classes.size()},
          {"comparison", comparison},
          {"classes", list}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace qso
