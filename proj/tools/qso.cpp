// qso: catalog, classification, simulation and theorem checks for quadratic
// stochastic operators on the 2-simplex.
//
// Exit codes: 0 decided / pass, 1 usage or input error, 2 undecided orbit or
// failed verification.

#include "qso/qso.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNegative = 2;

void emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    qso::write_text_file(out, text);
}

struct SimulateArgs {
  std::optional<int> op;
  std::optional<double> a;
  std::string tensor;
  std::vector<double> x0;
  std::optional<std::uint64_t> seed;
  int count = 1;
  std::optional<double> tol;
  std::optional<long> max_iter;
  std::string out;
  std::string format = "json";
};

int run_simulate(const SimulateArgs& args) {
  const bool from_catalog = args.op.has_value();
  if (from_catalog == !args.tensor.empty())
    throw CLI::ValidationError("simulate", "give exactly one of --op (with --a) or --tensor");
  if (from_catalog && !args.a) throw CLI::ValidationError("simulate", "--op needs --a");
  if (!from_catalog && args.a) throw CLI::ValidationError("simulate", "--a only applies with --op");
  if (args.x0.empty() == !args.seed.has_value())
    throw CLI::ValidationError("simulate", "give exactly one of --x0 or --seed");

  const qso::HeredityTensord t =
      from_catalog ? qso::catalog_operator(*args.op, *args.a) : qso::read_tensor_file(args.tensor);

  qso::OmegaOptions options = from_catalog ? qso::default_omega_options(*args.op, *args.a) : qso::OmegaOptions{};
  if (args.tol) options.tol = *args.tol;
  if (args.max_iter) options.max_iter = *args.max_iter;
  if (!(options.tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
  if (options.max_iter < 1) throw CLI::ValidationError("--max-iter", "must be >= 1");

  std::vector<qso::SimplexPointd> starts;
  if (!args.x0.empty()) {
    if (static_cast<int>(args.x0.size()) != t.dim())
      throw CLI::ValidationError("--x0", "needs " + std::to_string(t.dim()) + " coordinates");
    starts.emplace_back(Eigen::Map<const Eigen::VectorXd>(args.x0.data(), t.dim()));
  } else {
    starts = qso::sample(t.dim(), *args.seed, args.count);
  }
  if (args.format == "csv" && starts.size() != 1)
    throw CLI::ValidationError("--format", "csv output holds a single trajectory; use --count 1");

  std::vector<qso::TrajectoryReport> reports;
  bool all_decided = true;
  for (const auto& x0 : starts) {
    reports.push_back(qso::omega_limit(t, x0, options));
    if (reports.back().outcome.kind == qso::OutcomeKind::undecided) all_decided = false;
  }

  if (args.format == "csv") {
    emit(qso::trajectory_csv(reports.front()), args.out);
  } else {
    json source = from_catalog ? json{{"op", *args.op}, {"a", *args.a}} : json{{"tensor", args.tensor}};
    json settings{{"tol", options.tol}, {"max_iter", options.max_iter}};
    json doc;
    if (reports.size() == 1 && !args.x0.empty()) {
      doc = qso::trajectory_to_json(reports.front());
    } else {
      json runs = json::array();
      for (const auto& r : reports) runs.push_back(qso::trajectory_to_json(r));
      doc = {{"schema_version", qso::kSchemaVersion}, {"seed", *args.seed}, {"runs", runs}};
    }
    doc["source"] = source;
    doc["settings"] = settings;
    emit(qso::dump(doc), args.out);
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    std::cerr << "run " << i + 1 << ": " << qso::to_string(r.outcome.kind) << " after " << r.steps << " steps\n";
  }
  return all_decided ? kExitOk : kExitNegative;
}

struct VerifyArgs {
  int op = 0;
  std::vector<double> a_values;
  int seeds = 100;
  std::uint64_t seed = 1;
  std::optional<double> tol;
  std::optional<long> max_iter;
  std::string out;
};

int run_verify(const VerifyArgs& args) {
  if (!qso::has_closed_form(args.op)) {
    std::cerr << "error: no theorem for V_" << args.op << " (supported: 4, 13, 25, 28)\n";
    return kExitInput;
  }
  qso::VerifyOptions options;
  options.seeds = args.seeds;
  options.base_seed = args.seed;
  options.tol = args.tol;
  options.max_iter = args.max_iter;
  const qso::VerificationReport report = qso::verify_theorem(args.op, args.a_values, options);
  emit(qso::dump(qso::verification_to_json(report)), args.out);
  std::cerr << "V_" << args.op << ": " << report.passed() << "/" << report.results.size() << " points pass\n";
  return report.all_passed() ? kExitOk : kExitNegative;
}

int run_inspect(const std::string& path) {
  const qso::HeredityTensord t = qso::read_tensor_file(path);
  const qso::StructuralClass s = qso::classify_structure(t);
  json doc{{"schema_version", qso::kSchemaVersion},
           {"m", t.dim()},
           {"valid", true},
           {"polynomial", qso::render_polynomial(t)},
           {"structure", {{"kind", qso::to_string(s.kind)}, {"ell", s.ell}, {"tau", s.tau.cycle_notation()}}}};
  if (t.dim() == 3) {
    json xi = json::array();
    const auto partitions = qso::standard_partitions();
    for (std::size_t i = 0; i < partitions.size(); ++i)
      xi.push_back({{"partition", "xi" + std::to_string(i + 1)}, {"pass", qso::xi_s_check(t, partitions[i]).pass()}});
    doc["xi_checks"] = xi;
  }
  std::cout << qso::dump(doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quadratic stochastic operators on the simplex"};
  app.require_subcommand(1);

  double catalog_a = 0.3;
  std::string catalog_out;
  auto* catalog = app.add_subcommand("catalog", "List the 36 catalog operators with structural tags");
  catalog->add_option("--a", catalog_a, "Parameter a")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  catalog->add_option("--out", catalog_out, "Output path (default stdout)");

  double classify_a = 0.0;
  std::string classify_out, classify_matching = "family";
  auto* classify = app.add_subcommand("classify", "Conjugacy classes at a, compared with the reference table");
  classify->add_option("--a", classify_a, "Parameter a")->required()->check(CLI::Range(0.0, 1.0));
  classify->add_option("--matching", classify_matching, "family (a or 1-a) or same (equal a only)")
      ->check(CLI::IsMember({"family", "same"}))
      ->capture_default_str();
  classify->add_option("--out", classify_out, "Output path (default stdout)");

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Iterate an operator until its omega-limit is decided");
  simulate->add_option("--op", sim.op, "Catalog id 1..36")->check(CLI::Range(1, qso::kCatalogSize));
  simulate->add_option("--a", sim.a, "Parameter a")->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--tensor", sim.tensor, "Tensor JSON file {\"m\", \"P\"}");
  simulate->add_option("--x0", sim.x0, "Initial point, comma separated")->delimiter(',');
  simulate->add_option("--seed", sim.seed, "Seed for sampled initial points");
  simulate->add_option("--count", sim.count, "Number of sampled initial points")->check(CLI::PositiveNumber);
  simulate->add_option("--tol", sim.tol, "Convergence tolerance");
  simulate->add_option("--max-iter", sim.max_iter, "Iteration limit");
  simulate->add_option("--out", sim.out, "Output path (default stdout)");
  simulate->add_option("--format", sim.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check sampled orbits against the predicted omega-limits");
  verify->add_option("--op", ver.op, "Catalog id (4, 13, 25 or 28)")->required();
  verify->add_option("--a", ver.a_values, "Parameter values, comma separated")->required()->delimiter(',');
  verify->add_option("--seeds", ver.seeds, "Initial points per case")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--seed", ver.seed, "Base seed")->capture_default_str();
  verify->add_option("--tol", ver.tol, "Convergence tolerance override");
  verify->add_option("--max-iter", ver.max_iter, "Iteration limit override");
  verify->add_option("--out", ver.out, "Output path (default stdout)");

  int tensor_op = 0;
  double tensor_a = 0.0;
  std::string tensor_out;
  auto* tensor = app.add_subcommand("tensor", "Write a catalog operator as a tensor file");
  tensor->add_option("--op", tensor_op, "Catalog id 1..36")->required()->check(CLI::Range(1, qso::kCatalogSize));
  tensor->add_option("--a", tensor_a, "Parameter a")->required()->check(CLI::Range(0.0, 1.0));
  tensor->add_option("--out", tensor_out, "Output path (default stdout)");

  std::string inspect_path;
  auto* inspect = app.add_subcommand("inspect", "Validate a tensor file and report its structure");
  inspect->add_option("--tensor", inspect_path, "Tensor JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (catalog->parsed()) {
      emit(qso::dump(qso::catalog_to_json(catalog_a)), catalog_out);
      return kExitOk;
    }
    if (classify->parsed()) {
      const auto matching = classify_matching == "same" ? qso::ParameterMatching::same_parameter
                                                        : qso::ParameterMatching::reflected_parameter;
      const auto classes = qso::classify_catalog(classify_a, matching);
      const json doc = qso::classes_to_json(classify_a, classes);
      emit(qso::dump(doc), classify_out);
      std::cerr << classes.size() << " classes: " << doc["comparison"].get<std::string>() << "\n";
      return kExitOk;
    }
    if (simulate->parsed()) return run_simulate(sim);
    if (verify->parsed()) return run_verify(ver);
    if (tensor->parsed()) {
      emit(qso::dump(qso::tensor_to_json(qso::catalog_operator(tensor_op, tensor_a))), tensor_out);
      return kExitOk;
    }
    if (inspect->parsed()) return run_inspect(inspect_path);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
