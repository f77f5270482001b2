// qchrom: command-line front end. Exit codes: 0 success, 1 a check failed,
// 2 bad input (including exhausted budgets).

#include "qchrom/chromatic.hpp"
#include "qchrom/format.hpp"
#include "qchrom/gpartitions.hpp"
#include "qchrom/graph_io.hpp"
#include "qchrom/harness.hpp"
#include "qchrom/leading.hpp"
#include "qchrom/qcombinatorics.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>

using namespace qchrom;
using nlohmann::json;

namespace {

struct BadInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::string graph_file;
  std::string lambda_csv;
  std::string method = "interpolate";
  std::string route = "auto";
  std::optional<int> n;
  int upto = 30;
  int vertices = 0;
  std::string level = "quick";
};

struct Loaded {
  Graph graph;
  WeightVector lambda;
};

Loaded load(const Inputs& in) {
  GraphInput g = read_graph_file(in.graph_file);
  WeightVector lambda = g.lambda.value_or(WeightVector::ones(g.graph.order()));
  if (!in.lambda_csv.empty()) lambda = parse_weights_csv(in.lambda_csv);
  if (lambda.size() != g.graph.order()) throw BadInput("--lambda needs one weight per vertex");
  return {std::move(g.graph), std::move(lambda)};
}

json envelope(const std::string& kind, const Loaded& input) {
  return {{"schema", "qchrom/1"}, {"kind", kind}, {"graph", to_json(input.graph, input.lambda)}};
}

void require_unit(const Loaded& input, const std::string& what) {
  if (!input.lambda.is_unit()) throw BadInput(what + " needs unit weights");
}

int poly(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  const auto& [g, lambda] = input;
  const std::string& m = in.method;
  const bool pointwise = m == "enumerate" || m == "orientations" || m == "loebl" || m == "delcon";
  if (pointwise && !in.n) throw BadInput("--method " + m + " needs --n");
  if (in.n && *in.n < 0) throw BadInput("--n must be nonnegative");
  if ((m == "orientations" || m == "loebl")) require_unit(input, "--method " + m);

  std::optional<XPoly> tilde;
  std::optional<QPoly> value;
  if (m == "interpolate") tilde = chi_tilde(g, lambda, config.budget).tilde;
  else if (m == "mobius") tilde = chi_tilde_mobius(g, lambda, config.budget);
  else if (m == "enumerate") value = chi_enumerate(g, lambda, *in.n, config.budget);
  else if (m == "orientations") value = chi_orientations_formula(g, *in.n);
  else if (m == "loebl") value = chi_loebl(g, *in.n, config.budget).shifted(g.order());
  else if (m == "delcon") value = chi_delcon(g, lambda, *in.n);
  else throw BadInput("unknown method '" + m + "'");
  if (tilde && in.n) {
    const QRat v = substitute_x(*tilde, q_int(*in.n));
    value = v.num();
  }

  if (config.format == "json") {
    json j = envelope("poly", input);
    j["method"] = m;
    if (tilde) j["tilde"] = {{"text", to_string(*tilde)}, {"coefficients", to_json(*tilde)}};
    if (value) j["value"] = {{"n", *in.n}, {"text", to_string(*value)}, {"coefficients", to_json(*value)}};
    std::cout << j.dump(2) << "\n";
  } else if (config.format == "latex") {
    if (tilde) std::cout << to_latex(*tilde) << "\n";
    if (value) std::cout << to_latex(*value) << "\n";
  } else {
    if (tilde) std::cout << "chi~(x) = " << to_string(*tilde) << "\n";
    if (value) std::cout << "chi(q, " << *in.n << ") = " << to_string(*value) << "\n";
  }
  return 0;
}

int leading(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  const auto& [g, lambda] = input;
  std::string route = in.route;
  if (route == "auto") route = g.is_tree() ? "tree" : lambda.is_unit() ? "orientations" : "direct";
  QRat c;
  if (route == "tree") {
    if (!g.is_tree()) throw BadInput("--route tree needs a tree");
    c = leading_coeff_tree(g, lambda);
  } else if (route == "orientations") {
    require_unit(input, "--route orientations");
    c = leading_coeff_orientations(g);
  } else if (route == "gpartition") {
    require_unit(input, "--route gpartition");
    c = leading_coeff_via_gpartitions(g);
  } else if (route == "direct") {
    c = chi_tilde(g, lambda, config.budget).tilde.coeff(lambda.total());
  } else {
    throw BadInput("unknown route '" + in.route + "'");
  }
  std::optional<QPoly> fp;
  if (lambda.is_unit()) fp = fingerprint_from_leading(c, g.order());

  if (config.format == "json") {
    json j = envelope("leading", input);
    j["route"] = route;
    j["leading"] = {{"text", to_string(c)}, {"value", to_json(c)}};
    if (fp) j["fingerprint"] = {{"text", to_string(*fp)}, {"coefficients", to_json(*fp)}};
    std::cout << j.dump(2) << "\n";
  } else if (config.format == "latex") {
    std::cout << to_latex(c) << "\n";
    if (fp) std::cout << to_latex(*fp) << "\n";
  } else {
    std::cout << "leading = " << to_string(c) << "\n";
    if (fp) std::cout << "fingerprint = " << to_string(*fp) << "\n";
  }
  return 0;
}

int beta(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  require_unit(input, "beta");
  const auto b = beta_expansion(input.graph);
  if (config.format == "json") {
    json j = envelope("beta", input);
    auto rows = json::array();
    for (std::size_t k = 0; k < b.betas.size(); ++k)
      rows.push_back({{"j", k}, {"text", to_string(b.betas[k])}, {"coefficients", to_json(b.betas[k])}});
    j["betas"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    for (std::size_t k = 0; k < b.betas.size(); ++k)
      std::cout << "beta_" << k << " = " << (config.format == "latex" ? to_latex(b.betas[k]) : to_string(b.betas[k]))
                << "\n";
  }
  return 0;
}

int reciprocity(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  if (!in.n || *in.n < 1) throw BadInput("reciprocity needs --n >= 1");
  const QRat lhs = reciprocity_lhs(chi_tilde(input.graph, input.lambda, config.budget), *in.n);
  const QPoly rhs = reciprocity_rhs(input.graph, input.lambda, *in.n, config.budget);
  const bool equal = lhs == QRat(rhs);
  if (config.format == "json") {
    json j = envelope("reciprocity", input);
    j["n"] = *in.n;
    j["lhs"] = {{"text", to_string(lhs)}, {"value", to_json(lhs)}};
    j["rhs"] = {{"text", to_string(rhs)}, {"coefficients", to_json(rhs)}};
    j["equal"] = equal;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "lhs = " << to_string(lhs) << "\nrhs = " << to_string(rhs) << "\n"
              << (equal ? "equal" : "NOT equal") << "\n";
  }
  return equal ? 0 : 1;
}

int gpartitions(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  if (in.upto < 0) throw BadInput("--upto must be nonnegative");
  const auto series = gpartition_series(input.graph);
  const auto prefix = series_prefix(series.series, in.upto);
  if (config.format == "json") {
    json j = envelope("gpartitions", input);
    j["series"] = {{"text", to_string(series.series)}, {"value", to_json(series.series)}};
    auto p = json::array();
    for (const auto& c : prefix) p.push_back(c.get_num().get_str());
    j["prefix"] = p;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "P_G(q) = " << (config.format == "latex" ? to_latex(series.series) : to_string(series.series))
              << "\np_G(0.." << in.upto << ") =";
    for (const auto& c : prefix) std::cout << ' ' << c.get_num().get_str();
    std::cout << "\n";
  }
  return 0;
}

int stable(const Inputs& in, const RunConfig& config) {
  const Loaded input = load(in);
  const QRat value = stable_evaluation(chi_tilde(input.graph, input.lambda, config.budget));
  std::optional<bool> bridge;
  if (input.lambda.is_unit()) bridge = gpartition_series(input.graph).series == value;
  if (config.format == "json") {
    json j = envelope("stable", input);
    j["stable"] = {{"text", to_string(value)}, {"value", to_json(value)}};
    if (bridge) j["equals_gpartition_series"] = *bridge;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "chi~(q, 1/(1-q)) = " << (config.format == "latex" ? to_latex(value) : to_string(value)) << "\n";
    if (bridge) std::cout << (*bridge ? "equals P_G(q)" : "does NOT equal P_G(q)") << "\n";
  }
  return bridge.value_or(true) ? 0 : 1;
}

int trees(const Inputs& in, const RunConfig& config) {
  if (in.vertices < 2 || in.vertices > 12) throw BadInput("--vertices must be in 2..12");
  const auto report = scan_trees(in.vertices, config);
  if (config.format == "json") {
    std::cout << to_json(report, config.timing).dump(2) << "\n";
  } else {
    std::cout << "d = " << report.d << ", trees = " << report.tree_count << ", collisions = "
              << report.collisions.size() << ", audited = " << report.audited
              << ", audit failures = " << report.audit_failures << (report.aborted ? ", ABORTED: " + report.abort_reason : "")
              << "\n";
    for (const auto& [code, fp] : report.fingerprints)
      std::cout << code << "  " << (config.format == "latex" ? to_latex(fp) : to_string(fp)) << "\n";
    for (const auto& c : report.collisions) std::cout << "collision: " << c.first << " " << c.second << "\n";
    if (config.timing) std::cout << "seconds = " << report.seconds << ", jobs = " << report.jobs << "\n";
  }
  return report.collisions.empty() && report.audit_failures == 0 && !report.aborted ? 0 : 1;
}

int verify(const Inputs& in, const RunConfig& config) {
  VerifyLevel level;
  try {
    level = parse_verify_level(in.level);
  } catch (const std::invalid_argument& e) {
    throw BadInput(e.what());
  }
  const auto report = verify_suite(level, config);
  if (config.format == "json") {
    std::cout << to_json(report).dump(2) << "\n";
  } else {
    for (const auto& c : report.checks)
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)"
                << (c.passed ? "" : ": " + c.failure) << "\n";
  }
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-chromatic polynomials, their leading coefficients and G-partitions"};
  app.require_subcommand(1);
  // Global options may also follow the subcommand.
  app.fallthrough();
  RunConfig config;
  Inputs in;
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--jobs", config.jobs, "Worker threads (default: QCHROM_JOBS or 1)")->check(CLI::PositiveNumber);
  app.add_option("--budget-vertices", config.budget.max_vertices, "Largest graph for brute-force oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-colors", config.budget.max_colors, "Largest n for brute-force oracles")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-edge-subsets", config.budget.max_edge_subsets, "Edge subsets, flats and compositions")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget-weight", config.budget.max_total_weight, "Largest total vertex weight")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-limit", config.time_limit, "Seconds before a tree scan stops (0: none)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--timing", config.timing, "Include run times in the output");

  auto graph_options = [&](CLI::App* sub, bool weights) {
    sub->add_option("--graph", in.graph_file, "Graph file (text or JSON)")->required();
    if (weights) sub->add_option("--lambda", in.lambda_csv, "Vertex weights, e.g. 1,2,1");
  };
  auto* poly_cmd = app.add_subcommand("poly", "chi~ in x = [n]_q, or chi(q, n)");
  graph_options(poly_cmd, true);
  poly_cmd->add_option("--method", in.method)
      ->check(CLI::IsMember({"enumerate", "mobius", "orientations", "loebl", "delcon", "interpolate"}));
  poly_cmd->add_option("--n", in.n, "Number of colours");
  auto* leading_cmd = app.add_subcommand("leading", "Leading coefficient and normalized fingerprint");
  graph_options(leading_cmd, true);
  leading_cmd->add_option("--route", in.route)->check(CLI::IsMember({"auto", "tree", "orientations", "gpartition", "direct"}));
  auto* beta_cmd = app.add_subcommand("beta", "Descent expansion coefficients");
  graph_options(beta_cmd, false);
  auto* recip_cmd = app.add_subcommand("reciprocity", "Both sides of the reciprocity identity");
  graph_options(recip_cmd, true);
  recip_cmd->add_option("--n", in.n, "Number of colours")->required();
  auto* gp_cmd = app.add_subcommand("gpartitions", "G-partition counts and generating function");
  graph_options(gp_cmd, false);
  gp_cmd->add_option("--upto", in.upto, "Last coefficient to print");
  auto* stable_cmd = app.add_subcommand("stable", "chi~(q, 1/(1-q)) and its G-partition bridge");
  graph_options(stable_cmd, true);
  auto* trees_cmd = app.add_subcommand("trees", "Fingerprint scan over all trees on d vertices");
  trees_cmd->add_option("--vertices", in.vertices)->required();
  auto* verify_cmd = app.add_subcommand("verify", "Cross-method verification suites");
  verify_cmd->add_option("--level", in.level)->check(CLI::IsMember({"smoke", "quick", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*poly_cmd) return poly(in, config);
    if (*leading_cmd) return leading(in, config);
    if (*beta_cmd) return beta(in, config);
    if (*recip_cmd) return reciprocity(in, config);
    if (*gp_cmd) return gpartitions(in, config);
    if (*stable_cmd) return stable(in, config);
    if (*trees_cmd) return trees(in, config);
    if (*verify_cmd) return verify(in, config);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
