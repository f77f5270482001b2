#include "qchrom/harness.hpp"

#include "qchrom/format.hpp"
#include "qchrom/gpartitions.hpp"
#include "qchrom/graph_enum.hpp"
#include "qchrom/graph_io.hpp"
#include "qchrom/leading.hpp"
#include "qchrom/order_polytope.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qcombinatorics.hpp"
#include "qchrom/trees.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <random>
#include <stdexcept>
#include <thread>

namespace qchrom {

int default_jobs() {
  if (const char* env = std::getenv("QCHROM_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

int resolved_jobs(const RunConfig& config) { return config.jobs > 0 ? config.jobs : default_jobs(); }

TreeScanReport scan_trees(int d, const RunConfig& config) {
  if (d < 2 || d > 12) throw std::invalid_argument("tree scan supports 2 <= d <= 12");
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const auto trees = generate_trees(d);
  const int count = static_cast<int>(trees.size());
  const int jobs = std::max(1, std::min(resolved_jobs(config), count));

  struct Record {
    bool done = false;
    QPoly fingerprint;
    bool audited = false;
    bool audit_ok = true;
  };
  std::vector<Record> records(count);
  std::atomic<bool> stop{false};
  std::vector<std::exception_ptr> errors(jobs);

  auto worker = [&](int w) {
    try {
      for (int i = w; i < count; i += jobs) {
        if (stop.load()) return;
        if (config.time_limit > 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > config.time_limit) {
          stop = true;
          return;
        }
        Record& r = records[i];
        r.fingerprint = normalized_fingerprint(trees[i]);
        if (i % 20 == 0) {
          r.audited = true;
          r.audit_ok = fingerprint_from_leading(leading_coeff_tree(trees[i], WeightVector::ones(d)), d) == r.fingerprint;
        }
        r.done = true;
      }
    } catch (...) {
      errors[w] = std::current_exception();
      stop = true;
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  TreeScanReport report;
  report.d = d;
  report.tree_count = count;
  report.jobs = jobs;
  for (auto& e : errors) {
    if (!e) continue;
    try {
      std::rethrow_exception(e);
    } catch (const BudgetExceeded& ex) {
      report.aborted = true;
      report.abort_reason = ex.what();
    }
  }
  if (stop && !report.aborted) {
    report.aborted = true;
    report.abort_reason = "time limit reached";
  }
  std::map<QPoly, std::vector<std::string>> by_fingerprint;
  for (int i = 0; i < count; ++i) {
    if (!records[i].done) continue;
    const std::string code = tree_canonical_form(trees[i]);
    report.fingerprints.emplace(code, records[i].fingerprint);
    by_fingerprint[records[i].fingerprint].push_back(code);
    if (records[i].audited) {
      ++report.audited;
      report.audit_failures += !records[i].audit_ok;
    }
  }
  for (auto& [fp, codes] : by_fingerprint) {
    std::sort(codes.begin(), codes.end());
    for (std::size_t k = 1; k < codes.size(); ++k) report.collisions.push_back({codes[0], codes[k], fp});
  }
  std::sort(report.collisions.begin(), report.collisions.end(),
            [](const auto& a, const auto& b) { return std::tie(a.first, a.second) < std::tie(b.first, b.second); });
  report.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

nlohmann::json to_json(const TreeScanReport& report, bool timing) {
  nlohmann::json j;
  j["schema"] = "qchrom/1";
  j["kind"] = "tree_scan";
  j["d"] = report.d;
  j["tree_count"] = report.tree_count;
  auto fps = nlohmann::json::array();
  for (const auto& [code, fp] : report.fingerprints)
    fps.push_back({{"tree", code}, {"edges", to_json(tree_from_canonical_form(code))["edges"]},
                   {"fingerprint", to_string(fp)}, {"coefficients", to_json(fp)}});
  j["fingerprints"] = fps;
  auto cols = nlohmann::json::array();
  for (const auto& c : report.collisions)
    cols.push_back({{"first", c.first}, {"second", c.second}, {"fingerprint", to_string(c.fingerprint)}});
  j["collisions"] = cols;
  j["audit"] = {{"audited", report.audited}, {"failures", report.audit_failures}};
  j["aborted"] = report.aborted;
  if (report.aborted) j["abort_reason"] = report.abort_reason;
  if (timing) j["timing"] = {{"seconds", report.seconds}, {"jobs", report.jobs}};
  return j;
}

MethodTable MethodTable::standard() {
  MethodTable m;
  m.enumerate = [](const Graph& g, const WeightVector& w, int n) { return chi_enumerate(g, w, n); };
  m.interpolate = [](const Graph& g, const WeightVector& w) { return chi_tilde(g, w).tilde; };
  m.mobius = [](const Graph& g, const WeightVector& w) { return chi_tilde_mobius(g, w); };
  m.delcon = [](const Graph& g, const WeightVector& w, int n) { return chi_delcon(g, w, n); };
  m.orientations = [](const Graph& g, int n) { return chi_orientations_formula(g, n); };
  m.loebl = [](const Graph& g, int n) { return chi_loebl(g, n); };
  return m;
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

VerifyScope VerifyScope::of(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::smoke:
      return {3, 4, 0, 7, 3, 4};
    case VerifyLevel::quick:
      return {4, 6, 5, 6, 4, 6};
    case VerifyLevel::full:
      return {6, 8, 50, 7, 5, 8};
  }
  return {};
}

VerifyLevel parse_verify_level(const std::string& name) {
  if (name == "smoke") return VerifyLevel::smoke;
  if (name == "quick") return VerifyLevel::quick;
  if (name == "full") return VerifyLevel::full;
  throw std::invalid_argument("unknown verify level '" + name + "'");
}

std::string describe(const Graph& g) {
  std::string out = "d=" + std::to_string(g.order()) + " edges=";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.edges()[i].u + 1) + "-" + std::to_string(g.edges()[i].v + 1);
  }
  if (g.edges().empty()) out += "none";
  return out;
}

namespace {

// Records the first failure of a check; later ones only count.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  void expect(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.failure = what;
    }
  }
  // Exceptions from a route count as a failure of that instance.
  template <class F>
  void guarded(const std::string& where, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      expect(false, where + ": " + e.what());
    }
  }
  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::string where(const Graph& g, const WeightVector& w, int n = -1) {
  std::string s = describe(g) + " lambda=" + to_csv(w);
  if (n >= 0) s += " n=" + std::to_string(n);
  return s;
}

// Deterministic small weights for a graph.
WeightVector random_weights(int d, std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> pick(1, max_weight);
  std::vector<int> w(d);
  for (int& x : w) x = pick(rng);
  return WeightVector(std::move(w));
}

const int kTreeCounts[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};

bool is_star(const Graph& g) {
  if (!g.is_tree()) return false;
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.neighbors(v)) == g.order() - 1) return true;
  return g.order() <= 2;
}

}  // namespace

VerifyReport verify_suite(VerifyLevel level, const RunConfig& config, const MethodTable& methods) {
  const std::string names[] = {"smoke", "quick", "full"};
  return verify_suite(VerifyScope::of(level), names[static_cast<int>(level)], config, methods);
}

VerifyReport verify_suite(const VerifyScope& scope, const std::string& name, const RunConfig& config,
                          const MethodTable& methods) {
  VerifyReport report;
  report.level = name;
  std::mt19937_64 rng(20240601);

  // Smallest first, so the first failure is a minimal instance.
  std::vector<Graph> graphs;
  for (int d = 1; d <= scope.graphs_up_to; ++d)
    for (auto& g : all_graphs(d)) graphs.push_back(std::move(g));
  std::vector<Graph> trees;
  for (int d = 1; d <= scope.trees_up_to; ++d)
    for (auto& t : generate_trees(d)) trees.push_back(std::move(t));
  std::vector<Graph> agreement = graphs;
  for (const auto& t : trees)
    if (t.order() > scope.graphs_up_to) agreement.push_back(t);
  std::uniform_int_distribution<int> size_pick(2, scope.random_up_to);
  for (int i = 0; i < scope.random_graphs; ++i) agreement.push_back(random_graph(size_pick(rng), 0.5, rng));
  std::stable_sort(agreement.begin(), agreement.end(), [](const Graph& a, const Graph& b) {
    return std::pair{a.order(), a.size()} < std::pair{b.order(), b.size()};
  });

  Check five("five_way_agreement");
  Check collapse("q1_collapse");
  Check structure("interpolant_structure");
  for (const auto& g : agreement) {
    const int d = g.order();
    std::vector<WeightVector> weights{WeightVector::ones(d)};
    if (d <= 6) weights.push_back(random_weights(d, rng, 2));
    for (const auto& lambda : weights) {
      const bool unit = lambda.is_unit();
      five.guarded(where(g, lambda), [&] {
        const XPoly tilde = methods.interpolate(g, lambda);
        five.expect(tilde == methods.mobius(g, lambda), where(g, lambda) + ": interpolation != flat formula");
        for (int n = 0; n <= scope.max_n; ++n) {
          const QPoly truth = methods.enumerate(g, lambda, n);
          const std::string at = where(g, lambda, n);
          five.expect(substitute_x(tilde, q_int(n)) == QRat(truth), at + ": interpolant != enumeration");
          five.expect(methods.delcon(g, lambda, n) == truth, at + ": deletion-contraction != enumeration");
          if (!unit) continue;
          five.expect(methods.orientations(g, n) == truth, at + ": orientation formula != enumeration");
          if ((std::uint64_t{1} << g.size()) <= config.budget.max_edge_subsets)
            five.expect(methods.loebl(g, n).shifted(d) == truth, at + ": q^d * inclusion-exclusion != enumeration");
        }
        const auto classical = chromatic_polynomial(g);
        const auto at_one = eval_q(tilde, 1);
        std::vector<Rational> expected(classical.begin(), classical.end());
        while (!expected.empty() && expected.back() == 0) expected.pop_back();
        collapse.expect(at_one == expected, where(g, lambda) + ": chi~ at q = 1 != chromatic polynomial");
        structure.expect(tilde.degree() == lambda.total(), where(g, lambda) + ": degree != total weight");
        structure.expect(tilde.coeff(0).is_zero(), where(g, lambda) + ": nonzero constant term");
        const QRat fact(q_factorial(lambda.total()));
        for (const auto& c : tilde.coeffs())
          structure.expect((c * fact).is_polynomial(), where(g, lambda) + ": [Lambda]! * coefficient not polynomial");
      });
    }
  }
  report.checks.push_back(five.result());
  report.checks.push_back(collapse.result());
  report.checks.push_back(structure.result());

  Check recip("reciprocity");
  recip.guarded("P2", [&] {
    recip.expect(reciprocity_lhs(path_graph(2), WeightVector::ones(2), 2) == QRat(QPoly{0, 0, 2, 2, 2}),
                 "P2 n=2: lhs != 2q^4 + 2q^3 + 2q^2");
  });
  for (const auto& g : graphs) {
    if (g.order() > 6) continue;
    std::vector<WeightVector> weights{WeightVector::ones(g.order())};
    for (int i = 0; i < 3; ++i) weights.push_back(random_weights(g.order(), rng, 3));
    for (const auto& lambda : weights)
      recip.guarded(where(g, lambda), [&] {
        const auto chi = chi_tilde(g, lambda, config.budget);
        for (int n = 1; n <= std::min(3, scope.max_n); ++n)
          recip.expect(reciprocity_lhs(chi, n) == QRat(reciprocity_rhs(g, lambda, n, config.budget)),
                       where(g, lambda, n) + ": reciprocity lhs != rhs");
      });
  }
  report.checks.push_back(recip.result());

  Check beta("beta_expansion");
  std::vector<Graph> beta_graphs = graphs;
  for (const auto& t : trees)
    if (t.order() > scope.graphs_up_to && t.order() <= 7) beta_graphs.push_back(t);
  for (const auto& g : beta_graphs)
    beta.guarded(describe(g), [&] {
      const int d = g.order();
      const auto b = beta_expansion(g);
      const int xi = chromatic_number(g);
      beta.expect(static_cast<int>(b.betas.size()) == d - xi + 1, describe(g) + ": top index != d - chromatic number");
      for (const auto& p : b.betas) beta.expect(p.has_nonnegative_coeffs(), describe(g) + ": negative coefficient");
      const Integer orientations(static_cast<unsigned long>(count_acyclic_orientations(g)));
      beta.expect(b.betas.front() == QPoly::monomial(d * (d + 1) / 2, orientations), describe(g) + ": beta_0");
      beta.expect(b.betas.back() == chi_enumerate(g, WeightVector::ones(d), xi, config.budget),
                  describe(g) + ": last beta != colourings with chromatic-number colours");
    });
  report.checks.push_back(beta.result());

  Check lead("leading_coefficients");
  for (const auto& t : trees)
    lead.guarded(describe(t), [&] {
      const auto one = WeightVector::ones(t.order());
      const QRat direct = methods.interpolate(t, one).coeff(t.order());
      lead.expect(leading_coeff_tree(t, one) == direct, describe(t) + ": tree formula");
      lead.expect(leading_coeff_orientations(t) == direct, describe(t) + ": orientation formula");
      lead.expect(leading_coeff_delcon(t, one) == direct, describe(t) + ": leaf recursion");
      lead.expect(leading_coeff_via_gpartitions(t) == direct, describe(t) + ": G-partition bridge");
      lead.expect(normalized_fingerprint(t).has_nonnegative_coeffs(), describe(t) + ": fingerprint sign");
    });
  for (const auto& g : graphs)
    lead.guarded(describe(g), [&] {
      const QRat direct = leading_coeff(g, WeightVector::ones(g.order()));
      lead.expect(leading_coeff_orientations(g) == direct, describe(g) + ": orientation formula");
      lead.expect(leading_coeff_via_gpartitions(g) == direct, describe(g) + ": G-partition bridge");
    });
  report.checks.push_back(lead.result());

  Check gp("gpartitions");
  for (const auto& g : graphs)
    gp.guarded(describe(g), [&] {
      gp.expect(stable_bridge_check(g), describe(g) + ": P_G != stable evaluation");
      const auto series = gpartition_series(g);
      for (int n = 0; n <= std::min(20, GPartitionSeries::kPrefixLength); ++n)
        gp.expect(series.prefix[n] == count_gpartitions(g, n, config.budget),
                  describe(g) + " n=" + std::to_string(n) + ": series coefficient != brute force");
    });
  for (const auto& t : trees)
    if (t.order() >= 3)
      gp.guarded(describe(t), [&] {
        const bool unique = count_gpartitions(t, t.order() + 1, config.budget) == 1;
        gp.expect(unique == is_star(t), describe(t) + ": p_G(d+1) = 1 should single out the star");
      });
  report.checks.push_back(gp.result());

  Check poly("order_polytopes");
  for (const auto& g : graphs) {
    if (g.order() > 5) continue;
    poly.guarded(describe(g), [&] {
      const auto orientations = acyclic_orientations(g);
      for (int n = 0; n <= 3; ++n) {
        QPoly sum;
        for (const auto& rho : orientations) {
          const Poset pi = poset_of(rho);
          sum += order_polytope_ehr(pi, n + 1, true, std::nullopt, config.budget);
          poly.expect(order_polytope_ehr(pi, n, false, std::nullopt, config.budget) == kim_stanton_ehr(pi, n),
                      describe(g) + ": closed count != descent formula");
        }
        poly.expect(sum == chi_enumerate(g, WeightVector::ones(g.order()), n, config.budget),
                    describe(g) + " n=" + std::to_string(n) + ": open polytope sum != colourings");
      }
    });
  }
  report.checks.push_back(poly.result());

  Check scan("tree_scan");
  for (int d = 2; d <= scope.scan_up_to; ++d)
    scan.guarded("d=" + std::to_string(d), [&] {
      const auto r = scan_trees(d, config);
      const std::string at = "d=" + std::to_string(d);
      scan.expect(!r.aborted, at + ": aborted (" + r.abort_reason + ")");
      scan.expect(r.tree_count == kTreeCounts[d], at + ": wrong number of trees");
      scan.expect(r.collisions.empty(), at + ": fingerprint collision");
      scan.expect(r.audit_failures == 0, at + ": audit mismatch");
    });
  report.checks.push_back(scan.result());
  return report;
}

nlohmann::json to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["schema"] = "qchrom/1";
  j["kind"] = "verify";
  j["level"] = report.level;
  j["passed"] = report.passed();
  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json item{{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}};
    if (!c.passed) item["failure"] = c.failure;
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j;
}

}  // namespace qchrom
