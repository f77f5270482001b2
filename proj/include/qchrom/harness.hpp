#pragma once

#include "qchrom/budget.hpp"
#include "qchrom/chromatic.hpp"
#include "qchrom/graph.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace qchrom {

/// Settings shared by the CLI, the tree scan and the verification suites.
struct RunConfig {
  Budget budget;
  /// Worker threads; 0 means "ask default_jobs()".
  int jobs = 0;
  std::string format = "text";
  /// Series coefficients reported by the G-partition commands.
  int truncation = 30;
  /// Cooperative wall-clock limit for scans in seconds; 0 disables it.
  double time_limit = 0;
  /// Report timings in JSON output (off by default so output is reproducible).
  bool timing = false;
};

/// QCHROM_JOBS if set to a positive integer, else 1.
int default_jobs();
int resolved_jobs(const RunConfig& config);

struct FingerprintCollision {
  std::string first;
  std::string second;
  QPoly fingerprint;
};

struct TreeScanReport {
  int d = 0;
  int tree_count = 0;
  /// Canonical form -> ([d]_q! / q^d) * leading coefficient.
  std::map<std::string, QPoly> fingerprints;
  std::vector<FingerprintCollision> collisions;
  /// Trees recomputed through the tree closed form, and how many disagreed.
  int audited = 0;
  int audit_failures = 0;
  bool aborted = false;
  std::string abort_reason;
  double seconds = 0;
  int jobs = 1;
};

/// Fingerprints every tree on d vertices (2 <= d <= 12) from the orientation
/// formula, audits every 20th tree through the tree closed form and lists
/// trees sharing a fingerprint. Trees are statically sharded over the
/// workers; results are merged in canonical order, so the report does not
/// depend on the worker count. If the time limit runs out the report is
/// partial and marked aborted.
TreeScanReport scan_trees(int d, const RunConfig& config = {});

nlohmann::json to_json(const TreeScanReport& report, bool timing = false);

/// The computation routes the suites compare; replaceable to test the suites.
struct MethodTable {
  std::function<QPoly(const Graph&, const WeightVector&, int)> enumerate;
  std::function<XPoly(const Graph&, const WeightVector&)> interpolate;
  std::function<XPoly(const Graph&, const WeightVector&)> mobius;
  std::function<QPoly(const Graph&, const WeightVector&, int)> delcon;
  std::function<QPoly(const Graph&, int)> orientations;
  std::function<QPoly(const Graph&, int)> loebl;

  static MethodTable standard();
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  /// First failing instance (graphs are visited smallest first).
  std::string failure;
};

struct VerifyReport {
  std::string level;
  std::vector<CheckResult> checks;
  bool passed() const;
};

enum class VerifyLevel { smoke, quick, full };

/// Limits used by each level; smoke stays below a second.
struct VerifyScope {
  int graphs_up_to = 3;            ///< every graph, all checks
  int trees_up_to = 4;             ///< agreement, leading coefficients, beta
  int random_graphs = 0;           ///< extra seeded graphs with d <= random_up_to
  int random_up_to = 7;
  int max_n = 3;
  int scan_up_to = 4;
  static VerifyScope of(VerifyLevel level);
};

VerifyLevel parse_verify_level(const std::string& name);

/// Runs five-way agreement, reciprocity, q = 1 collapse, beta checks,
/// leading-coefficient agreement, the G-partition bridges and a tree scan.
/// Failures are reported, never thrown.
VerifyReport verify_suite(VerifyLevel level, const RunConfig& config = {},
                          const MethodTable& methods = MethodTable::standard());
VerifyReport verify_suite(const VerifyScope& scope, const std::string& name, const RunConfig& config = {},
                          const MethodTable& methods = MethodTable::standard());

nlohmann::json to_json(const VerifyReport& report);

/// Text rendering of a graph for failure messages: "d=3 edges=12,23".
std::string describe(const Graph& g);

}  // namespace qchrom
