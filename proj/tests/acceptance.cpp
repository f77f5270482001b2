// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "oracles.hpp"
#include "qchrom/chromatic.hpp"
#include "qchrom/format.hpp"
#include "qchrom/gpartitions.hpp"
#include "qchrom/graph_enum.hpp"
#include "qchrom/graph_io.hpp"
#include "qchrom/harness.hpp"
#include "qchrom/leading.hpp"
#include "qchrom/poset.hpp"
#include "qchrom/qcombinatorics.hpp"
#include "qchrom/trees.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace qchrom;

namespace {

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool passed() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }
  std::size_t cases() const { return cases_; }
  std::string note;

 private:
  std::size_t cases_ = 0;
  std::string failure_;
};

struct Criterion {
  int id;
  const char* title;
  std::function<void(Tally&)> run;
};

std::vector<Graph> graphs_up_to(int d_max, bool connected_only = false) {
  std::vector<Graph> out;
  for (int d = 1; d <= d_max; ++d)
    for (auto& g : all_graphs(d, connected_only)) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> trees_up_to(int d_max) {
  std::vector<Graph> out;
  for (int d = 1; d <= d_max; ++d)
    for (auto& t : generate_trees(d)) out.push_back(std::move(t));
  return out;
}

std::vector<Graph> seeded_random_graphs(int count, int d_max) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> size(2, d_max);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(size(rng), 0.5, rng));
  return out;
}

WeightVector seeded_weights(int d, std::mt19937_64& rng, int max_weight) {
  std::uniform_int_distribution<int> pick(1, max_weight);
  std::vector<int> w(d);
  for (int& x : w) x = pick(rng);
  return WeightVector(std::move(w));
}

std::string at(const Graph& g, const WeightVector& w, int n = -1) {
  std::string s = describe(g) + " lambda=" + to_csv(w);
  if (n >= 0) s += " n=" + std::to_string(n);
  return s;
}

Graph one_based(int d, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [u, v] : edges) e.push_back({u - 1, v - 1});
  return Graph(d, e);
}

// The printed table differs only in the x^3 and x^2 denominators, which read
// q^3 + 2q^2 + q + 1 there and make chi(q, 1) nonzero.
void two_vertex_table(Tally& t) {
  const Graph p2 = path_graph(2);
  const XPoly unit = parse_expression("(2*q^2)/(q + 1)*x^2 + (-2*q^2)/(q + 1)*x");
  const XPoly mixed = parse_expression(
      "(q^5 + q^4 - 2*q^3)/(q^3 + 2*q^2 + 2*q + 1)*x^3 + (-q^5 + 2*q^4 + 5*q^3)/(q^3 + 2*q^2 + 2*q + 1)*x^2"
      " + (-3*q^3)/(q^2 + q + 1)*x");
  const XPoly printed = parse_expression(
      "(q^5 + q^4 - 2*q^3)/(q^3 + 2*q^2 + q + 1)*x^3 + (-q^5 + 2*q^4 + 5*q^3)/(q^3 + 2*q^2 + q + 1)*x^2"
      " + (-3*q^3)/(q^2 + q + 1)*x");
  const WeightVector w11({1, 1}), w12({1, 2});
  t.expect(chi_tilde(p2, w11).tilde == unit, "lambda=1,1 row");
  t.expect(chi_tilde(p2, w12).tilde == mixed, "lambda=1,2 row");
  t.expect(chi_tilde_mobius(p2, w12) == mixed, "lambda=1,2 row via flats");
  t.expect(mixed.coeff(1) == printed.coeff(1), "printed x coefficient");
  t.expect(!substitute_x(printed, q_int(1)).is_zero(), "printed row should fail chi(q,1) = 0");
  t.expect(substitute_x(mixed, q_int(1)).is_zero(), "corrected row gives chi(q,1) = 0");
  for (int n = 0; n <= 6; ++n)
    t.expect(substitute_x(mixed, q_int(n)) == QRat(chi_enumerate(p2, w12, n)), at(p2, w12, n));
  t.note = "x^3, x^2 denominators read q^3 + 2q^2 + 2q + 1";
}

const std::pair<Graph, const char*> kSixVertexFingerprints[] = {
    {path_graph(6),
     "2*q^12 + 8*q^11 + 18*q^10 + 36*q^9 + 62*q^8 + 78*q^7 + 102*q^6 + 102*q^5 + 106*q^4 + 80*q^3 + 62*q^2 + 32*q + 32"},
    {one_based(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
     "q^13 + q^12 + 10*q^11 + 16*q^10 + 41*q^9 + 57*q^8 + 81*q^7 + 95*q^6 + 108*q^5 + 100*q^4 + 83*q^3 + 59*q^2 + "
     "36*q + 32"},
    {one_based(6, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}),
     "4*q^12 + 8*q^11 + 18*q^10 + 42*q^9 + 58*q^8 + 78*q^7 + 92*q^6 + 110*q^5 + 98*q^4 + 82*q^3 + 58*q^2 + 40*q + 32"},
    {one_based(6, {{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}}),
     "2*q^12 + 9*q^11 + 20*q^10 + 34*q^9 + 65*q^8 + 77*q^7 + 96*q^6 + 104*q^5 + 107*q^4 + 76*q^3 + 62*q^2 + 36*q + 32"},
    {one_based(6, {{1, 2}, {2, 3}, {2, 4}, {2, 5}, {5, 6}}),
     "q^13 + 3*q^12 + 11*q^11 + 18*q^10 + 39*q^9 + 60*q^8 + 78*q^7 + 87*q^6 + 110*q^5 + 101*q^4 + 79*q^3 + 59*q^2 + "
     "42*q + 32"},
    {star_graph(6),
     "q^14 + 9*q^12 + 9*q^11 + 20*q^10 + 39*q^9 + 60*q^8 + 72*q^7 + 81*q^6 + 112*q^5 + 99*q^4 + 79*q^3 + 58*q^2 + "
     "49*q + 32"},
};

void six_vertex_fingerprints(Tally& t) {
  const auto report = scan_trees(6);
  t.expect(report.tree_count == 6, "six trees");
  for (const auto& [tree, text] : kSixVertexFingerprints) {
    const QPoly expected = parse_qpoly(text);
    const auto it = report.fingerprints.find(tree_canonical_form(tree));
    t.expect(it != report.fingerprints.end() && it->second == expected, describe(tree) + " (scan)");
    t.expect(fingerprint_from_leading(leading_coeff(tree, WeightVector::ones(6)), 6) == expected,
             describe(tree) + " (interpolated leading coefficient)");
  }
}

void four_vertex_betas(Tally& t) {
  const auto path = beta_expansion(path_graph(4));
  const auto star = beta_expansion(star_graph(4));
  const std::vector<QPoly> path_expected{QPoly::monomial(10, 8),
                                         QPoly::monomial(9, 4) + QPoly::monomial(8, 6) + QPoly::monomial(7, 4),
                                         QPoly::monomial(6, 2)};
  const std::vector<QPoly> star_expected{QPoly::monomial(10, 8),
                                         QPoly::monomial(9, 5) + QPoly::monomial(8, 4) + QPoly::monomial(7, 5),
                                         QPoly::monomial(7) + QPoly::monomial(5)};
  t.expect(path.betas == path_expected, "path betas");
  t.expect(star.betas == star_expected, "star betas");
  const auto one = WeightVector::ones(4);
  t.expect(chi_enumerate(path_graph(4), one, 2) == QPoly::monomial(6, 2), "path chi(q,2) = 2q^6");
  t.expect(chi_enumerate(star_graph(4), one, 2) == QPoly::monomial(7) + QPoly::monomial(5), "star chi(q,2)");
  for (int n = 0; n <= 6; ++n) {
    t.expect(evaluate(path, n) == chi_enumerate(path_graph(4), one, n), "path expansion at n=" + std::to_string(n));
    t.expect(evaluate(star, n) == chi_enumerate(star_graph(4), one, n), "star expansion at n=" + std::to_string(n));
  }
}

// The orientation formula counts colours from 1, the closed form from 0, so
// the former carries an extra q^m; the inclusion-exclusion form matches as is.
void complete_graphs(Tally& t) {
  for (int m = 2; m <= 5; ++m) {
    const Graph k = complete_graph(m);
    Integer fact = 1;
    for (int i = 2; i <= m; ++i) fact *= i;
    for (int n = m; n <= 7; ++n) {
      const QPoly closed = q_binomial(n, m).shifted(m * (m - 1) / 2) * fact;
      const std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      t.expect(chi_orientations_formula(k, n) == closed.shifted(m), where + " orientation formula");
      t.expect(chi_loebl(k, n) == closed, where + " inclusion-exclusion");
      if (n <= 6) t.expect(chi_enumerate(k, WeightVector::ones(m), n) == closed.shifted(m), where + " enumeration");
    }
  }
  t.note = "orientation formula carries q^m (colours start at 1)";
}

void five_way(Tally& t) {
  std::vector<Graph> graphs = trees_up_to(8);
  for (auto& g : graphs_up_to(6, true))
    if (!g.is_tree()) graphs.push_back(std::move(g));
  for (auto& g : seeded_random_graphs(50, 7)) graphs.push_back(std::move(g));
  Budget budget;
  budget.max_edge_subsets = std::uint64_t{1} << 22;
  std::mt19937_64 rng(7);
  for (const auto& g : graphs) {
    const int d = g.order();
    std::vector<WeightVector> weights{WeightVector::ones(d)};
    if (d <= 5) weights.push_back(seeded_weights(d, rng, 2));
    for (const auto& lambda : weights) {
      const XPoly tilde = chi_tilde(g, lambda, budget).tilde;
      t.expect(tilde == chi_tilde_mobius(g, lambda, budget), at(g, lambda) + " flats");
      for (int n = 0; n <= 5; ++n) {
        const QPoly truth = chi_enumerate(g, lambda, n, budget);
        t.expect(substitute_x(tilde, q_int(n)) == QRat(truth), at(g, lambda, n) + " interpolation");
        t.expect(chi_delcon(g, lambda, n) == truth, at(g, lambda, n) + " deletion-contraction");
        if (!lambda.is_unit()) continue;
        t.expect(chi_orientations_formula(g, n) == truth, at(g, lambda, n) + " orientations");
        t.expect(chi_loebl(g, n, budget).shifted(d) == truth, at(g, lambda, n) + " inclusion-exclusion");
      }
    }
  }
  t.note = std::to_string(graphs.size()) + " graphs";
}

void reciprocity(Tally& t) {
  const Graph p2 = path_graph(2);
  const QPoly p2_value{0, 0, 2, 2, 2};
  t.expect(reciprocity_lhs(p2, WeightVector::ones(2), 2) == QRat(p2_value), "P2 lhs");
  t.expect(reciprocity_rhs(p2, WeightVector::ones(2), 2) == p2_value, "P2 rhs");
  std::mt19937_64 rng(11);
  for (const auto& g : graphs_up_to(6)) {
    const int d = g.order();
    std::vector<WeightVector> weights{WeightVector::ones(d)};
    for (int i = 0; i < 3; ++i) weights.push_back(seeded_weights(d, rng, 2));
    for (const auto& lambda : weights) {
      const auto chi = chi_tilde(g, lambda);
      for (int n = 0; n <= 3; ++n)
        t.expect(reciprocity_lhs(chi, n) == QRat(reciprocity_rhs(g, lambda, n)), at(g, lambda, n));
    }
  }
}

void q_one_collapse(Tally& t) {
  std::vector<Graph> graphs = graphs_up_to(6);
  for (auto& g : generate_trees(7)) graphs.push_back(std::move(g));
  for (auto& g : generate_trees(8)) graphs.push_back(std::move(g));
  for (auto& g : seeded_random_graphs(50, 7)) graphs.push_back(std::move(g));
  for (const auto& g : graphs) {
    const auto classical = chromatic_polynomial(g);
    std::vector<Rational> expected(classical.begin(), classical.end());
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    const auto one = WeightVector::ones(g.order());
    t.expect(eval_q(chi_tilde(g, one).tilde, 1) == expected, at(g, one));
  }
  t.note = std::to_string(graphs.size()) + " graphs";
}

void leading_coefficients(Tally& t) {
  for (const auto& tree : trees_up_to(8)) {
    const auto one = WeightVector::ones(tree.order());
    const QRat direct = leading_coeff(tree, one);
    t.expect(leading_coeff_tree(tree, one) == direct, describe(tree) + " tree formula");
    t.expect(leading_coeff_orientations(tree) == direct, describe(tree) + " orientations");
    t.expect(leading_coeff_delcon(tree, one) == direct, describe(tree) + " leaf recursion");
    t.expect(leading_coeff_via_gpartitions(tree) == direct, describe(tree) + " G-partitions");
  }
  for (const auto& g : graphs_up_to(6)) t.expect(stable_bridge_check(g), describe(g) + " stable bridge");
  t.note = "G-partition route uses (q^2 - q)^d P_G(1/q)";
}

void tree_scan(Tally& t) {
  std::string timings;
  for (int d = 1; d <= 10; ++d) {
    const auto start = std::chrono::steady_clock::now();
    const auto codes = oracle::prufer_tree_codes(d);
    const double oracle_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const auto trees = generate_trees(d);
    std::set<std::uint64_t> ours;
    for (const auto& tree : trees) ours.insert(oracle::tree_code(tree));
    const std::string where = "d=" + std::to_string(d);
    t.expect(ours == codes && trees.size() == codes.size(), where + " tree list != Pruefer oracle");
    if (d < 2) continue;
    const auto report = scan_trees(d);
    t.expect(!report.aborted, where + " scan aborted: " + report.abort_reason);
    t.expect(report.tree_count == static_cast<int>(codes.size()), where + " scan tree count");
    t.expect(report.collisions.empty(), where + " fingerprint collision");
    t.expect(report.audit_failures == 0, where + " audit failure");
    if (d >= 9) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "%sd=%d: %zu trees, scan %.1f s, oracle %.1f s", timings.empty() ? "" : "; ", d,
                    codes.size(), report.seconds, oracle_s);
      timings += buf;
    }
  }
  t.note = timings;
}

void gpartition_prefixes(Tally& t) {
  for (const auto& g : graphs_up_to(6)) {
    const auto s = gpartition_series(g);
    for (int n = 0; n <= 20; ++n) t.expect(s.prefix[n] == count_gpartitions(g, n), describe(g) + " n=" + std::to_string(n));
  }
  for (int d = 3; d <= 8; ++d) {
    const std::string star = tree_canonical_form(star_graph(d));
    for (const auto& tree : generate_trees(d)) {
      const bool single = count_gpartitions(tree, d + 1) == 1;
      t.expect(single == (tree_canonical_form(tree) == star), describe(tree) + " p(d+1) = 1 iff star");
    }
  }
  t.note = "star check from d=3 (the d=2 star has p(3) = 2)";
}

void properties(Tally& t) {
  // Interpolation round trip on actual interpolants.
  for (const auto& tree : trees_up_to(6)) {
    const auto one = WeightVector::ones(tree.order());
    const XPoly p = chi_tilde(tree, one).tilde;
    std::vector<std::pair<QRat, QRat>> pts;
    for (int i = 0; i <= p.degree(); ++i) pts.emplace_back(q_int(i), substitute_x(p, q_int(i)));
    t.expect(lagrange_interpolate(pts) == p, describe(tree) + " interpolation round trip");
  }
  // q-binomial identities.
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; b <= a; ++b) {
      const std::string where = "[" + std::to_string(a) + "," + std::to_string(b) + "]";
      t.expect(q_binomial(a, b) == q_binomial(a, a - b), where + " symmetry");
      t.expect(q_binomial(a, b) * q_factorial(b) * q_factorial(a - b) == q_factorial(a), where + " factorial form");
      if (a > 0 && b > 0)
        t.expect(q_binomial(a, b) == q_binomial(a - 1, b - 1) + q_binomial(a - 1, b).shifted(b), where + " Pascal");
    }
  // Denominators clear after multiplying by [Lambda]_q!.
  std::mt19937_64 rng(5);
  for (const auto& g : graphs_up_to(5)) {
    for (const auto& lambda : {WeightVector::ones(g.order()), seeded_weights(g.order(), rng, 3)}) {
      const auto chi = chi_tilde(g, lambda);
      const QRat fact(q_factorial(lambda.total()));
      for (const auto& c : chi.tilde.coeffs()) t.expect((c * fact).is_polynomial(), at(g, lambda) + " denominator");
    }
  }
  // Fingerprints are nonnegative polynomials.
  for (const auto& tree : trees_up_to(9)) {
    const QPoly f = normalized_fingerprint(tree);
    t.expect(f.has_nonnegative_coeffs(), describe(tree) + " fingerprint sign");
    if (tree.order() <= 8)
      t.expect(fingerprint_from_leading(leading_coeff_orientations(tree), tree.order()) == f,
               describe(tree) + " fingerprint from leading coefficient");
  }
  // Largest descent count over (orientation, extension) pairs is d minus the
  // chromatic number.
  for (const auto& g : graphs_up_to(7)) {
    const auto table = orientation_extension_table(g);
    int max_des = -1;
    for (int des = 0; des < static_cast<int>(table.size()); ++des)
      if (std::any_of(table[des].begin(), table[des].end(), [](auto c) { return c != 0; })) max_des = des;
    t.expect(max_des == g.order() - chromatic_number(g), describe(g) + " max descents");
  }
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "two-vertex path table", two_vertex_table},
      {2, "six-vertex tree fingerprints", six_vertex_fingerprints},
      {3, "four-vertex descent expansions", four_vertex_betas},
      {4, "complete-graph identity, 2 <= m <= 5, n <= 7", complete_graphs},
      {5, "five-way agreement", five_way},
      {6, "reciprocity", reciprocity},
      {7, "q = 1 collapse", q_one_collapse},
      {8, "leading-coefficient agreement and stable bridge", leading_coefficients},
      {9, "tree scan d <= 10 without collisions", tree_scan},
      {10, "G-partition prefixes and star uniqueness", gpartition_prefixes},
      {11, "property suites", properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = tally.passed();
    failures += !ok;
    std::printf("%s %d %s: %zu cases, %.1f s", ok ? "PASS" : "FAIL", c.id, c.title, tally.cases(), seconds);
    if (!tally.note.empty()) std::printf(" [%s]", tally.note.c_str());
    if (!ok) std::printf(" -- first failure: %s", tally.failure().c_str());
    std::printf("\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
