#include "qchrom/format.hpp"
#include "qchrom/graph_enum.hpp"
#include "qchrom/harness.hpp"
#include "qchrom/leading.hpp"
#include "qchrom/trees.hpp"

#include <doctest.h>

#include <algorithm>
#include <chrono>

using namespace qchrom;

namespace {

Graph tree6(std::initializer_list<std::pair<int, int>> one_based) {
  std::vector<Edge> e;
  for (auto [u, v] : one_based) e.push_back({u - 1, v - 1});
  return Graph(6, e);
}

bool has_triangle(const Graph& g) {
  for (const auto& [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return true;
  return false;
}

}  // namespace

TEST_CASE("six-vertex tree fingerprints") {
  const std::pair<Graph, const char*> expected[] = {
      {path_graph(6),
       "2*q^12 + 8*q^11 + 18*q^10 + 36*q^9 + 62*q^8 + 78*q^7 + 102*q^6 + 102*q^5 + 106*q^4 + 80*q^3 + 62*q^2 + 32*q + 32"},
      {tree6({{1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}}),
       "q^13 + q^12 + 10*q^11 + 16*q^10 + 41*q^9 + 57*q^8 + 81*q^7 + 95*q^6 + 108*q^5 + 100*q^4 + 83*q^3 + 59*q^2 + "
       "36*q + 32"},
      {tree6({{1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}}),
       "4*q^12 + 8*q^11 + 18*q^10 + 42*q^9 + 58*q^8 + 78*q^7 + 92*q^6 + 110*q^5 + 98*q^4 + 82*q^3 + 58*q^2 + 40*q + 32"},
      {tree6({{1, 2}, {2, 3}, {3, 4}, {3, 5}, {5, 6}}),
       "2*q^12 + 9*q^11 + 20*q^10 + 34*q^9 + 65*q^8 + 77*q^7 + 96*q^6 + 104*q^5 + 107*q^4 + 76*q^3 + 62*q^2 + 36*q + 32"},
      {tree6({{1, 2}, {2, 3}, {2, 4}, {2, 5}, {5, 6}}),
       "q^13 + 3*q^12 + 11*q^11 + 18*q^10 + 39*q^9 + 60*q^8 + 78*q^7 + 87*q^6 + 110*q^5 + 101*q^4 + 79*q^3 + 59*q^2 + "
       "42*q + 32"},
      {star_graph(6),
       "q^14 + 9*q^12 + 9*q^11 + 20*q^10 + 39*q^9 + 60*q^8 + 72*q^7 + 81*q^6 + 112*q^5 + 99*q^4 + 79*q^3 + 58*q^2 + "
       "49*q + 32"},
  };
  const auto report = scan_trees(6);
  CHECK(report.tree_count == 6);
  CHECK(report.collisions.empty());
  CHECK(report.audit_failures == 0);
  for (const auto& [tree, text] : expected) {
    const auto it = report.fingerprints.find(tree_canonical_form(tree));
    REQUIRE(it != report.fingerprints.end());
    CHECK(it->second == parse_qpoly(text));
    CHECK(normalized_fingerprint(tree) == parse_qpoly(text));
  }
}

TEST_CASE("scan output does not depend on the worker count") {
  RunConfig one, three;
  one.jobs = 1;
  three.jobs = 3;
  for (int d : {4, 7, 8}) {
    const auto a = scan_trees(d, one);
    const auto b = scan_trees(d, three);
    CHECK(to_json(a).dump() == to_json(b).dump());
    CHECK(b.jobs == std::min(3, a.tree_count));  // never more workers than trees
  }
  CHECK(to_json(scan_trees(4)).at("schema") == "qchrom/1");
}

TEST_CASE("scan honours the time limit and the tree bound") {
  RunConfig config;
  config.time_limit = 1e-9;
  const auto r = scan_trees(10, config);
  CHECK(r.aborted);
  CHECK(!r.abort_reason.empty());
  CHECK_THROWS(scan_trees(13));
}

TEST_CASE("verification levels pass") {
  const auto start = std::chrono::steady_clock::now();
  const auto smoke = verify_suite(VerifyLevel::smoke);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(smoke.passed());
  CHECK(seconds < 1.0);
  const auto quick = verify_suite(VerifyLevel::quick);
  for (const auto& c : quick.checks) {
    INFO(c.name << ": " << c.failure);
    CHECK(c.passed);
    CHECK(c.cases > 0);
  }
  const auto j = to_json(quick);
  CHECK(j.at("level") == "quick");
  CHECK(j.at("passed") == true);
}

TEST_CASE("an injected fault is reported on the smallest graph") {
  MethodTable broken = MethodTable::standard();
  const auto honest = broken.mobius;
  broken.mobius = [honest](const Graph& g, const WeightVector& w) {
    XPoly p = honest(g, w);
    if (!has_triangle(g)) return p;
    std::vector<QRat> c = p.coeffs();
    c[1] = -c[1];
    return XPoly(c);
  };
  const auto report = verify_suite(VerifyLevel::smoke, {}, broken);
  CHECK(!report.passed());
  const auto& five = report.checks.front();
  CHECK(five.name == "five_way_agreement");
  CHECK(!five.passed);
  CHECK(five.failure.rfind("d=3 edges=1-2,1-3,2-3 lambda=1,1,1", 0) == 0);
  for (std::size_t i = 1; i < report.checks.size(); ++i) CHECK(report.checks[i].passed);
}

TEST_CASE("graph descriptions") {
  CHECK(describe(path_graph(3)) == "d=3 edges=1-2,2-3");
  CHECK(describe(empty_graph(2)) == "d=2 edges=none");
  CHECK(parse_verify_level("full") == VerifyLevel::full);
  CHECK_THROWS_AS(parse_verify_level("huge"), std::invalid_argument);
}
