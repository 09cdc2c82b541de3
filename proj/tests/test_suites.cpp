#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "blocker/suites.hpp"
#include "test_oracles.hpp"

using namespace blocker;

namespace {

// Count connected bipartite graphs on exactly n labeled vertices up to
// isomorphism the slow way: canonicalize over all vertex permutations.
int count_classes_all_perms(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  int np = static_cast<int>(pairs.size());
  std::vector<int> perm(n);
  std::set<uint32_t> classes;
  for (uint32_t gm = 0; gm < (uint32_t{1} << np); ++gm) {
    Graph g(n);
    for (int e = 0; e < np; ++e)
      if ((gm >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
    if (connected_components(g).size() != 1) continue;
    if (!is_bipartite(g)) continue;
    uint32_t best = ~uint32_t{0};
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
      uint32_t mask = 0;
      for (int e = 0; e < np; ++e)
        if ((gm >> e) & 1) {
          int u = perm[pairs[e].first], v = perm[pairs[e].second];
          auto it = std::lower_bound(pairs.begin(), pairs.end(),
                                     make_edge(u, v));
          mask |= uint32_t{1} << (it - pairs.begin());
        }
      best = std::min(best, mask);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("alpha_by_enumeration") {
  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(alpha_by_enumeration(c5) == 2);
  CHECK(alpha_by_enumeration(Graph(6)) == 6);
  CHECK_THROWS_AS(alpha_by_enumeration(Graph(24)), std::runtime_error);
}

TEST_CASE("catalog matches an independent classification for small n") {
  auto catalog = connected_bipartite_catalog(5);
  std::vector<int> per_n(6, 0);
  for (const Graph& g : catalog) ++per_n[g.vertex_count()];
  for (int n = 1; n <= 5; ++n) CHECK(per_n[n] == count_classes_all_perms(n));
  // known values: 1, 1, 1, 3, 5
  CHECK(per_n[1] == 1);
  CHECK(per_n[2] == 1);
  CHECK(per_n[3] == 1);
  CHECK(per_n[4] == 3);
  CHECK(per_n[5] == 5);
}

TEST_CASE("catalog entries are connected, bipartite, pairwise distinct") {
  auto catalog = connected_bipartite_catalog(7);
  for (const Graph& g : catalog) {
    CHECK(connected_components(g).size() == 1);
    CHECK(is_bipartite(g).has_value());
  }
  for (size_t i = 0; i < catalog.size(); ++i)
    for (size_t j = i + 1; j < catalog.size(); ++j)
      if (catalog[i].vertex_count() == catalog[j].vertex_count())
        CHECK(!(catalog[i] == catalog[j]));
}

TEST_CASE("suites pass at reduced scale") {
  SuiteOptions opts;
  opts.seed = 20250809;

  opts.count = 60;
  opts.max_n = 8;
  auto koenig = suite_koenig(opts);
  CHECK(koenig.passed());
  CHECK(koenig.checked == 60);

  opts.count = 0;
  opts.max_n = 5;
  auto forest = suite_forest_criticality(opts);
  CHECK(forest.passed());
  CHECK(forest.checked > 1000);

  opts.max_n = 5;
  auto oracle = suite_bipartite_oracle(opts);
  CHECK(oracle.passed());

  opts.count = 30;
  opts.max_n = 10;
  auto tree = suite_tree_witness(opts);
  CHECK(tree.passed());
  CHECK(tree.checked == 60);  // both thresholds

  opts.count = 20;
  opts.max_n = 5;
  ChordalSweepSelect select;
  select.roundtrips = true;
  auto chordal = suite_chordal_gadget(opts, select);
  CHECK(chordal.passed());
  if (!chordal.passed()) {
    for (const auto& f : chordal.failures) MESSAGE(f);
  }

  opts.count = 20;
  opts.max_n = 6;
  auto apex = suite_apex_gadget(opts, true);
  CHECK(apex.passed());
  if (!apex.passed()) {
    for (const auto& f : apex.failures) MESSAGE(f);
  }
}

TEST_CASE("run_suite dispatch") {
  SuiteOptions opts;
  opts.count = 5;
  opts.max_n = 4;
  CHECK(run_suite("koenig", opts).suite == "koenig");
  CHECK_THROWS_AS(run_suite("nonsense", opts), std::invalid_argument);
}
