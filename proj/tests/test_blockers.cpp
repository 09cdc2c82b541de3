#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocker/blockers.hpp"
#include "blocker/generators.hpp"
#include "blocker/suites.hpp"
#include "test_oracles.hpp"

using namespace blocker;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

BlockerInstance inst(const Graph& g, Operation op, ParameterKind pi, int k,
                     int d) {
  return {g, op, pi, k, d};
}

}  // namespace

TEST_CASE("solve_bruteforce contraction examples") {
  auto yes = solve_bruteforce(inst(gen_path(3), Operation::contraction,
                                   ParameterKind::independence, 1, 1));
  CHECK(yes.yes);
  CHECK(yes.pi_before == 2);
  CHECK(yes.pi_after == 1);
  REQUIRE(yes.edge_witness.has_value());
  CHECK(*yes.edge_witness == EdgeSet{{0, 1}});

  // a complete graph keeps one vertex however much is contracted
  auto no = solve_bruteforce(inst(complete(3), Operation::contraction,
                                  ParameterKind::independence, 3, 1));
  CHECK(!no.yes);
  CHECK(no.pi_before == 1);
  CHECK(!no.pi_after.has_value());
  CHECK(!no.edge_witness.has_value());
}

TEST_CASE("solve_bruteforce deletion examples") {
  auto r = solve_bruteforce(inst(gen_star(4), Operation::deletion,
                                 ParameterKind::independence, 1, 1));
  CHECK(r.yes);
  REQUIRE(r.vertex_witness.has_value());
  CHECK(*r.vertex_witness == VertexSet{1});  // a leaf, not the center

  // deleting everything empties the graph: alpha drops to zero
  Graph k1(1);
  auto r1 = solve_bruteforce(
      inst(k1, Operation::deletion, ParameterKind::independence, 1, 1));
  CHECK(r1.yes);
  CHECK(*r1.vertex_witness == VertexSet{0});
}

TEST_CASE("solve_bruteforce guards") {
  CHECK_THROWS_AS(solve_bruteforce(inst(gen_path(3), Operation::contraction,
                                        ParameterKind::independence, 1, 0)),
                  std::invalid_argument);
  SolverOptions tight;
  tight.max_candidates = 10;
  CHECK_THROWS_AS(solve_bruteforce(inst(complete(6), Operation::contraction,
                                        ParameterKind::independence, 5, 1),
                                   tight),
                  std::runtime_error);
}

TEST_CASE("minimal critical contraction sets span forests") {
  // every minimal critical set found by exhaustive search, small scale
  for (uint64_t seed = 0; seed < 60; ++seed) {
    rng::Stream rnd(seed);
    int n = 3 + static_cast<int>(rnd.below(3));
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rnd.chance(0.5)) g.add_edge(u, v);
    EdgeSet all = g.edges();
    int m = static_cast<int>(all.size());
    int alpha_g = testoracle::alpha_subsets(g);
    std::vector<char> crit(1u << m, 0);
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      EdgeSet s;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) s.push_back(all[e]);
      crit[mask] =
          testoracle::alpha_subsets(contract(g, s).graph) < alpha_g;
    }
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
      if (!crit[mask]) continue;
      bool minimal = true;
      for (int e = 0; e < m && minimal; ++e)
        if ((mask >> e) & 1 && crit[mask ^ (1u << e)]) minimal = false;
      if (!minimal) continue;
      EdgeSet s;
      for (int e = 0; e < m; ++e)
        if ((mask >> e) & 1) s.push_back(all[e]);
      CHECK(is_forest(spanning_on_edges(g, s)));
    }
  }
}

TEST_CASE("build_tree_witness follows the deterministic growth rule") {
  Graph p4 = gen_path(4);
  Matching m{{{0, 1}, {2, 3}}};
  TreeWitness tw = build_tree_witness(p4, m, 1);
  CHECK(tw.edges == EdgeSet{{0, 1}, {1, 2}, {2, 3}});

  Graph c6 = gen_cycle(6);
  Matching alt{{{0, 1}, {2, 3}, {4, 5}}};
  TreeWitness tc = build_tree_witness(c6, alt, 1);
  CHECK(tc.edges.size() == 3);
  int before = alpha_exact(c6).value;
  int after = alpha_exact(contract(c6, tc.edges).graph).value;
  CHECK(before == 3);
  CHECK(after <= before - 1);

  Graph c8 = gen_cycle(8);
  TreeWitness t8 = build_tree_witness(c8, max_matching_bipartite(c8), 2);
  CHECK((t8.edges.size() == 4 || t8.edges.size() == 5));
  CHECK(alpha_exact(contract(c8, t8.edges).graph).value <=
        alpha_exact(c8).value - 2);
}

TEST_CASE("build_tree_witness validates its inputs") {
  Graph p4 = gen_path(4);
  CHECK_THROWS_AS(build_tree_witness(p4, Matching{{{0, 1}}}, 1),
                  std::invalid_argument);  // not maximum
  CHECK_THROWS_AS(build_tree_witness(gen_path(3), Matching{{{0, 1}}}, 1),
                  std::invalid_argument);  // too few vertices
  CHECK_THROWS_AS(
      build_tree_witness(gen_cycle(5), Matching{{{0, 1}, {2, 3}}}, 1),
      std::invalid_argument);  // odd cycle
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  disconnected.add_edge(2, 3);
  CHECK_THROWS_AS(
      build_tree_witness(disconnected, Matching{{{0, 1}, {2, 3}}}, 1),
      std::invalid_argument);
}

TEST_CASE("alpha_after_contraction_bipartite") {
  Graph c4 = gen_cycle(4);
  CHECK(alpha_after_contraction_bipartite(c4, {{0, 1}}) == 1);
  CHECK(alpha_after_contraction_bipartite(c4, {}) == alpha_bipartite(c4).value);
  CHECK(alpha_after_contraction_bipartite(gen_path(4), {{1, 2}}) == 2);
  CHECK_THROWS_AS(alpha_after_contraction_bipartite(gen_cycle(5), {}),
                  std::invalid_argument);

  for (uint64_t seed = 0; seed < 120; ++seed) {
    Graph g = gen_connected_bipartite(3 + seed % 8, 0.4, 2100 + seed);
    EdgeSet all = g.edges();
    rng::Stream rnd(seed);
    EdgeSet s;
    for (const auto& e : all)
      if (rnd.chance(0.3) && s.size() < 4) s.push_back(e);
    CHECK(alpha_after_contraction_bipartite(g, s) ==
          testoracle::alpha_subsets(contract(g, s).graph));
  }
}

TEST_CASE("solve_bipartite_contraction_alpha examples") {
  auto c6 = solve_bipartite_contraction_alpha(gen_cycle(6), 1, 1);
  CHECK(c6.yes);
  CHECK(c6.pi_before == 3);
  REQUIRE(c6.edge_witness.has_value());
  CHECK(c6.edge_witness->size() <= 1);

  // alpha(K2) = 1 <= d: no contraction budget helps
  auto k2 = solve_bipartite_contraction_alpha(gen_path(2), 5, 1);
  CHECK(!k2.yes);

  // P4 with d=2: alpha = 2 <= d, impossible either way
  CHECK(!solve_bipartite_contraction_alpha(gen_path(4), 1, 2).yes);
  CHECK(!solve_bipartite_contraction_alpha(gen_path(4), 2, 2).yes);

  // budget 2d+1 on a large-enough bipartite graph is always yes
  for (uint64_t seed = 0; seed < 30; ++seed) {
    for (int d = 1; d <= 2; ++d) {
      Graph g = gen_connected_bipartite(2 * d + 2 + seed % 5, 0.5, seed);
      auto r = solve_bipartite_contraction_alpha(g, 2 * d + 1, d);
      CHECK(r.yes);
      REQUIRE(r.edge_witness.has_value());
      CHECK(static_cast<int>(r.edge_witness->size()) <= 2 * d + 1);
    }
  }

  CHECK_THROWS_AS(solve_bipartite_contraction_alpha(gen_cycle(5), 1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(solve_bipartite_contraction_alpha(gen_cycle(6), 1, 4),
                  std::runtime_error);
  Graph disconnected(4);
  disconnected.add_edge(0, 1);
  CHECK_THROWS_AS(solve_bipartite_contraction_alpha(disconnected, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("polynomial solver agrees with the exhaustive one, small catalog") {
  auto catalog = connected_bipartite_catalog(6);
  for (const Graph& g : catalog) {
    for (int d = 1; d <= 2; ++d)
      for (int k = 0; k <= 4; ++k) {
        auto fast = solve_bipartite_contraction_alpha(g, k, d);
        auto brute = solve_bruteforce(inst(g, Operation::contraction,
                                           ParameterKind::independence, k, d));
        CHECK(fast.yes == brute.yes);
      }
  }
}

TEST_CASE("chordal fast path matches direct recomputation") {
  SolverOptions force_fast;
  force_fast.chordal_fastpath_min_n = 1;
  SolverOptions force_slow;
  force_slow.chordal_fastpath_min_n = 1000;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = gen_chordal(4 + seed % 9, 3300 + seed);
    for (Operation op : {Operation::contraction, Operation::deletion}) {
      for (int k : {1, 2, 3}) {
        auto a = solve_bruteforce(
            inst(g, op, ParameterKind::independence, k, 1), force_fast);
        auto b = solve_bruteforce(
            inst(g, op, ParameterKind::independence, k, 1), force_slow);
        CHECK(a.yes == b.yes);
        CHECK(a.pi_before == b.pi_before);
        CHECK(a.pi_after == b.pi_after);
        CHECK(a.edge_witness == b.edge_witness);
        CHECK(a.vertex_witness == b.vertex_witness);
      }
    }
  }
}

TEST_CASE("witnesses returned by solvers verify and answers are monotone") {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = gen_connected_bipartite(4 + seed % 5, 0.45, 4400 + seed);
    bool smaller_k_yes = false;  // once yes, every larger budget stays yes
    for (int k = 0; k <= 3; ++k) {
      auto r = solve_bruteforce(
          inst(g, Operation::contraction, ParameterKind::independence, k, 1));
      if (r.yes) {
        REQUIRE(r.edge_witness.has_value());
        CHECK(static_cast<int>(r.edge_witness->size()) <= k);
        CHECK(check_critical(g, Operation::contraction, *r.edge_witness,
                             ParameterKind::independence, 1));
      } else {
        CHECK(!smaller_k_yes);
      }
      smaller_k_yes = r.yes;
    }
  }
}
