#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "blocker/generators.hpp"
#include "blocker/graph.hpp"

using namespace blocker;

TEST_CASE("fixed families") {
  Graph c6 = gen_cycle(6);
  CHECK(c6.vertex_count() == 6);
  CHECK(c6.edge_count() == 6);
  CHECK(c6.has_edge(0, 5));

  CHECK(gen_path(1).edge_count() == 0);
  CHECK(gen_path(4).edge_count() == 3);
  CHECK(gen_star(5).degree(0) == 4);

  CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("seeded generators are deterministic") {
  for (uint64_t seed : {1ull, 7ull, 991ull}) {
    CHECK(gen_tree(9, seed) == gen_tree(9, seed));
    CHECK(gen_connected_bipartite(9, 0.4, seed) ==
          gen_connected_bipartite(9, 0.4, seed));
    CHECK(gen_chordal(9, seed) == gen_chordal(9, seed));
    CHECK(gen_triangle_free(9, 0.4, seed) == gen_triangle_free(9, 0.4, seed));
  }
  CHECK(gen_tree(9, 1) != gen_tree(9, 2));
}

TEST_CASE("families satisfy their recognizers") {
  for (uint64_t seed = 0; seed < 60; ++seed) {
    int n = 2 + static_cast<int>(seed % 11);
    Graph tree = gen_tree(n, seed);
    CHECK(is_forest(tree));
    CHECK(connected_components(tree).size() == 1);

    Graph bip = gen_connected_bipartite(n, 0.3 + 0.05 * (seed % 8), seed);
    CHECK(is_bipartite(bip).has_value());
    CHECK(connected_components(bip).size() == 1);

    CHECK(is_chordal(gen_chordal(n, seed)).has_value());

    CHECK(is_c3_free(gen_triangle_free(n, 0.2 + 0.07 * (seed % 8), seed)));
  }
}
