#include "blocker/generators.hpp"

#include <deque>
#include <stdexcept>

namespace blocker {

namespace rng {

uint64_t mix(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace rng

namespace {

void require_n(int n, int min_n, const char* what) {
  if (n < min_n)
    throw std::invalid_argument(std::string(what) + ": need n >= " +
                                std::to_string(min_n));
}

}  // namespace

Graph gen_cycle(int n) {
  require_n(n, 3, "gen_cycle");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph gen_path(int n) {
  require_n(n, 1, "gen_path");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph gen_star(int n) {
  require_n(n, 1, "gen_star");
  Graph g(n);
  for (int i = 1; i < n; ++i) g.add_edge(0, i);
  return g;
}

Graph gen_tree(int n, uint64_t seed) {
  require_n(n, 1, "gen_tree");
  rng::Stream rnd(seed);
  Graph g(n);
  for (int i = 1; i < n; ++i)
    g.add_edge(i, static_cast<int>(rnd.below(static_cast<uint64_t>(i))));
  return g;
}

Graph gen_connected_bipartite(int n, double p, uint64_t seed) {
  require_n(n, 1, "gen_connected_bipartite");
  rng::Stream rnd(seed);
  Graph g(n);
  std::vector<int> parity(n, 0);
  for (int i = 1; i < n; ++i) {
    int parent = static_cast<int>(rnd.below(static_cast<uint64_t>(i)));
    g.add_edge(i, parent);
    parity[i] = 1 - parity[parent];
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (parity[u] != parity[v] && !g.has_edge(u, v) && rnd.chance(p))
        g.add_edge(u, v);
  return g;
}

Graph gen_chordal(int n, uint64_t seed) {
  require_n(n, 1, "gen_chordal");
  rng::Stream rnd(seed);
  Graph host = gen_tree(n, rnd.next());
  // one random connected subtree per vertex
  std::vector<std::vector<char>> member(n, std::vector<char>(n, 0));
  for (int v = 0; v < n; ++v) {
    int want = 1 + static_cast<int>(rnd.below(static_cast<uint64_t>(n / 2 + 1)));
    int start = static_cast<int>(rnd.below(static_cast<uint64_t>(n)));
    std::vector<int> frontier{start};
    member[v][start] = 1;
    int size = 1;
    while (size < want && !frontier.empty()) {
      size_t at = rnd.below(frontier.size());
      int x = frontier[at];
      int next = -1;
      for (int y : host.neighbors(x))
        if (!member[v][y]) {
          next = y;
          break;
        }
      if (next < 0) {
        frontier[at] = frontier.back();
        frontier.pop_back();
        continue;
      }
      member[v][next] = 1;
      frontier.push_back(next);
      ++size;
    }
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool shared = false;
      for (int t = 0; t < n && !shared; ++t)
        shared = member[u][t] && member[v][t];
      if (shared) g.add_edge(u, v);
    }
  return g;
}

Graph gen_triangle_free(int n, double p, uint64_t seed) {
  require_n(n, 1, "gen_triangle_free");
  rng::Stream rnd(seed);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (!rnd.chance(p)) continue;
      bool closes_triangle = false;
      for (int w : g.neighbors(u))
        if (g.has_edge(w, v)) {
          closes_triangle = true;
          break;
        }
      if (!closes_triangle) g.add_edge(u, v);
    }
  return g;
}

}  // namespace blocker
