#include "blocker/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>

namespace blocker {

namespace {

constexpr int kHardMaskLimit = 64;

struct MaskGraph {
  int n = 0;
  std::vector<uint64_t> closed;  // N[v]
  std::vector<uint64_t> open;    // N(v)

  explicit MaskGraph(const Graph& g) : n(g.vertex_count()), closed(n), open(n) {
    for (VertexId v = 0; v < n; ++v) {
      uint64_t m = 0;
      for (VertexId u : g.neighbors(v)) m |= uint64_t{1} << u;
      open[v] = m;
      closed[v] = m | (uint64_t{1} << v);
    }
  }

  int mis_size(uint64_t cand) const {
    if (cand == 0) return 0;
    int best_v = -1, best_deg = -1, total_deg = 0;
    for (uint64_t rest = cand; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      int deg = std::popcount(open[v] & cand);
      total_deg += deg;
      if (deg > best_deg) {
        best_deg = deg;
        best_v = v;
      }
    }
    if (best_deg <= 1)  // disjoint edges and isolated vertices remain
      return std::popcount(cand) - total_deg / 2;
    int without = mis_size(cand & ~(uint64_t{1} << best_v));
    int with = 1 + mis_size(cand & ~closed[best_v]);
    return std::max(without, with);
  }
};

void check_exact_scale(const Graph& g, int exact_limit, const char* what) {
  int n = g.vertex_count();
  int limit = std::min(exact_limit, kHardMaskLimit);
  if (n > limit)
    throw std::runtime_error(std::string(what) + ": graph has " +
                             std::to_string(n) + " vertices, exact limit is " +
                             std::to_string(limit));
}

}  // namespace

ParamWitness alpha_exact(const Graph& g, int exact_limit) {
  check_exact_scale(g, exact_limit, "alpha_exact");
  int n = g.vertex_count();
  MaskGraph mg(g);
  uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  int alpha = mg.mis_size(all);

  // lexicographically smallest maximum independent set
  ParamWitness out;
  out.value = alpha;
  uint64_t cand = all;
  int remaining = alpha;
  for (VertexId v = 0; v < n && remaining > 0; ++v) {
    if (!((cand >> v) & 1)) continue;
    uint64_t if_taken = cand & ~mg.closed[v];
    if (1 + mg.mis_size(if_taken) == remaining) {
      out.witness.push_back(v);
      cand = if_taken;
      --remaining;
    } else {
      cand &= ~(uint64_t{1} << v);
    }
  }
  return out;
}

ParamWitness omega_exact(const Graph& g, int exact_limit) {
  check_exact_scale(g, exact_limit, "omega_exact");
  return alpha_exact(complement(g), exact_limit);
}

namespace {

struct HopcroftKarp {
  const Graph& g;
  std::vector<VertexId> left;
  std::vector<char> on_left;
  std::vector<VertexId> match;  // partner or -1, for all vertices
  std::vector<int> layer;

  explicit HopcroftKarp(const Graph& graph, const Bipartition& bip)
      : g(graph),
        left(bip.left),
        on_left(graph.vertex_count(), 0),
        match(graph.vertex_count(), -1),
        layer(graph.vertex_count()) {
    for (VertexId v : left) on_left[v] = 1;
  }

  bool bfs() {
    std::deque<VertexId> queue;
    std::fill(layer.begin(), layer.end(), -1);
    for (VertexId u : left)
      if (match[u] < 0) {
        layer[u] = 0;
        queue.push_back(u);
      }
    bool reachable_free = false;
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (VertexId v : g.neighbors(u)) {
        VertexId next = match[v];
        if (next < 0) {
          reachable_free = true;
        } else if (layer[next] < 0) {
          layer[next] = layer[u] + 1;
          queue.push_back(next);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(VertexId u) {
    for (VertexId v : g.neighbors(u)) {
      VertexId next = match[v];
      if (next < 0 || (layer[next] == layer[u] + 1 && dfs(next))) {
        match[u] = v;
        match[v] = u;
        return true;
      }
    }
    layer[u] = -1;
    return false;
  }

  void run() {
    while (bfs())
      for (VertexId u : left)
        if (match[u] < 0) dfs(u);
  }
};

Bipartition require_bipartite(const Graph& g, const char* what) {
  auto bip = is_bipartite(g);
  if (!bip)
    throw std::invalid_argument(std::string(what) + ": graph is not bipartite");
  return *bip;
}

}  // namespace

Matching max_matching_bipartite(const Graph& g) {
  Bipartition bip = require_bipartite(g, "max_matching_bipartite");
  HopcroftKarp hk(g, bip);
  hk.run();
  Matching m;
  for (VertexId u : bip.left)
    if (hk.match[u] >= 0) m.edges.push_back(make_edge(u, hk.match[u]));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

ParamWitness alpha_bipartite(const Graph& g) {
  Bipartition bip = require_bipartite(g, "alpha_bipartite");
  HopcroftKarp hk(g, bip);
  hk.run();
  int mu = 0;
  for (VertexId u : bip.left)
    if (hk.match[u] >= 0) ++mu;

  // Konig: Z = vertices reachable from free left vertices by alternating
  // paths; (left ∩ Z) ∪ (right \ Z) is a maximum independent set.
  std::vector<char> in_z(g.vertex_count(), 0);
  std::deque<VertexId> queue;
  for (VertexId u : bip.left)
    if (hk.match[u] < 0) {
      in_z[u] = 1;
      queue.push_back(u);
    }
  while (!queue.empty()) {
    VertexId u = queue.front();  // always a left vertex
    queue.pop_front();
    for (VertexId v : g.neighbors(u)) {
      if (in_z[v]) continue;
      in_z[v] = 1;
      VertexId back = hk.match[v];
      if (back >= 0 && !in_z[back]) {
        in_z[back] = 1;
        queue.push_back(back);
      }
    }
  }

  ParamWitness out;
  out.value = g.vertex_count() - mu;
  for (VertexId v : bip.left)
    if (in_z[v]) out.witness.push_back(v);
  for (VertexId v : bip.right)
    if (!in_z[v]) out.witness.push_back(v);
  std::sort(out.witness.begin(), out.witness.end());
  if (static_cast<int>(out.witness.size()) != out.value)
    throw std::logic_error("alpha_bipartite: witness size mismatch");
  return out;
}

ParamWitness alpha_chordal(const Graph& g) {
  auto peo = is_chordal(g);
  if (!peo)
    throw std::invalid_argument("alpha_chordal: graph is not chordal");
  std::vector<char> marked(g.vertex_count(), 0);
  ParamWitness out;
  for (VertexId v : *peo) {
    if (marked[v]) continue;
    out.witness.push_back(v);
    ++out.value;
    marked[v] = 1;
    for (VertexId u : g.neighbors(v)) marked[u] = 1;
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

ParamWitness alpha_auto(const Graph& g, int exact_limit) {
  if (is_bipartite(g)) return alpha_bipartite(g);
  if (is_chordal(g)) return alpha_chordal(g);
  if (g.vertex_count() <= std::min(exact_limit, kHardMaskLimit))
    return alpha_exact(g, exact_limit);
  throw std::runtime_error(
      "alpha_auto: graph is neither bipartite nor chordal and exceeds the "
      "exact-solver limit (" +
      std::to_string(g.vertex_count()) + " vertices)");
}

ParamWitness param_value(const Graph& g, ParameterKind pi, int exact_limit) {
  return pi == ParameterKind::independence ? alpha_auto(g, exact_limit)
                                           : omega_exact(g, exact_limit);
}

int tau(const Graph& g, int exact_limit) {
  return g.vertex_count() - alpha_auto(g, exact_limit).value;
}

namespace {

bool alpha_auto_applicable(const Graph& g, int exact_limit) {
  return g.vertex_count() <= std::min(exact_limit, kHardMaskLimit) ||
         is_bipartite(g).has_value() || is_chordal(g).has_value();
}

}  // namespace

int alpha_after_contraction(const Graph& g, const EdgeSet& s, int exact_limit) {
  EdgeSet es = normalize_edge_set(g, s);
  ContractionResult cr = contract(g, es);
  if (alpha_auto_applicable(cr.graph, exact_limit))
    return alpha_auto(cr.graph, exact_limit).value;

  // Every maximum independent set of the contracted graph splits into an
  // independent set U' of merged vertices plus an independent set of the
  // untouched remainder avoiding N(U'). The remainder is an induced subgraph
  // of g, so it stays within g's tractable class.
  VertexSet merged;
  for (VertexId v = 0; v < cr.graph.vertex_count(); ++v)
    if (cr.map.component_sizes[v] >= 2) merged.push_back(v);
  if (merged.size() > 20)
    throw std::runtime_error(
        "alpha_after_contraction: too many merged vertices to decompose");
  int best = 0;
  for (uint64_t pick = 0; pick < (uint64_t{1} << merged.size()); ++pick) {
    VertexSet chosen;
    for (size_t i = 0; i < merged.size(); ++i)
      if ((pick >> i) & 1) chosen.push_back(merged[i]);
    bool independent = true;
    for (size_t i = 0; i < chosen.size() && independent; ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j)
        if (cr.graph.has_edge(chosen[i], chosen[j])) {
          independent = false;
          break;
        }
    if (!independent) continue;
    VertexSet removed = merged;
    for (VertexId v : chosen)
      for (VertexId u : cr.graph.neighbors(v)) removed.push_back(u);
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    Graph rest = delete_vertices(cr.graph, removed).graph;
    best = std::max(best, static_cast<int>(chosen.size()) +
                              alpha_auto(rest, exact_limit).value);
  }
  return best;
}

bool check_critical(const Graph& g, Operation op, const WitnessSet& witness,
                    ParameterKind pi, int d, int exact_limit) {
  if (d < 0) throw std::invalid_argument("check_critical: d must be >= 0");
  int before = param_value(g, pi, exact_limit).value;
  int after;
  if (op == Operation::deletion) {
    const auto* vs = std::get_if<VertexSet>(&witness);
    if (!vs)
      throw std::invalid_argument(
          "check_critical: deletion requires a vertex set witness");
    Graph h = delete_vertices(g, *vs).graph;
    after = param_value(h, pi, exact_limit).value;
  } else {
    const auto* es = std::get_if<EdgeSet>(&witness);
    if (!es)
      throw std::invalid_argument(
          "check_critical: contraction requires an edge set witness");
    if (pi == ParameterKind::independence) {
      after = alpha_after_contraction(g, *es, exact_limit);
    } else {
      Graph h = contract(g, *es).graph;
      after = omega_exact(h, exact_limit).value;
    }
  }
  return after <= before - d;
}

}  // namespace blocker
