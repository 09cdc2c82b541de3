#include "blocker/blockers.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "blocker/bitset.hpp"

namespace blocker {

namespace {

long long count_candidates(long long pool, int max_size, long long cap) {
  long long total = 0, level = 1;
  for (int t = 0; t <= max_size; ++t) {
    total += level;
    if (total > cap) return cap + 1;
    if (t < max_size) {
      if (pool - t <= 0) break;
      if (level > cap / std::max<long long>(1, pool - t) + 1)
        return cap + 1;
      level = level * (pool - t) / (t + 1);
    }
  }
  return total;
}

/// Calls fn(indices) for every size-t combination of {0..pool-1} in
/// lexicographic order; stops early when fn returns true.
template <typename F>
bool for_each_combination(int pool, int t, F&& fn) {
  if (t > pool) return false;
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (fn(idx)) return true;
    int i = t - 1;
    while (i >= 0 && idx[i] == pool - t + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct SmallDsu {
  std::vector<int> parent;
  void init(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

/// Evaluates independence numbers of contractions/deletions of a chordal
/// host against one precomputed elimination ordering, without rebuilding or
/// re-recognizing the modified graph. Induced subgraphs of a chordal graph
/// inherit the ordering, and a contraction splits into an independent set of
/// merged vertices plus an induced remainder. Holds reusable scratch
/// buffers, so one instance serves one enumeration at a time.
class ChordalAlphaScratch {
 public:
  explicit ChordalAlphaScratch(const Graph& g, std::vector<VertexId> peo)
      : n_(g.vertex_count()),
        peo_(std::move(peo)),
        open_(n_, Bitset(n_)),
        closed_(n_, Bitset(n_)),
        marked_(n_),
        removed_(n_),
        base_(n_) {
    for (VertexId v = 0; v < n_; ++v) {
      for (VertexId u : g.neighbors(v)) open_[v].set(u);
      closed_[v] = open_[v];
      closed_[v].set(v);
    }
  }

  int alpha_minus(const Bitset& removed) {
    marked_.clear();
    int count = 0;
    for (VertexId v : peo_) {
      if (removed.test(v) || marked_.test(v)) continue;
      ++count;
      marked_ |= closed_[v];
    }
    return count;
  }

  int alpha_full() {
    removed_.clear();
    return alpha_minus(removed_);
  }

  /// alpha after contracting the edges whose components are the first
  /// `c` entries of `comps` (each a vertex list). When `bail_above` is
  /// non-negative, may return early with any value above it.
  int alpha_contracted(const std::vector<std::vector<VertexId>>& comps, int c,
                       int bail_above) {
    while (static_cast<int>(comp_bits_.size()) < c) {
      comp_bits_.emplace_back(n_);
      comp_nbrs_.emplace_back(n_);
    }
    base_.clear();
    for (int i = 0; i < c; ++i) {
      comp_bits_[i].clear();
      comp_nbrs_[i].clear();
      for (VertexId v : comps[i]) {
        base_.set(v);
        comp_bits_[i].set(v);
        comp_nbrs_[i] |= open_[v];
      }
    }
    int best = 0;
    for (uint32_t pick = 0; pick < (uint32_t{1} << c); ++pick) {
      bool independent = true;
      for (int i = 0; i < c && independent; ++i) {
        if (!((pick >> i) & 1)) continue;
        for (int j = i + 1; j < c; ++j)
          if (((pick >> j) & 1) && comp_nbrs_[i].intersects(comp_bits_[j])) {
            independent = false;
            break;
          }
      }
      if (!independent) continue;
      removed_ = base_;
      int taken = 0;
      for (int i = 0; i < c; ++i)
        if ((pick >> i) & 1) {
          removed_ |= comp_nbrs_[i];
          ++taken;
        }
      best = std::max(best, taken + alpha_minus(removed_));
      if (bail_above >= 0 && best > bail_above) return best;
    }
    return best;
  }

  int vertex_count() const { return n_; }

 private:
  int n_;
  std::vector<VertexId> peo_;
  std::vector<Bitset> open_;
  std::vector<Bitset> closed_;
  Bitset marked_;
  Bitset removed_;
  Bitset base_;
  std::vector<Bitset> comp_bits_;
  std::vector<Bitset> comp_nbrs_;
};

/// Parameter evaluation used by the reference solver: plain branching first,
/// then the polynomial class solvers for graphs past the branching limit.
ParamWitness oracle_param(const Graph& g, ParameterKind pi,
                          const SolverOptions& opts) {
  if (pi == ParameterKind::clique) return omega_exact(g, opts.exact_limit);
  if (g.vertex_count() <= opts.exact_limit)
    return alpha_exact(g, opts.exact_limit);
  if (auto peo = is_chordal(g)) return alpha_chordal(g);
  if (is_bipartite(g)) return alpha_bipartite(g);
  throw std::runtime_error(
      "solve_bruteforce: modified graph too large for exact evaluation");
}

/// Groups the endpoints of `chosen` into connected components, reusing the
/// caller's buffers. Returns the number of components; `comps[0..count)`
/// hold their vertex lists.
struct ComponentScratch {
  std::vector<VertexId> verts;
  std::vector<int> local_comp;
  SmallDsu dsu;
  std::vector<std::vector<VertexId>> comps;

  int group(const std::vector<Edge>& chosen) {
    verts.clear();
    for (const auto& [u, v] : chosen) {
      verts.push_back(u);
      verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    int nv = static_cast<int>(verts.size());
    dsu.init(nv);
    auto local = [&](VertexId v) {
      return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), v) -
                              verts.begin());
    };
    for (const auto& [u, v] : chosen) dsu.unite(local(u), local(v));
    local_comp.assign(nv, -1);
    int count = 0;
    for (int i = 0; i < nv; ++i) {
      int root = dsu.find(i);
      if (local_comp[root] < 0) {
        if (count == static_cast<int>(comps.size())) comps.emplace_back();
        comps[count].clear();
        local_comp[root] = count++;
      }
      comps[local_comp[root]].push_back(verts[i]);
    }
    return count;
  }
};

}  // namespace

BlockerResult solve_bruteforce(const BlockerInstance& inst,
                               const SolverOptions& opts) {
  if (inst.d < 1) throw std::invalid_argument("solve_bruteforce: d must be >= 1");
  if (inst.k < 0) throw std::invalid_argument("solve_bruteforce: k must be >= 0");
  const Graph& g = inst.graph;
  const bool contracting = inst.op == Operation::contraction;

  EdgeSet edge_pool = contracting ? g.edges() : EdgeSet{};
  int pool = contracting ? static_cast<int>(edge_pool.size()) : g.vertex_count();
  int max_size = std::min(inst.k, pool);
  if (count_candidates(pool, max_size, opts.max_candidates) >
      opts.max_candidates)
    throw std::runtime_error(
        "solve_bruteforce: candidate enumeration exceeds the configured "
        "budget");

  // One recognition pass on the host; both operations preserve chordality,
  // so large chordal hosts use the elimination-ordering evaluator.
  std::optional<ChordalAlphaScratch> scratch;
  if (inst.pi == ParameterKind::independence &&
      g.vertex_count() >= opts.chordal_fastpath_min_n) {
    if (auto peo = is_chordal(g))
      scratch.emplace(g, std::move(*peo));
  }

  BlockerResult result;
  result.pi_before = scratch ? scratch->alpha_full()
                             : oracle_param(g, inst.pi, opts).value;
  const int target = result.pi_before - inst.d;

  std::vector<Edge> chosen;
  ComponentScratch comp_scratch;
  Bitset removed_mask(g.vertex_count());
  for (int t = 0; t <= max_size && !result.yes; ++t) {
    for_each_combination(pool, t, [&](const std::vector<int>& idx) {
      std::optional<int> after;
      if (contracting) {
        chosen.clear();
        for (int i : idx) chosen.push_back(edge_pool[i]);
        int comp_count = comp_scratch.group(chosen);
        int vert_total = static_cast<int>(comp_scratch.verts.size());
        if (vert_total != t + comp_count) return false;  // not a forest
        if (scratch) {
          int value =
              scratch->alpha_contracted(comp_scratch.comps, comp_count, target);
          if (value <= target) after = value;
        } else {
          Graph h = contract(g, chosen).graph;
          int value = oracle_param(h, inst.pi, opts).value;
          if (value <= target) after = value;
        }
      } else {
        if (scratch) {
          removed_mask.clear();
          for (int i : idx) removed_mask.set(i);
          int value = scratch->alpha_minus(removed_mask);
          if (value <= target) after = value;
        } else {
          VertexSet del(idx.begin(), idx.end());
          Graph h = delete_vertices(g, del).graph;
          int value = oracle_param(h, inst.pi, opts).value;
          if (value <= target) after = value;
        }
      }
      if (!after) return false;
      result.yes = true;
      result.pi_after = *after;
      if (contracting)
        result.edge_witness = EdgeSet(chosen.begin(), chosen.end());
      else
        result.vertex_witness = VertexSet(idx.begin(), idx.end());
      return true;
    });
  }
  return result;
}

TreeWitness build_tree_witness(const Graph& g, const Matching& m, int d) {
  if (d < 1) throw std::invalid_argument("build_tree_witness: d must be >= 1");
  int n = g.vertex_count();
  if (n < 2 * d + 2)
    throw std::invalid_argument(
        "build_tree_witness: need at least 2d+2 vertices");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument("build_tree_witness: graph must be connected");
  if (!is_bipartite(g))
    throw std::invalid_argument("build_tree_witness: graph must be bipartite");
  EdgeSet medges = normalize_edge_set(g, m.edges);
  if (medges.empty())
    throw std::invalid_argument("build_tree_witness: matching is empty");
  std::vector<VertexId> partner(n, -1);
  for (const auto& [u, v] : medges) {
    if (partner[u] >= 0 || partner[v] >= 0)
      throw std::invalid_argument(
          "build_tree_witness: matching edges share an endpoint");
    partner[u] = v;
    partner[v] = u;
  }
  if (static_cast<int>(medges.size()) !=
      static_cast<int>(max_matching_bipartite(g).edges.size()))
    throw std::invalid_argument(
        "build_tree_witness: matching is not maximum");

  std::vector<char> in_tree(n, 0);
  EdgeSet tree;
  auto grab = [&](VertexId v) { in_tree[v] = 1; };
  grab(medges[0].first);
  grab(medges[0].second);
  tree.push_back(medges[0]);

  while (static_cast<int>(tree.size()) <= 2 * d - 1) {
    // smallest-id vertex outside the tree with a neighbor inside
    VertexId w = -1, w_anchor = -1;
    for (VertexId v = 0; v < n && w < 0; ++v) {
      if (in_tree[v]) continue;
      for (VertexId u : g.neighbors(v)) {
        if (in_tree[u]) {
          w = v;
          w_anchor = u;  // neighbors are sorted, so this is the smallest
          break;
        }
      }
    }
    if (w < 0)
      throw std::logic_error("build_tree_witness: ran out of vertices");
    if (partner[w] >= 0) {
      VertexId v = partner[w];
      assert(!in_tree[v]);  // matched partners enter the tree together
      grab(w);
      grab(v);
      tree.push_back(make_edge(w_anchor, w));
      tree.push_back(make_edge(v, w));
    } else {
      grab(w);
      tree.push_back(make_edge(w_anchor, w));
    }
  }
  std::sort(tree.begin(), tree.end());
  return {std::move(tree)};
}

int alpha_after_contraction_bipartite(const Graph& g, const EdgeSet& s) {
  if (!is_bipartite(g))
    throw std::invalid_argument(
        "alpha_after_contraction_bipartite: graph is not bipartite");
  EdgeSet es = normalize_edge_set(g, s);
  ContractionResult cr = contract(g, es);
  VertexSet merged;
  for (VertexId v = 0; v < cr.graph.vertex_count(); ++v)
    if (cr.map.component_sizes[v] >= 2) merged.push_back(v);

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
                              alpha_bipartite(rest).value);
  }
  return best;
}

BlockerResult solve_bipartite_contraction_alpha(const Graph& g, int k, int d,
                                                const SolverOptions& opts) {
  if (d < 1)
    throw std::invalid_argument(
        "solve_bipartite_contraction_alpha: d must be >= 1");
  if (d > 3)
    throw std::runtime_error(
        "solve_bipartite_contraction_alpha: d > 3 is not supported (the edge "
        "enumeration grows as |E|^(2d))");
  if (k < 0)
    throw std::invalid_argument(
        "solve_bipartite_contraction_alpha: k must be >= 0");
  if (connected_components(g).size() != 1)
    throw std::invalid_argument(
        "solve_bipartite_contraction_alpha: graph must be connected");
  if (!is_bipartite(g))
    throw std::invalid_argument(
        "solve_bipartite_contraction_alpha: graph must be bipartite");

  // tiny graphs: constant-size exhaustive search
  if (g.vertex_count() <= 2 * d + 1)
    return solve_bruteforce(
        {g, Operation::contraction, ParameterKind::independence, k, d}, opts);

  BlockerResult result;
  result.pi_before = alpha_bipartite(g).value;

  // contraction never empties a graph, so alpha cannot reach pi_before - d
  if (result.pi_before <= d) return result;

  if (k >= 2 * d + 1) {
    TreeWitness tw = build_tree_witness(g, max_matching_bipartite(g), d);
    int after = alpha_after_contraction_bipartite(g, tw.edges);
    if (!check_critical(g, Operation::contraction, tw.edges,
                        ParameterKind::independence, d, opts.exact_limit))
      throw std::logic_error(
          "solve_bipartite_contraction_alpha: tree witness failed "
          "verification");
    result.yes = true;
    result.edge_witness = std::move(tw.edges);
    result.pi_after = after;
    return result;
  }

  EdgeSet pool = g.edges();
  int max_size = std::min<int>(k, static_cast<int>(pool.size()));
  if (count_candidates(static_cast<int>(pool.size()), max_size,
                       opts.max_candidates) > opts.max_candidates)
    throw std::runtime_error(
        "solve_bipartite_contraction_alpha: enumeration exceeds the "
        "configured budget");

  const int target = result.pi_before - d;
  for (int t = 1; t <= max_size && !result.yes; ++t) {
    for_each_combination(static_cast<int>(pool.size()), t,
                         [&](const std::vector<int>& idx) {
      EdgeSet chosen;
      chosen.reserve(t);
      for (int i : idx) chosen.push_back(pool[i]);
      Graph span = spanning_on_edges(g, chosen);
      if (!is_forest(span)) return false;
      int beta = alpha_after_contraction_bipartite(g, chosen);
      if (beta > target) return false;
      if (!check_critical(g, Operation::contraction, chosen,
                          ParameterKind::independence, d, opts.exact_limit))
        throw std::logic_error(
            "solve_bipartite_contraction_alpha: witness failed verification");
      result.yes = true;
      result.edge_witness = std::move(chosen);
      result.pi_after = beta;
      return true;
    });
  }
  return result;
}

}  // namespace blocker
