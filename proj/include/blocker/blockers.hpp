#pragma once

#include <optional>

#include "blocker/graph.hpp"
#include "blocker/invariants.hpp"

namespace blocker {

/// One blocker problem: can at most k operations drop pi by at least d?
struct BlockerInstance {
  Graph graph;
  Operation op = Operation::contraction;
  ParameterKind pi = ParameterKind::independence;
  int k = 0;
  int d = 1;
};

struct BlockerResult {
  bool yes = false;
  std::optional<EdgeSet> edge_witness;
  std::optional<VertexSet> vertex_witness;
  int pi_before = 0;
  std::optional<int> pi_after;
};

/// Edge set forming a tree inside its host graph.
struct TreeWitness {
  EdgeSet edges;
};

struct SolverOptions {
  /// Refuse enumerations with more candidate sets than this.
  long long max_candidates = 50'000'000;
  int exact_limit = kDefaultExactLimit;
  /// Chordal hosts at least this large are evaluated against a precomputed
  /// elimination ordering instead of re-recognizing every modified graph.
  int chordal_fastpath_min_n = 17;
};

/// Exhaustive reference solver. Enumerates candidate sets by ascending size,
/// lexicographically within a size, and returns the first critical one.
/// Contraction candidates are restricted to edge sets spanning forests: any
/// set has an equivalent spanning forest of no larger size.
BlockerResult solve_bruteforce(const BlockerInstance& inst,
                               const SolverOptions& opts = {});

/// Grows a tree from a matching edge, always pulling a matched vertex's
/// partner in with it, until the tree has 2d or 2d+1 edges. Contracting the
/// tree drops the independence number of a connected bipartite host by at
/// least d. Requires |V| >= 2d+2 and m a nonempty maximum matching.
TreeWitness build_tree_witness(const Graph& g, const Matching& m, int d);

/// Independence number of contract(g, s).graph for bipartite g: maximizes,
/// over independent sets U' of merged vertices, |U'| plus the independence
/// number of the bipartite remainder avoiding N(U').
int alpha_after_contraction_bipartite(const Graph& g, const EdgeSet& s);

/// Polynomial decision procedure for contraction blocking of the
/// independence number on connected bipartite graphs, d <= 3.
/// Dispatch: tiny graphs by brute force; alpha <= d is infeasible;
/// k >= 2d+1 is always yes (tree witness); otherwise enumerate edge sets of
/// size at most k <= 2d. Every witness is re-verified before returning.
BlockerResult solve_bipartite_contraction_alpha(const Graph& g, int k, int d,
                                                const SolverOptions& opts = {});

}  // namespace blocker
