#pragma once

#include <variant>

#include "blocker/graph.hpp"

namespace blocker {

/// Graph parameter a blocker instance targets.
enum class ParameterKind { independence, clique };

/// Graph operation a blocker instance may apply.
enum class Operation { contraction, deletion };

/// Set of pairwise non-adjacent edges of a host graph.
struct Matching {
  EdgeSet edges;
};

/// Parameter value together with an optimal witness set.
struct ParamWitness {
  int value = 0;
  VertexSet witness;
};

/// Exact solvers refuse graphs above this many vertices unless the caller
/// raises the limit explicitly (hard cap 64).
inline constexpr int kDefaultExactLimit = 30;

/// Maximum independent set by branching on a maximum-degree vertex.
/// The witness is the lexicographically smallest maximum independent set.
ParamWitness alpha_exact(const Graph& g, int exact_limit = kDefaultExactLimit);

/// Maximum clique via the complement graph; witness is the lexicographically
/// smallest maximum clique.
ParamWitness omega_exact(const Graph& g, int exact_limit = kDefaultExactLimit);

/// Hopcroft-Karp maximum matching. Throws if the graph is not bipartite.
Matching max_matching_bipartite(const Graph& g);

/// Independence number of a bipartite graph as |V| - mu, witness built from
/// the alternating-reachability side of a maximum matching (Konig).
ParamWitness alpha_bipartite(const Graph& g);

/// Independence number of a chordal graph: greedy scan of a perfect
/// elimination ordering, taking each unmarked vertex and marking its closed
/// neighborhood. Throws if the graph is not chordal.
ParamWitness alpha_chordal(const Graph& g);

/// Dispatches to the cheapest applicable exact method: bipartite, then
/// chordal, then bounded branching. Throws when none applies.
ParamWitness alpha_auto(const Graph& g, int exact_limit = kDefaultExactLimit);

/// Parameter dispatch for either kind.
ParamWitness param_value(const Graph& g, ParameterKind pi,
                         int exact_limit = kDefaultExactLimit);

/// Minimum vertex cover size, |V| - alpha.
int tau(const Graph& g, int exact_limit = kDefaultExactLimit);

/// A candidate witness set: edges for contraction, vertices for deletion.
using WitnessSet = std::variant<EdgeSet, VertexSet>;

/// True iff applying the witness drops the parameter by at least d.
/// The witness kind must match the operation. For contractions whose result
/// falls outside every exact method's reach, the value is recovered by
/// maximizing over independent subsets of the merged vertices against the
/// easy remainder graph.
bool check_critical(const Graph& g, Operation op, const WitnessSet& witness,
                    ParameterKind pi, int d,
                    int exact_limit = kDefaultExactLimit);

/// Exact independence number of contract(g, s).graph, usable whenever the
/// contracted graph itself or g minus the contracted vertices is tractable.
int alpha_after_contraction(const Graph& g, const EdgeSet& s,
                            int exact_limit = kDefaultExactLimit);

}  // namespace blocker
