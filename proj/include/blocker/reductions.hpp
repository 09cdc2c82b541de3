#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blocker/graph.hpp"
#include "blocker/invariants.hpp"

namespace blocker {

/// Satisfiability with all-positive two-literal clauses and a budget of at
/// most k true variables. Equivalent to vertex cover on the clause graph.
struct Wp2SatInstance {
  int num_vars = 0;
  std::vector<std::pair<int, int>> clauses;  // canonical (min, max) pairs
  int k = 0;
};

struct Assignment {
  VertexSet true_vars;  // sorted variable indices
};

/// Chordal graph encoding a Wp2SatInstance: one apex vertex plus a clique of
/// 2k+1 vertices per variable, one clique vertex per clause, the clause
/// vertex made complete to both of its variables' cliques. Contracting (or
/// deleting) at most k pieces drops the independence number iff the formula
/// is satisfiable within budget.
struct ChordalGadget {
  Graph graph;
  int k = 0;
  std::vector<VertexId> var_apex;       // v_x per variable
  std::vector<VertexSet> var_clique;    // K_x per variable, size 2k+1
  std::vector<VertexId> clause_vertex;  // per clause
  std::vector<std::string> warnings;    // degenerate-instance notes
};

/// Base graph plus one universal vertex. For a triangle-free base with at
/// least one edge the result has clique number 3, every triangle passes
/// through the universal vertex, and contracting k spoke edges kills all
/// triangles iff the base has a vertex cover of size k.
struct ApexGadget {
  Graph graph;
  VertexId universal = -1;
  int base_n = 0;
};

// --- file format --------------------------------------------------------
// Header "p wp2sat <num_vars> <num_clauses> <k>", then one line "u v" per
// clause with 0-based distinct variable indices; duplicates rejected.

Wp2SatInstance parse_wp2sat(std::string_view text);
std::string serialize_wp2sat(const Wp2SatInstance& phi);

/// True iff every clause has a true literal.
bool assignment_satisfies(const Wp2SatInstance& phi, const Assignment& a);

// --- constructions and oracles ------------------------------------------

/// One variable per vertex, one clause per edge, same budget.
Wp2SatInstance vc_to_wp2sat(const Graph& g, int k);

/// Satisfying assignment with at most k true variables: minimum count, then
/// lexicographically smallest; std::nullopt when none exists.
std::optional<Assignment> solve_wp2sat_bruteforce(const Wp2SatInstance& phi,
                                                  int max_vars = 24);

ChordalGadget build_chordal_gadget(const Wp2SatInstance& phi);

ApexGadget build_apex_gadget(const Graph& g);

// --- witness translation --------------------------------------------------

/// One edge from each true variable's apex into its clique.
EdgeSet assignment_to_contraction_witness(const ChordalGadget& gadget,
                                          const Assignment& a);

/// Reads a satisfying assignment off a minimal critical edge set: variables
/// whose block is touched, plus one variable per clause left uncovered.
/// The input set is minimalized internally (spanning-forest restriction,
/// then greedy removal) before translation.
Assignment contraction_witness_to_assignment(const ChordalGadget& gadget,
                                             const EdgeSet& s);

/// The apex vertices of the true variables.
VertexSet assignment_to_deletion_witness(const ChordalGadget& gadget,
                                         const Assignment& a);

Assignment deletion_witness_to_assignment(const ChordalGadget& gadget,
                                          const VertexSet& w);

/// Spoke edges from the cover vertices to the universal vertex.
EdgeSet vc_witness_to_contraction_witness(const ApexGadget& gadget,
                                          const VertexSet& cover);

/// Vertex cover of the base graph read off a minimal critical edge set: all
/// of the universal vertex's component except the universal vertex itself,
/// and every other component minus its smallest vertex. Minimalizes the
/// input first.
VertexSet contraction_witness_to_vc(const ApexGadget& gadget, const EdgeSet& s);

}  // namespace blocker
