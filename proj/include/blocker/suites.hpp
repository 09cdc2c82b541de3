#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "blocker/graph.hpp"
#include "blocker/invariants.hpp"

namespace blocker {

// Property-suite drivers shared by the CLI `verify` command and the
// acceptance binary. Every failing instance is reported as a reproducible
// text block (parameters plus the edge-list payload).

struct SuiteOptions {
  uint64_t seed = 1;
  int count = 0;  // 0 = suite default
  int max_n = 0;  // 0 = suite default
};

struct SuiteReport {
  std::string suite;
  long long checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Independence number by plain subset enumeration; the referee the suites
/// measure everything else against. Intentionally unrelated to the solvers.
int alpha_by_enumeration(const Graph& g, int max_vars = 20);

/// All connected bipartite graphs with at most max_n (<= 8) vertices, one
/// representative per isomorphism class, enumerated over biadjacency
/// matrices and deduplicated by a side-permutation canonical form.
std::vector<Graph> connected_bipartite_catalog(int max_n);

/// Konig and cover-complement checks: matching size, bipartite independence
/// value and witness, and tau all agree with the enumeration referee.
SuiteReport suite_koenig(const SuiteOptions& opts = {});

/// Exhaustively checks, over every labeled graph with at most max_n (<= 6)
/// vertices, that each minimal critical contraction set spans a forest.
SuiteReport suite_forest_criticality(const SuiteOptions& opts = {});

/// Polynomial bipartite solver vs the exhaustive solver on the full catalog,
/// d in {1,2}, k in 0..5, plus answer monotonicity in k and d.
SuiteReport suite_bipartite_oracle(const SuiteOptions& opts = {});

/// Tree-witness construction: the tree has 2d or 2d+1 edges, keeps matched
/// pairs together, and contracting it drops alpha by at least d.
SuiteReport suite_tree_witness(const SuiteOptions& opts = {});

/// Chordal-gadget sweep over seeded triangle-free base instances:
/// satisfiability within budget must coincide with contraction blocking
/// (and optionally deletion blocking), gadgets must certify (chordal,
/// alpha = vars+1), and optionally all witness translations must round-trip.
struct ChordalSweepSelect {
  bool contraction = true;
  bool deletion = true;
  bool roundtrips = false;
};
SuiteReport suite_chordal_gadget(const SuiteOptions& opts,
                                 const ChordalSweepSelect& select);

/// Apex-gadget sweep: vertex cover within budget must coincide with clique
/// contraction blocking, gadgets must certify, optional round-trips.
SuiteReport suite_apex_gadget(const SuiteOptions& opts, bool roundtrips);

/// Round-trip-only view over both gadget sweeps.
SuiteReport suite_roundtrips(const SuiteOptions& opts = {});

/// Dispatch by CLI suite name: koenig, forest-criticality, bipartite-oracle,
/// gadget-thm2, gadget-thm3, gadget-thm6, roundtrips.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

}  // namespace blocker
