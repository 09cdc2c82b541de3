#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace blocker {

using VertexId = int;
/// Canonical edge: (min endpoint, max endpoint).
using Edge = std::pair<VertexId, VertexId>;
/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;
/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// No self-loops, no parallel edges; adjacency is kept symmetric.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n) {}

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  /// Inserts the edge in both directions; duplicate insertions are no-ops.
  /// Throws on out-of-range ids or self-loops.
  void add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  const std::vector<VertexId>& neighbors(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

  /// All edges, canonical and sorted lexicographically.
  EdgeSet edges() const;

  void check_vertex(VertexId v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<VertexId>> adj_;
};

/// Which original vertices merged into which result vertex when an edge set
/// was contracted. Result ids are dense; component_sizes sums to the original
/// vertex count.
struct ContractionMap {
  std::vector<VertexId> component_of;  // original id -> result id
  std::vector<int> component_sizes;    // indexed by result id
};

struct ContractionResult {
  Graph graph;
  ContractionMap map;
};

struct DeletionResult {
  Graph graph;
  std::vector<VertexId> old_to_new;  // -1 for deleted vertices
};

struct Bipartition {
  VertexSet left;   // per component, the side holding the smallest id
  VertexSet right;
};

// --- text format ------------------------------------------------------------
//
// First line "n m", then m lines "u v" with 0 <= u,v < n and u != v.
// Duplicate edge lines are collapsed. The serializer writes the canonical
// form: distinct edge count in the header, edges sorted lexicographically.

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// --- elementary operations ---------------------------------------------------

/// Induced subgraph after removing `u`, with dense relabeling.
DeletionResult delete_vertices(const Graph& g, const VertexSet& u);

/// Graph on the same vertex set whose edge set is exactly `s`.
/// Throws if `s` contains a non-edge of `g`.
Graph spanning_on_edges(const Graph& g, const EdgeSet& s);

/// Contracts every edge of `s`: result vertices are the connected components
/// of the spanning subgraph on `s`, adjacent iff some original edge joins
/// their components. Result ids are assigned in ascending order of each
/// component's minimum original id.
ContractionResult contract(const Graph& g, const EdgeSet& s);

/// BFS distance; std::nullopt when u and v are in different components.
std::optional<int> distance(const Graph& g, VertexId u, VertexId v);

/// `u` together with every vertex adjacent to `u`.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& u);

// --- recognizers -------------------------------------------------------------

/// Two-coloring when one exists. Within each component the side containing
/// the smallest id is listed in `left`.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Perfect elimination ordering when the graph is chordal (lexicographic BFS
/// followed by an explicit verification pass), std::nullopt otherwise.
/// order[0] is eliminated first; every vertex's later neighbors form a clique.
std::optional<std::vector<VertexId>> is_chordal(const Graph& g);

/// True iff the graph has no triangle.
bool is_c3_free(const Graph& g);

/// True iff for every triangle T, every vertex outside T has a neighbor in T
/// (no induced triangle-plus-isolated-vertex).
bool is_c3_plus_p1_free(const Graph& g);

bool is_forest(const Graph& g);

/// Components listed by ascending minimum id, each sorted.
std::vector<VertexSet> connected_components(const Graph& g);

Graph complement(const Graph& g);

// --- set helpers -------------------------------------------------------------

/// Sorts and deduplicates; validates membership in [0, n).
VertexSet normalize_vertex_set(const Graph& g, VertexSet u);

/// Canonicalizes pairs, sorts, deduplicates; validates that every pair is an
/// edge of `g`.
EdgeSet normalize_edge_set(const Graph& g, EdgeSet s);

}  // namespace blocker
