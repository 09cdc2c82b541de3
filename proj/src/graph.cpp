#include "blocker/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blocker {

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex id " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n_) + ")");
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return;  // already present
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  out.reserve(m_);
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // drop trailing blank lines
  while (!lines.empty() &&
         lines.back().find_first_not_of(" \t\r") == std::string::npos)
    lines.pop_back();
  return lines;
}

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                           ": " + what);
}

bool read_two_ints(const std::string& line, long long& a, long long& b) {
  std::istringstream in(line);
  if (!(in >> a >> b)) return false;
  std::string rest;
  if (in >> rest) return false;  // trailing garbage
  return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_fail(1, "missing header line \"n m\"");
  long long n, m;
  if (!read_two_ints(lines[0], n, m) || n < 0 || m < 0)
    parse_fail(1, "expected header \"n m\" with two nonnegative integers");
  if (lines.size() != static_cast<size_t>(m) + 1)
    throw std::runtime_error("expected " + std::to_string(m) +
                             " edge lines, found " +
                             std::to_string(lines.size() - 1));
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    size_t line_no = static_cast<size_t>(i) + 2;
    long long u, v;
    if (!read_two_ints(lines[i + 1], u, v))
      parse_fail(line_no, "expected edge line \"u v\"");
    if (u < 0 || u >= n || v < 0 || v >= n)
      parse_fail(line_no, "vertex id out of range [0, " + std::to_string(n) + ")");
    if (u == v) parse_fail(line_no, "self-loop");
    g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return g;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

VertexSet normalize_vertex_set(const Graph& g, VertexSet u) {
  for (VertexId v : u) g.check_vertex(v);
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

EdgeSet normalize_edge_set(const Graph& g, EdgeSet s) {
  for (auto& e : s) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second))
      throw std::invalid_argument("(" + std::to_string(e.first) + ", " +
                                  std::to_string(e.second) +
                                  ") is not an edge of the graph");
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& u) {
  VertexSet del = normalize_vertex_set(g, u);
  int n = g.vertex_count();
  std::vector<VertexId> old_to_new(n, -1);
  int next = 0;
  size_t di = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (di < del.size() && del[di] == v) {
      ++di;
      continue;
    }
    old_to_new[v] = next++;
  }
  Graph out(next);
  for (VertexId v = 0; v < n; ++v) {
    if (old_to_new[v] < 0) continue;
    for (VertexId w : g.neighbors(v))
      if (v < w && old_to_new[w] >= 0) out.add_edge(old_to_new[v], old_to_new[w]);
  }
  return {std::move(out), std::move(old_to_new)};
}

Graph spanning_on_edges(const Graph& g, const EdgeSet& s) {
  EdgeSet es = normalize_edge_set(g, s);
  Graph out(g.vertex_count());
  for (const auto& [u, v] : es) out.add_edge(u, v);
  return out;
}

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep the smaller id as root
    parent[b] = a;
    return true;
  }
};

}  // namespace

ContractionResult contract(const Graph& g, const EdgeSet& s) {
  EdgeSet es = normalize_edge_set(g, s);
  int n = g.vertex_count();
  Dsu dsu(n);
  for (const auto& [u, v] : es) dsu.unite(u, v);

  // Roots are component minima; dense result ids follow ascending root order.
  std::vector<VertexId> result_id(n, -1);
  int next = 0;
  for (VertexId v = 0; v < n; ++v)
    if (dsu.find(v) == v) result_id[v] = next++;

  ContractionMap map;
  map.component_of.resize(n);
  map.component_sizes.assign(next, 0);
  for (VertexId v = 0; v < n; ++v) {
    VertexId id = result_id[dsu.find(v)];
    map.component_of[v] = id;
    ++map.component_sizes[id];
  }

  Graph out(next);
  for (VertexId u = 0; u < n; ++u) {
    VertexId cu = map.component_of[u];
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      VertexId cv = map.component_of[v];
      if (cu != cv) out.add_edge(cu, cv);
    }
  }
  return {std::move(out), std::move(map)};
}

std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return 0;
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<VertexId> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == v) return dist[y];
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& u) {
  VertexSet in = normalize_vertex_set(g, u);
  std::vector<char> mark(g.vertex_count(), 0);
  for (VertexId v : in) {
    mark[v] = 1;
    for (VertexId w : g.neighbors(v)) mark[w] = 1;
  }
  VertexSet out;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (mark[v]) out.push_back(v);
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  Bipartition bip;
  for (VertexId start = 0; start < n; ++start) {
    if (color[start] >= 0) continue;
    color[start] = 0;  // component minimum goes to the left side
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      for (VertexId y : g.neighbors(x)) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          queue.push_back(y);
        } else if (color[y] == color[x]) {
          return std::nullopt;
        }
      }
    }
  }
  for (VertexId v = 0; v < n; ++v)
    (color[v] == 0 ? bip.left : bip.right).push_back(v);
  return bip;
}

namespace {

std::vector<VertexId> lex_bfs_order(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> label(n);
  std::vector<char> visited(n, 0);
  std::vector<VertexId> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (VertexId v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best < 0 || label[v] > label[best]) best = v;
    }
    visited[best] = 1;
    order.push_back(best);
    for (VertexId u : g.neighbors(best))
      if (!visited[u]) label[u].push_back(n - step);
  }
  return order;
}

bool verify_peo(const Graph& g, const std::vector<VertexId>& peo) {
  int n = g.vertex_count();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[peo[i]] = i;
  for (VertexId v = 0; v < n; ++v) {
    // later neighbors of v must induce a clique; it suffices to check that
    // all of them (except the earliest) are adjacent to the earliest one
    VertexId first = -1;
    for (VertexId u : g.neighbors(v))
      if (pos[u] > pos[v] && (first < 0 || pos[u] < pos[first])) first = u;
    if (first < 0) continue;
    for (VertexId u : g.neighbors(v)) {
      if (u == first || pos[u] <= pos[v]) continue;
      if (!g.has_edge(first, u)) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<VertexId>> is_chordal(const Graph& g) {
  std::vector<VertexId> order = lex_bfs_order(g);
  std::reverse(order.begin(), order.end());
  if (!verify_peo(g, order)) return std::nullopt;
  return order;
}

namespace {

template <typename F>
void for_each_triangle(const Graph& g, F&& f) {
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (VertexId v : g.neighbors(u)) {
      if (v <= u) continue;
      // common neighbors beyond v: intersect sorted adjacency lists
      const auto& au = g.neighbors(u);
      const auto& av = g.neighbors(v);
      auto iu = std::upper_bound(au.begin(), au.end(), v);
      auto iv = std::upper_bound(av.begin(), av.end(), v);
      while (iu != au.end() && iv != av.end()) {
        if (*iu < *iv) {
          ++iu;
        } else if (*iv < *iu) {
          ++iv;
        } else {
          if (!f(u, v, *iu)) return;
          ++iu;
          ++iv;
        }
      }
    }
  }
}

}  // namespace

bool is_c3_free(const Graph& g) {
  bool found = false;
  for_each_triangle(g, [&](VertexId, VertexId, VertexId) {
    found = true;
    return false;
  });
  return !found;
}

bool is_c3_plus_p1_free(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> near(n, 0);
  bool ok = true;
  for_each_triangle(g, [&](VertexId a, VertexId b, VertexId c) {
    std::fill(near.begin(), near.end(), 0);
    for (VertexId t : {a, b, c}) {
      near[t] = 1;
      for (VertexId w : g.neighbors(t)) near[w] = 1;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (!near[v]) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<VertexSet> out;
  for (VertexId start = 0; start < n; ++start) {
    if (seen[start]) continue;
    VertexSet comp;
    std::deque<VertexId> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      VertexId x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_forest(const Graph& g) {
  auto comps = connected_components(g);
  return g.edge_count() == g.vertex_count() - static_cast<int>(comps.size());
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  Graph out(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace blocker
