#include "blocker/reductions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace blocker {

namespace {

[[noreturn]] void parse_fail(size_t line_no, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                           ": " + what);
}

void validate(const Wp2SatInstance& phi) {
  if (phi.num_vars < 0 || phi.k < 0)
    throw std::invalid_argument("wp2sat: negative parameter");
  std::vector<std::pair<int, int>> seen;
  for (auto [u, v] : phi.clauses) {
    if (u == v) throw std::invalid_argument("wp2sat: clause repeats a variable");
    if (u < 0 || v < 0 || u >= phi.num_vars || v >= phi.num_vars)
      throw std::invalid_argument("wp2sat: clause variable out of range");
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("wp2sat: duplicate clause");
}

}  // namespace

Wp2SatInstance parse_wp2sat(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string buf(text);
    std::istringstream in(buf);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    while (!lines.empty() &&
           lines.back().find_first_not_of(" \t\r") == std::string::npos)
      lines.pop_back();
  }
  if (lines.empty()) parse_fail(1, "missing header \"p wp2sat ...\"");
  Wp2SatInstance phi;
  {
    std::istringstream in(lines[0]);
    std::string p, kind;
    long long vars, clauses, k;
    if (!(in >> p >> kind >> vars >> clauses >> k) || p != "p" ||
        kind != "wp2sat" || vars < 0 || clauses < 0 || k < 0)
      parse_fail(1, "expected \"p wp2sat <num_vars> <num_clauses> <k>\"");
    std::string rest;
    if (in >> rest) parse_fail(1, "trailing content in header");
    phi.num_vars = static_cast<int>(vars);
    phi.k = static_cast<int>(k);
    if (lines.size() != static_cast<size_t>(clauses) + 1)
      throw std::runtime_error("expected " + std::to_string(clauses) +
                               " clause lines, found " +
                               std::to_string(lines.size() - 1));
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i]);
    long long u, v;
    std::string rest;
    if (!(in >> u >> v) || (in >> rest)) parse_fail(i + 1, "expected \"u v\"");
    if (u < 0 || v < 0 || u >= phi.num_vars || v >= phi.num_vars)
      parse_fail(i + 1, "variable index out of range");
    if (u == v) parse_fail(i + 1, "clause repeats a variable");
    phi.clauses.emplace_back(std::min<int>(u, v), std::max<int>(u, v));
  }
  validate(phi);
  return phi;
}

std::string serialize_wp2sat(const Wp2SatInstance& phi) {
  std::ostringstream out;
  out << "p wp2sat " << phi.num_vars << ' ' << phi.clauses.size() << ' '
      << phi.k << '\n';
  for (auto [u, v] : phi.clauses) out << u << ' ' << v << '\n';
  return out.str();
}

bool assignment_satisfies(const Wp2SatInstance& phi, const Assignment& a) {
  std::vector<char> is_true(phi.num_vars, 0);
  for (int v : a.true_vars) {
    if (v < 0 || v >= phi.num_vars)
      throw std::invalid_argument("assignment variable out of range");
    is_true[v] = 1;
  }
  for (auto [u, v] : phi.clauses)
    if (!is_true[u] && !is_true[v]) return false;
  return true;
}

Wp2SatInstance vc_to_wp2sat(const Graph& g, int k) {
  Wp2SatInstance phi;
  phi.num_vars = g.vertex_count();
  phi.k = k;
  for (const auto& [u, v] : g.edges()) phi.clauses.emplace_back(u, v);
  validate(phi);
  return phi;
}

std::optional<Assignment> solve_wp2sat_bruteforce(const Wp2SatInstance& phi,
                                                  int max_vars) {
  validate(phi);
  if (phi.num_vars > max_vars)
    throw std::runtime_error("solve_wp2sat_bruteforce: instance has " +
                             std::to_string(phi.num_vars) +
                             " variables, limit is " + std::to_string(max_vars));
  int n = phi.num_vars;
  int budget = std::min(phi.k, n);
  // by size, lexicographically within a size
  for (int t = 0; t <= budget; ++t) {
    std::vector<int> idx(t);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Assignment a{VertexSet(idx.begin(), idx.end())};
      if (assignment_satisfies(phi, a)) return a;
      int i = t - 1;
      while (i >= 0 && idx[i] == n - t + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

ChordalGadget build_chordal_gadget(const Wp2SatInstance& phi) {
  validate(phi);
  ChordalGadget gadget;
  gadget.k = phi.k;
  int block = 2 * phi.k + 2;  // apex + clique of 2k+1
  int n = phi.num_vars * block + static_cast<int>(phi.clauses.size());
  gadget.graph = Graph(n);

  std::vector<char> appears(phi.num_vars, 0);
  for (auto [u, v] : phi.clauses) {
    appears[u] = 1;
    appears[v] = 1;
  }
  for (int x = 0; x < phi.num_vars; ++x)
    if (!appears[x])
      gadget.warnings.push_back("variable " + std::to_string(x) +
                                " appears in no clause");
  if (phi.clauses.empty())
    gadget.warnings.push_back(
        "no clauses: the formula is vacuously satisfiable");

  for (int x = 0; x < phi.num_vars; ++x) {
    VertexId apex = x * block;
    gadget.var_apex.push_back(apex);
    VertexSet clique;
    for (int i = 1; i <= 2 * phi.k + 1; ++i) clique.push_back(apex + i);
    for (size_t i = 0; i < clique.size(); ++i) {
      gadget.graph.add_edge(apex, clique[i]);
      for (size_t j = i + 1; j < clique.size(); ++j)
        gadget.graph.add_edge(clique[i], clique[j]);
    }
    gadget.var_clique.push_back(std::move(clique));
  }
  VertexId clause_base = phi.num_vars * block;
  for (size_t c = 0; c < phi.clauses.size(); ++c) {
    VertexId vc = clause_base + static_cast<VertexId>(c);
    gadget.clause_vertex.push_back(vc);
    for (size_t prev = 0; prev < c; ++prev)
      gadget.graph.add_edge(gadget.clause_vertex[prev], vc);
    auto [x, y] = phi.clauses[c];
    for (VertexId u : gadget.var_clique[x]) gadget.graph.add_edge(u, vc);
    for (VertexId u : gadget.var_clique[y]) gadget.graph.add_edge(u, vc);
  }
  return gadget;
}

ApexGadget build_apex_gadget(const Graph& g) {
  if (!is_c3_free(g))
    throw std::invalid_argument("build_apex_gadget: base graph has a triangle");
  if (g.edge_count() == 0)
    throw std::invalid_argument(
        "build_apex_gadget: base graph has no edges (degenerate)");
  ApexGadget gadget;
  gadget.base_n = g.vertex_count();
  gadget.universal = g.vertex_count();
  gadget.graph = Graph(g.vertex_count() + 1);
  for (const auto& [u, v] : g.edges()) gadget.graph.add_edge(u, v);
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    gadget.graph.add_edge(v, gadget.universal);
  return gadget;
}

namespace {

Wp2SatInstance formula_of(const ChordalGadget& gadget) {
  // reconstruct the clause list from the stored layout
  Wp2SatInstance phi;
  phi.num_vars = static_cast<int>(gadget.var_apex.size());
  phi.k = gadget.k;
  for (VertexId vc : gadget.clause_vertex) {
    std::pair<int, int> clause{-1, -1};
    for (int x = 0; x < phi.num_vars; ++x) {
      if (gadget.graph.has_edge(vc, gadget.var_clique[x].front())) {
        if (clause.first < 0)
          clause.first = x;
        else
          clause.second = x;
      }
    }
    if (clause.first < 0 || clause.second < 0)
      throw std::logic_error("chordal gadget: malformed clause vertex");
    phi.clauses.push_back(clause);
  }
  return phi;
}

void require_satisfying(const ChordalGadget& gadget, const Assignment& a,
                        const char* what) {
  Wp2SatInstance phi = formula_of(gadget);
  if (static_cast<int>(a.true_vars.size()) > gadget.k)
    throw std::invalid_argument(std::string(what) +
                                ": assignment exceeds the budget");
  if (!assignment_satisfies(phi, a))
    throw std::invalid_argument(std::string(what) +
                                ": assignment is not satisfying");
}

int gadget_alpha(const Graph& g) { return alpha_chordal(g).value; }

bool gadget_contraction_critical(const Graph& g, int alpha_before,
                                 const EdgeSet& s) {
  // chordal graphs stay chordal under contraction
  return alpha_chordal(contract(g, s).graph).value < alpha_before;
}

/// Spanning-forest restriction (lexicographic) followed by greedy removal,
/// re-checking criticality after each drop.
EdgeSet minimalize_critical_set(const Graph& g, EdgeSet s,
                                const std::function<bool(const EdgeSet&)>& critical) {
  // forest restriction
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  EdgeSet forest;
  for (const auto& [u, v] : s) {
    int ru = find(u), rv = find(v);
    if (ru == rv) continue;
    parent[std::max(ru, rv)] = std::min(ru, rv);
    forest.emplace_back(u, v);
  }
  // greedy removal
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (size_t i = 0; i < forest.size(); ++i) {
      EdgeSet smaller = forest;
      smaller.erase(smaller.begin() + static_cast<long>(i));
      if (critical(smaller)) {
        forest = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return forest;
}

}  // namespace

EdgeSet assignment_to_contraction_witness(const ChordalGadget& gadget,
                                          const Assignment& a) {
  require_satisfying(gadget, a, "assignment_to_contraction_witness");
  EdgeSet s;
  for (int x : a.true_vars)
    s.push_back(make_edge(gadget.var_apex[x], gadget.var_clique[x].front()));
  std::sort(s.begin(), s.end());
  return s;
}

Assignment contraction_witness_to_assignment(const ChordalGadget& gadget,
                                             const EdgeSet& s) {
  const Graph& g = gadget.graph;
  EdgeSet es = normalize_edge_set(g, s);
  if (static_cast<int>(es.size()) > gadget.k)
    throw std::invalid_argument(
        "contraction_witness_to_assignment: witness exceeds the budget");
  int alpha_before = gadget_alpha(g);
  if (!gadget_contraction_critical(g, alpha_before, es))
    throw std::invalid_argument(
        "contraction_witness_to_assignment: edge set is not critical");
  es = minimalize_critical_set(g, es, [&](const EdgeSet& cand) {
    return gadget_contraction_critical(g, alpha_before, cand);
  });

  // touched variable blocks
  int num_vars = static_cast<int>(gadget.var_apex.size());
  std::vector<char> in_s(g.vertex_count(), 0);
  for (const auto& [u, v] : es) {
    in_s[u] = 1;
    in_s[v] = 1;
  }
  std::vector<char> is_true(num_vars, 0);
  for (int x = 0; x < num_vars; ++x) {
    if (in_s[gadget.var_apex[x]]) is_true[x] = 1;
    for (VertexId u : gadget.var_clique[x])
      if (in_s[u]) is_true[x] = 1;
  }
  // one variable per clause whose blocks are both untouched
  Wp2SatInstance phi = formula_of(gadget);
  for (auto [x, y] : phi.clauses)
    if (!is_true[x] && !is_true[y]) is_true[std::min(x, y)] = 1;

  Assignment out;
  for (int x = 0; x < num_vars; ++x)
    if (is_true[x]) out.true_vars.push_back(x);
  if (static_cast<int>(out.true_vars.size()) > gadget.k)
    throw std::logic_error(
        "contraction_witness_to_assignment: translation exceeded the budget");
  if (!assignment_satisfies(phi, out))
    throw std::logic_error(
        "contraction_witness_to_assignment: translation is not satisfying");
  return out;
}

VertexSet assignment_to_deletion_witness(const ChordalGadget& gadget,
                                         const Assignment& a) {
  require_satisfying(gadget, a, "assignment_to_deletion_witness");
  VertexSet w;
  for (int x : a.true_vars) w.push_back(gadget.var_apex[x]);
  return w;
}

Assignment deletion_witness_to_assignment(const ChordalGadget& gadget,
                                          const VertexSet& w) {
  const Graph& g = gadget.graph;
  VertexSet del = normalize_vertex_set(g, w);
  if (static_cast<int>(del.size()) > gadget.k)
    throw std::invalid_argument(
        "deletion_witness_to_assignment: witness exceeds the budget");
  int alpha_before = gadget_alpha(g);
  // chordal graphs stay chordal under vertex deletion
  if (alpha_chordal(delete_vertices(g, del).graph).value >= alpha_before)
    throw std::invalid_argument(
        "deletion_witness_to_assignment: vertex set is not critical");

  std::vector<char> deleted(g.vertex_count(), 0);
  for (VertexId v : del) deleted[v] = 1;
  int num_vars = static_cast<int>(gadget.var_apex.size());
  std::vector<char> is_true(num_vars, 0);
  for (int x = 0; x < num_vars; ++x)
    if (deleted[gadget.var_apex[x]]) is_true[x] = 1;
  Wp2SatInstance phi = formula_of(gadget);
  for (size_t c = 0; c < phi.clauses.size(); ++c)
    if (deleted[gadget.clause_vertex[c]]) {
      auto [x, y] = phi.clauses[c];
      is_true[std::min(x, y)] = 1;
    }

  Assignment out;
  for (int x = 0; x < num_vars; ++x)
    if (is_true[x]) out.true_vars.push_back(x);
  if (static_cast<int>(out.true_vars.size()) > gadget.k)
    throw std::logic_error(
        "deletion_witness_to_assignment: translation exceeded the budget");
  if (!assignment_satisfies(phi, out))
    throw std::logic_error(
        "deletion_witness_to_assignment: translation is not satisfying");
  return out;
}

EdgeSet vc_witness_to_contraction_witness(const ApexGadget& gadget,
                                          const VertexSet& cover) {
  std::vector<char> in_cover(gadget.base_n, 0);
  for (VertexId v : cover) {
    if (v < 0 || v >= gadget.base_n)
      throw std::invalid_argument(
          "vc_witness_to_contraction_witness: cover vertex out of range");
    in_cover[v] = 1;
  }
  for (const auto& [u, v] : gadget.graph.edges()) {
    if (u == gadget.universal || v == gadget.universal) continue;
    if (!in_cover[u] && !in_cover[v])
      throw std::invalid_argument(
          "vc_witness_to_contraction_witness: set is not a vertex cover");
  }
  EdgeSet s;
  for (VertexId v = 0; v < gadget.base_n; ++v)
    if (in_cover[v]) s.push_back(make_edge(v, gadget.universal));
  std::sort(s.begin(), s.end());
  return s;
}

VertexSet contraction_witness_to_vc(const ApexGadget& gadget,
                                    const EdgeSet& s) {
  const Graph& g = gadget.graph;
  EdgeSet es = normalize_edge_set(g, s);
  int omega_before = omega_exact(g).value;
  auto critical = [&](const EdgeSet& cand) {
    return omega_exact(contract(g, cand).graph).value < omega_before;
  };
  if (!critical(es))
    throw std::invalid_argument(
        "contraction_witness_to_vc: edge set is not critical");
  es = minimalize_critical_set(g, es, critical);

  Graph span = spanning_on_edges(g, es);
  VertexSet cover;
  for (const VertexSet& comp : connected_components(span)) {
    if (comp.size() < 2) continue;
    bool has_universal =
        std::binary_search(comp.begin(), comp.end(), gadget.universal);
    // spare the universal vertex, or the smallest vertex otherwise
    VertexId spare = has_universal ? gadget.universal : comp.front();
    for (VertexId v : comp)
      if (v != spare) cover.push_back(v);
  }
  std::sort(cover.begin(), cover.end());

  // must cover the base graph
  std::vector<char> in_cover(gadget.base_n, 0);
  for (VertexId v : cover) {
    if (v >= gadget.base_n)
      throw std::logic_error("contraction_witness_to_vc: unexpected vertex");
    in_cover[v] = 1;
  }
  for (const auto& [u, v] : g.edges()) {
    if (u == gadget.universal || v == gadget.universal) continue;
    if (!in_cover[u] && !in_cover[v])
      throw std::logic_error(
          "contraction_witness_to_vc: translation is not a vertex cover");
  }
  return cover;
}

}  // namespace blocker
