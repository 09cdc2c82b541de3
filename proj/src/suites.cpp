#include "blocker/suites.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "blocker/blockers.hpp"
#include "blocker/generators.hpp"
#include "blocker/reductions.hpp"

namespace blocker {

namespace {

template <typename F>
void parallel_for(long long count, F&& f) {
  long long hw = std::max(1u, std::thread::hardware_concurrency());
  int nthreads = static_cast<int>(std::min<long long>(hw, count));
  if (nthreads <= 1) {
    for (long long i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<long long> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      while (true) {
        long long i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) break;
        f(i);
      }
    });
  for (auto& th : pool) th.join();
}

uint64_t derive_seed(uint64_t base, long long index) {
  uint64_t s = base + 0x632be59bd9b4e019ULL * (static_cast<uint64_t>(index) + 1);
  return rng::mix(s);
}

std::string describe_failure(const std::string& params,
                             const std::string& reason, const Graph& g) {
  return "# " + params + "\n# reason: " + reason + "\n" + serialize_edge_list(g);
}

bool is_independent_set(const Graph& g, const VertexSet& vs) {
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.has_edge(vs[i], vs[j])) return false;
  return true;
}

bool is_valid_matching(const Graph& g, const EdgeSet& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const auto& [u, v] : m) {
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = 1;
  }
  return true;
}

/// Possibly disconnected bipartite graph: random parity classes, cross edges
/// kept with probability p.
Graph gen_loose_bipartite(int n, double p, uint64_t seed) {
  rng::Stream rnd(seed);
  Graph g(n);
  std::vector<int> parity(n);
  for (int v = 0; v < n; ++v) parity[v] = static_cast<int>(rnd.below(2));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (parity[u] != parity[v] && rnd.chance(p)) g.add_edge(u, v);
  return g;
}

double pick_density(rng::Stream& rnd) {
  static constexpr double kChoices[] = {0.15, 0.3, 0.5, 0.75};
  return kChoices[rnd.below(4)];
}

struct SlotCollector {
  std::vector<std::vector<std::string>> slots;
  explicit SlotCollector(long long count) : slots(count) {}
  void add(long long i, std::string text) {
    slots[i].push_back(std::move(text));
  }
  void drain_into(SuiteReport& report) {
    for (auto& slot : slots)
      for (auto& f : slot) report.failures.push_back(std::move(f));
  }
};

}  // namespace

int alpha_by_enumeration(const Graph& g, int max_vars) {
  int n = g.vertex_count();
  if (n > max_vars || n > 25)
    throw std::runtime_error("alpha_by_enumeration: graph too large");
  std::vector<uint32_t> adj(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId u : g.neighbors(v)) adj[v] |= uint32_t{1} << u;
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    bool independent = true;
    for (uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & mask) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, std::popcount(mask));
  }
  return best;
}

// --- catalog -----------------------------------------------------------------

namespace {

std::vector<std::vector<int>> permutations_of(int t) {
  std::vector<int> base(t);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return out;
}

uint64_t canonical_matrix(const std::vector<uint32_t>& rows, int t,
                          const std::vector<std::vector<int>>& perms) {
  int s = static_cast<int>(rows.size());
  uint64_t best = ~uint64_t{0};
  std::vector<uint32_t> permuted(s);
  for (const auto& tau : perms) {
    for (int i = 0; i < s; ++i) {
      uint32_t r = 0;
      for (int j = 0; j < t; ++j)
        if ((rows[i] >> tau[j]) & 1) r |= uint32_t{1} << j;
      permuted[i] = r;
    }
    std::sort(permuted.begin(), permuted.end());
    uint64_t packed = 0;
    for (int i = 0; i < s; ++i)
      packed |= static_cast<uint64_t>(permuted[i]) << (i * t);
    best = std::min(best, packed);
  }
  return best;
}

}  // namespace

std::vector<Graph> connected_bipartite_catalog(int max_n) {
  if (max_n < 1 || max_n > 8)
    throw std::invalid_argument(
        "connected_bipartite_catalog: max_n must be in [1, 8]");
  std::vector<Graph> out;
  std::unordered_set<uint64_t> seen;
  std::vector<std::vector<std::vector<int>>> perms(9);
  for (int t = 1; t <= 8; ++t) perms[t] = permutations_of(t);

  for (int n = 1; n <= max_n; ++n) {
    if (n == 1) {
      out.emplace_back(1);
      continue;
    }
    for (int a = 1; a <= n / 2; ++a) {
      int b = n - a;
      uint32_t full_row = (uint32_t{1} << b) - 1;
      for (uint32_t bits = 0; bits < (uint32_t{1} << (a * b)); ++bits) {
        std::vector<uint32_t> rows(a);
        bool degenerate = false;
        uint32_t col_cover = 0;
        for (int i = 0; i < a; ++i) {
          rows[i] = (bits >> (i * b)) & full_row;
          if (rows[i] == 0) degenerate = true;
          col_cover |= rows[i];
        }
        if (degenerate || col_cover != full_row) continue;  // isolated vertex

        // connectivity over vertices 0..a-1 (rows) and a..n-1 (columns)
        std::vector<uint32_t> adj(n, 0);
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j)
            if ((rows[i] >> j) & 1) {
              adj[i] |= uint32_t{1} << (a + j);
              adj[a + j] |= uint32_t{1} << i;
            }
        uint32_t reach = 1, prev = 0;
        while (reach != prev) {
          prev = reach;
          for (int v = 0; v < n; ++v)
            if ((reach >> v) & 1) reach |= adj[v];
        }
        if (reach != (uint32_t{1} << n) - 1) continue;

        uint64_t canon = canonical_matrix(rows, b, perms[b]);
        if (a == b) {
          std::vector<uint32_t> cols(b, 0);
          for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
              if ((rows[i] >> j) & 1) cols[j] |= uint32_t{1} << i;
          canon = std::min(canon, canonical_matrix(cols, a, perms[a]));
        }
        uint64_t key = static_cast<uint64_t>(a) | (static_cast<uint64_t>(b) << 4)
                       | (canon << 8);
        if (!seen.insert(key).second) continue;

        Graph g(n);
        for (int i = 0; i < a; ++i)
          for (int j = 0; j < b; ++j)
            if ((rows[i] >> j) & 1) g.add_edge(i, a + j);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

// --- suites -------------------------------------------------------------------

SuiteReport suite_koenig(const SuiteOptions& opts) {
  SuiteReport report{"koenig", 0, {}};
  int count = opts.count > 0 ? opts.count : 1000;
  int max_n = opts.max_n > 0 ? opts.max_n : 12;
  if (max_n > 18)
    throw std::invalid_argument("suite koenig: max_n above the referee limit");
  report.checked = count;
  SlotCollector fails(count);
  parallel_for(count, [&](long long i) {
    rng::Stream rnd(derive_seed(opts.seed, i));
    int n = 1 + static_cast<int>(rnd.below(static_cast<uint64_t>(max_n)));
    double p = pick_density(rnd);
    Graph g = (i % 2 == 0) ? gen_connected_bipartite(n, p, rnd.next())
                           : gen_loose_bipartite(n, p, rnd.next());
    std::string params = "suite=koenig index=" + std::to_string(i);
    try {
      int alpha_ref = alpha_by_enumeration(g);
      Matching m = max_matching_bipartite(g);
      if (!is_valid_matching(g, m.edges))
        fails.add(i, describe_failure(params, "matching is invalid", g));
      int mu = static_cast<int>(m.edges.size());
      if (mu != n - alpha_ref)
        fails.add(i, describe_failure(
                         params,
                         "matching size " + std::to_string(mu) +
                             " != n - alpha = " + std::to_string(n - alpha_ref),
                         g));
      ParamWitness ab = alpha_bipartite(g);
      if (ab.value != alpha_ref ||
          static_cast<int>(ab.witness.size()) != alpha_ref ||
          !is_independent_set(g, ab.witness))
        fails.add(i, describe_failure(params, "alpha_bipartite mismatch", g));
      if (tau(g) != n - alpha_ref)
        fails.add(i, describe_failure(params, "tau mismatch", g));
    } catch (const std::exception& e) {
      fails.add(i, describe_failure(params, std::string("exception: ") + e.what(), g));
    }
  });
  fails.drain_into(report);
  return report;
}

namespace {

// alpha of a graph given as adjacency masks over at most 6 vertices
int alpha_tiny(const uint32_t* adj, int n) {
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (uint32_t rest = mask; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (adj[v] & mask) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, std::popcount(mask));
  }
  return best;
}

}  // namespace

SuiteReport suite_forest_criticality(const SuiteOptions& opts) {
  SuiteReport report{"forest-criticality", 0, {}};
  int max_n = opts.max_n > 0 ? opts.max_n : 6;
  if (max_n > 6)
    throw std::invalid_argument(
        "suite forest-criticality: max_n above 6 is not exhaustive-friendly");
  std::atomic<long long> checked{0};
  std::vector<std::vector<std::string>> per_n_failures(max_n + 1);

  for (int n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int np = static_cast<int>(pairs.size());
    long long graph_count = 1ll << np;
    std::vector<std::vector<std::string>> slots(
        static_cast<size_t>(graph_count));

    parallel_for(graph_count, [&](long long gmask) {
      uint32_t adj[6] = {0, 0, 0, 0, 0, 0};
      for (int e = 0; e < np; ++e)
        if ((gmask >> e) & 1) {
          adj[pairs[e].first] |= uint32_t{1} << pairs[e].second;
          adj[pairs[e].second] |= uint32_t{1} << pairs[e].first;
        }
      int alpha_g = alpha_tiny(adj, n);
      std::vector<char> crit(size_t{1} << np, 0);

      // criticality of every contraction subset
      uint32_t gm = static_cast<uint32_t>(gmask);
      uint32_t s = gm;
      while (true) {
        // components under s
        int parent[6];
        std::iota(parent, parent + n, 0);
        auto find = [&](int x) {
          while (parent[x] != x) x = parent[x] = parent[parent[x]];
          return x;
        };
        for (int e = 0; e < np; ++e)
          if ((s >> e) & 1) {
            int ru = find(pairs[e].first), rv = find(pairs[e].second);
            if (ru != rv) parent[std::max(ru, rv)] = std::min(ru, rv);
          }
        int comp_id[6];
        int nn = 0;
        for (int v = 0; v < n; ++v)
          if (find(v) == v) comp_id[v] = nn++;
        for (int v = 0; v < n; ++v) comp_id[v] = comp_id[find(v)];
        uint32_t cadj[6] = {0, 0, 0, 0, 0, 0};
        for (int e = 0; e < np; ++e)
          if ((gmask >> e) & 1) {
            int cu = comp_id[pairs[e].first], cv = comp_id[pairs[e].second];
            if (cu != cv) {
              cadj[cu] |= uint32_t{1} << cv;
              cadj[cv] |= uint32_t{1} << cu;
            }
          }
        crit[s] = alpha_tiny(cadj, nn) < alpha_g;
        checked.fetch_add(1, std::memory_order_relaxed);
        if (s == 0) break;
        s = (s - 1) & gm;
      }

      // minimal critical sets must span forests
      s = gm;
      while (true) {
        if (crit[s]) {
          bool minimal = true;
          for (uint32_t rest = s; rest && minimal;) {
            uint32_t bit = rest & (0u - rest);
            rest ^= bit;
            if (crit[s ^ bit]) minimal = false;
          }
          if (minimal) {
            int parent[6];
            std::iota(parent, parent + n, 0);
            auto find = [&](int x) {
              while (parent[x] != x) x = parent[x] = parent[parent[x]];
              return x;
            };
            int edges = 0, merges = 0;
            uint32_t touched = 0;
            for (int e = 0; e < np; ++e)
              if ((s >> e) & 1) {
                ++edges;
                touched |= uint32_t{1} << pairs[e].first;
                touched |= uint32_t{1} << pairs[e].second;
                int ru = find(pairs[e].first), rv = find(pairs[e].second);
                if (ru != rv) {
                  parent[std::max(ru, rv)] = std::min(ru, rv);
                  ++merges;
                }
              }
            bool forest = (merges == edges);
            (void)touched;
            if (!forest) {
              Graph g(n);
              for (int e = 0; e < np; ++e)
                if ((gmask >> e) & 1) g.add_edge(pairs[e].first, pairs[e].second);
              std::ostringstream why;
              why << "minimal critical set {";
              for (int e = 0; e < np; ++e)
                if ((s >> e) & 1)
                  why << " (" << pairs[e].first << "," << pairs[e].second << ")";
              why << " } does not span a forest";
              slots[static_cast<size_t>(gmask)].push_back(describe_failure(
                  "suite=forest-criticality n=" + std::to_string(n),
                  why.str(), g));
            }
          }
        }
        if (s == 0) break;
        s = (s - 1) & gm;
      }
    });
    for (auto& slot : slots)
      for (auto& f : slot) per_n_failures[n].push_back(std::move(f));
  }
  report.checked = checked.load();
  for (int n = 1; n <= max_n; ++n)
    for (auto& f : per_n_failures[n]) report.failures.push_back(std::move(f));
  return report;
}

SuiteReport suite_bipartite_oracle(const SuiteOptions& opts) {
  SuiteReport report{"bipartite-oracle", 0, {}};
  int max_n = opts.max_n > 0 ? opts.max_n : 8;
  std::vector<Graph> catalog = connected_bipartite_catalog(max_n);
  long long total = static_cast<long long>(catalog.size());
  SlotCollector fails(total);
  std::atomic<long long> checked{0};

  parallel_for(total, [&](long long gi) {
    const Graph& g = catalog[gi];
    bool yes[3][6];
    for (int d = 1; d <= 2; ++d) {
      for (int k = 0; k <= 5; ++k) {
        std::string params = "suite=bipartite-oracle graph=" +
                             std::to_string(gi) + " k=" + std::to_string(k) +
                             " d=" + std::to_string(d);
        try {
          BlockerResult fast = solve_bipartite_contraction_alpha(g, k, d);
          BlockerResult brute = solve_bruteforce(
              {g, Operation::contraction, ParameterKind::independence, k, d});
          checked.fetch_add(1, std::memory_order_relaxed);
          yes[d][k] = brute.yes;
          if (fast.yes != brute.yes) {
            fails.add(gi, describe_failure(
                              params,
                              std::string("answers differ: polynomial=") +
                                  (fast.yes ? "yes" : "no") + " exhaustive=" +
                                  (brute.yes ? "yes" : "no"),
                              g));
            continue;
          }
          for (const BlockerResult* r : {&fast, &brute}) {
            if (!r->yes) continue;
            if (!r->edge_witness || static_cast<int>(r->edge_witness->size()) > k ||
                !check_critical(g, Operation::contraction, *r->edge_witness,
                                ParameterKind::independence, d))
              fails.add(gi, describe_failure(params, "witness fails verification", g));
          }
        } catch (const std::exception& e) {
          yes[d][k] = false;
          fails.add(gi, describe_failure(params,
                                         std::string("exception: ") + e.what(), g));
        }
      }
    }
    // monotone in k, antitone in d
    for (int d = 1; d <= 2; ++d)
      for (int k = 0; k < 5; ++k)
        if (yes[d][k] && !yes[d][k + 1])
          fails.add(gi, describe_failure("suite=bipartite-oracle graph=" +
                                             std::to_string(gi),
                                         "answer not monotone in k", g));
    for (int k = 0; k <= 5; ++k)
      if (yes[2][k] && !yes[1][k])
        fails.add(gi, describe_failure(
                          "suite=bipartite-oracle graph=" + std::to_string(gi),
                          "answer for d=2 implies d=1", g));
  });
  report.checked = checked.load();
  fails.drain_into(report);
  return report;
}

SuiteReport suite_tree_witness(const SuiteOptions& opts) {
  SuiteReport report{"tree-witness", 0, {}};
  int count = opts.count > 0 ? opts.count : 500;
  int max_n = opts.max_n > 0 ? opts.max_n : 14;
  long long total = 2ll * count;  // d = 1 and d = 2
  report.checked = total;
  SlotCollector fails(total);
  parallel_for(total, [&](long long i) {
    int d = 1 + static_cast<int>(i / count);
    rng::Stream rnd(derive_seed(opts.seed ^ (0xd00dULL * d), i % count));
    int lo = 2 * d + 2;
    int n = lo + static_cast<int>(rnd.below(
                     static_cast<uint64_t>(std::max(1, max_n - lo + 1))));
    double p = pick_density(rnd);
    Graph g = gen_connected_bipartite(n, p, rnd.next());
    std::string params = "suite=tree-witness d=" + std::to_string(d) +
                         " index=" + std::to_string(i % count);
    try {
      int alpha_before = alpha_exact(g).value;
      if (alpha_before < d + 1) {
        fails.add(i, describe_failure(params, "generator broke alpha >= d+1", g));
        return;
      }
      Matching m = max_matching_bipartite(g);
      TreeWitness tw = build_tree_witness(g, m, d);
      int te = static_cast<int>(tw.edges.size());
      if (te != 2 * d && te != 2 * d + 1) {
        fails.add(i, describe_failure(params,
                                      "tree has " + std::to_string(te) +
                                          " edges, expected 2d or 2d+1",
                                      g));
        return;
      }
      Graph span = spanning_on_edges(g, tw.edges);
      VertexSet tverts;
      for (const auto& [u, v] : tw.edges) {
        tverts.push_back(u);
        tverts.push_back(v);
      }
      std::sort(tverts.begin(), tverts.end());
      tverts.erase(std::unique(tverts.begin(), tverts.end()), tverts.end());
      if (!is_forest(span) ||
          static_cast<int>(tverts.size()) != te + 1)
        fails.add(i, describe_failure(params, "witness is not a tree", g));
      // matched endpoints enter the tree in pairs
      std::vector<char> in_t(g.vertex_count(), 0);
      for (VertexId v : tverts) in_t[v] = 1;
      for (const auto& [u, v] : m.edges)
        if (in_t[u] != in_t[v])
          fails.add(i, describe_failure(params, "matched pair split by the tree", g));
      int alpha_after = alpha_exact(contract(g, tw.edges).graph).value;
      if (alpha_after > alpha_before - d)
        fails.add(i, describe_failure(
                         params,
                         "contraction dropped alpha only to " +
                             std::to_string(alpha_after) + " from " +
                             std::to_string(alpha_before),
                         g));
    } catch (const std::exception& e) {
      fails.add(i, describe_failure(params, std::string("exception: ") + e.what(), g));
    }
  });
  fails.drain_into(report);
  return report;
}

// --- gadget sweeps ------------------------------------------------------------

namespace {

struct SweepInstance {
  Graph base;
  int k = 0;
};

SweepInstance sweep_instance(uint64_t seed, long long index, int min_n,
                             int max_n, int max_k) {
  rng::Stream rnd(derive_seed(seed, index));
  int n = min_n + static_cast<int>(rnd.below(
                      static_cast<uint64_t>(max_n - min_n + 1)));
  double p = pick_density(rnd);
  Graph base = gen_triangle_free(n, p, rnd.next());
  if (base.edge_count() == 0) base.add_edge(0, 1);
  int k = static_cast<int>(rnd.below(static_cast<uint64_t>(max_k + 1)));
  return {std::move(base), k};
}

}  // namespace

SuiteReport suite_chordal_gadget(const SuiteOptions& opts,
                                 const ChordalSweepSelect& select) {
  SuiteReport report{"chordal-gadget", 0, {}};
  int count = opts.count > 0 ? opts.count : 200;
  int max_n = opts.max_n > 0 ? opts.max_n : 7;
  int max_k = 3;
  report.checked = count;
  SlotCollector fails(count);
  const bool need_contraction = select.contraction || select.roundtrips;
  const bool need_deletion = select.deletion || select.roundtrips;

  parallel_for(count, [&](long long i) {
    auto [base, k] = sweep_instance(opts.seed, i, 2, max_n, max_k);
    std::string params = "suite=chordal-gadget index=" + std::to_string(i) +
                         " k=" + std::to_string(k);
    try {
      Wp2SatInstance phi = vc_to_wp2sat(base, k);
      ChordalGadget gadget = build_chordal_gadget(phi);
      const Graph& gg = gadget.graph;

      // structural certificate
      if (!is_chordal(gg)) {
        fails.add(i, describe_failure(params, "structure: gadget is not chordal", base));
        return;
      }
      int alpha_g = alpha_chordal(gg).value;
      if (alpha_g != phi.num_vars + 1) {
        fails.add(i, describe_failure(params, "structure: gadget alpha != vars + 1", base));
        return;
      }
      if (gg.vertex_count() <= 26 && alpha_exact(gg).value != alpha_g) {
        fails.add(i, describe_failure(params, "structure: alpha cross-check mismatch", base));
        return;
      }

      auto sat = solve_wp2sat_bruteforce(phi);

      BlockerResult rc, rd;
      if (need_contraction) {
        rc = solve_bruteforce(
            {gg, Operation::contraction, ParameterKind::independence, k, 1});
        if (select.contraction && rc.yes != sat.has_value()) {
          fails.add(i, describe_failure(params,
                                        std::string("equivalence: contraction blocker says ") +
                                            (rc.yes ? "yes" : "no") +
                                            ", satisfiability says " +
                                            (sat ? "yes" : "no"),
                                        base));
          return;
        }
        if (rc.yes &&
            (static_cast<int>(rc.edge_witness->size()) > k ||
             !check_critical(gg, Operation::contraction, *rc.edge_witness,
                             ParameterKind::independence, 1)))
          fails.add(i, describe_failure(params, "equivalence: contraction witness invalid", base));
      }
      if (need_deletion) {
        rd = solve_bruteforce(
            {gg, Operation::deletion, ParameterKind::independence, k, 1});
        if (select.deletion && rd.yes != sat.has_value()) {
          fails.add(i, describe_failure(params,
                                        std::string("equivalence: deletion blocker says ") +
                                            (rd.yes ? "yes" : "no") +
                                            ", satisfiability says " +
                                            (sat ? "yes" : "no"),
                                        base));
          return;
        }
        if (rd.yes &&
            (static_cast<int>(rd.vertex_witness->size()) > k ||
             !check_critical(gg, Operation::deletion, *rd.vertex_witness,
                             ParameterKind::independence, 1)))
          fails.add(i, describe_failure(params, "equivalence: deletion witness invalid", base));
      }

      if (select.roundtrips && sat) {
        const Assignment& a = *sat;
        // assignment -> witness -> assignment
        EdgeSet s = assignment_to_contraction_witness(gadget, a);
        if (static_cast<int>(s.size()) > k ||
            !check_critical(gg, Operation::contraction, s,
                            ParameterKind::independence, 1))
          fails.add(i, describe_failure(params, "roundtrip: forward contraction witness invalid", base));
        Assignment a2 = contraction_witness_to_assignment(gadget, s);
        if (static_cast<int>(a2.true_vars.size()) > k)
          fails.add(i, describe_failure(params, "roundtrip: contraction translation over budget", base));

        VertexSet w = assignment_to_deletion_witness(gadget, a);
        if (static_cast<int>(w.size()) > k ||
            !check_critical(gg, Operation::deletion, w,
                            ParameterKind::independence, 1))
          fails.add(i, describe_failure(params, "roundtrip: forward deletion witness invalid", base));
        Assignment a3 = deletion_witness_to_assignment(gadget, w);
        if (static_cast<int>(a3.true_vars.size()) > k)
          fails.add(i, describe_failure(params, "roundtrip: deletion translation over budget", base));

        // witness -> assignment -> witness, from the solver's own witnesses
        if (rc.yes) {
          Assignment a4 = contraction_witness_to_assignment(gadget, *rc.edge_witness);
          EdgeSet s2 = assignment_to_contraction_witness(gadget, a4);
          if (static_cast<int>(s2.size()) > k ||
              !check_critical(gg, Operation::contraction, s2,
                              ParameterKind::independence, 1))
            fails.add(i, describe_failure(params, "roundtrip: contraction witness round-trip invalid", base));
        }
        if (rd.yes) {
          Assignment a5 = deletion_witness_to_assignment(gadget, *rd.vertex_witness);
          VertexSet w2 = assignment_to_deletion_witness(gadget, a5);
          if (static_cast<int>(w2.size()) > k ||
              !check_critical(gg, Operation::deletion, w2,
                              ParameterKind::independence, 1))
            fails.add(i, describe_failure(params, "roundtrip: deletion witness round-trip invalid", base));
        }
      }
    } catch (const std::exception& e) {
      fails.add(i, describe_failure(params, std::string("exception: ") + e.what(), base));
    }
  });
  fails.drain_into(report);
  return report;
}

SuiteReport suite_apex_gadget(const SuiteOptions& opts, bool roundtrips) {
  SuiteReport report{"apex-gadget", 0, {}};
  int count = opts.count > 0 ? opts.count : 200;
  int max_n = opts.max_n > 0 ? opts.max_n : 8;
  int max_k = 4;
  report.checked = count;
  SlotCollector fails(count);

  parallel_for(count, [&](long long i) {
    auto [base, k] = sweep_instance(opts.seed ^ 0xa9e8f00dULL, i, 2, max_n, max_k);
    std::string params = "suite=apex-gadget index=" + std::to_string(i) +
                         " k=" + std::to_string(k);
    try {
      ApexGadget gadget = build_apex_gadget(base);
      const Graph& gg = gadget.graph;
      if (!is_c3_plus_p1_free(gg)) {
        fails.add(i, describe_failure(params, "structure: gadget contains an isolated triangle pattern", base));
        return;
      }
      ParamWitness om = omega_exact(gg);
      if (om.value != 3) {
        fails.add(i, describe_failure(params, "structure: gadget clique number != 3", base));
        return;
      }
      ParamWitness base_alpha = alpha_exact(base);
      int tau_base = base.vertex_count() - base_alpha.value;
      bool vc_yes = tau_base <= k;

      BlockerResult rc = solve_bruteforce(
          {gg, Operation::contraction, ParameterKind::clique, k, 1});
      if (rc.yes != vc_yes) {
        fails.add(i, describe_failure(params,
                                      std::string("equivalence: clique blocker says ") +
                                          (rc.yes ? "yes" : "no") +
                                          ", vertex cover says " +
                                          (vc_yes ? "yes" : "no"),
                                      base));
        return;
      }
      if (rc.yes &&
          (static_cast<int>(rc.edge_witness->size()) > k ||
           !check_critical(gg, Operation::contraction, *rc.edge_witness,
                           ParameterKind::clique, 1)))
        fails.add(i, describe_failure(params, "equivalence: clique contraction witness invalid", base));

      if (roundtrips && vc_yes) {
        // minimum cover = complement of a maximum independent set
        VertexSet cover;
        {
          std::vector<char> in_is(base.vertex_count(), 0);
          for (VertexId v : base_alpha.witness) in_is[v] = 1;
          for (VertexId v = 0; v < base.vertex_count(); ++v)
            if (!in_is[v]) cover.push_back(v);
        }
        EdgeSet s = vc_witness_to_contraction_witness(gadget, cover);
        if (static_cast<int>(s.size()) > k ||
            !check_critical(gg, Operation::contraction, s, ParameterKind::clique, 1))
          fails.add(i, describe_failure(params, "roundtrip: cover-to-contraction witness invalid", base));
        VertexSet back = contraction_witness_to_vc(gadget, s);
        if (static_cast<int>(back.size()) > k)
          fails.add(i, describe_failure(params, "roundtrip: cover translation over budget", base));
        if (rc.yes) {
          VertexSet u2 = contraction_witness_to_vc(gadget, *rc.edge_witness);
          EdgeSet s2 = vc_witness_to_contraction_witness(gadget, u2);
          if (static_cast<int>(u2.size()) > k ||
              static_cast<int>(s2.size()) > k ||
              !check_critical(gg, Operation::contraction, s2, ParameterKind::clique, 1))
            fails.add(i, describe_failure(params, "roundtrip: witness round-trip invalid", base));
        }
      }
    } catch (const std::exception& e) {
      fails.add(i, describe_failure(params, std::string("exception: ") + e.what(), base));
    }
  });
  fails.drain_into(report);
  return report;
}

SuiteReport suite_roundtrips(const SuiteOptions& opts) {
  ChordalSweepSelect select;
  select.contraction = false;
  select.deletion = false;
  select.roundtrips = true;
  SuiteReport chordal = suite_chordal_gadget(opts, select);
  SuiteReport apex = suite_apex_gadget(opts, true);
  SuiteReport report{"roundtrips", chordal.checked + apex.checked, {}};
  for (auto& f : chordal.failures) report.failures.push_back(std::move(f));
  for (auto& f : apex.failures) report.failures.push_back(std::move(f));
  return report;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "koenig") return suite_koenig(opts);
  if (name == "forest-criticality") return suite_forest_criticality(opts);
  if (name == "bipartite-oracle") return suite_bipartite_oracle(opts);
  if (name == "gadget-thm2") {
    ChordalSweepSelect select;
    select.deletion = false;
    return suite_chordal_gadget(opts, select);
  }
  if (name == "gadget-thm3") {
    ChordalSweepSelect select;
    select.contraction = false;
    return suite_chordal_gadget(opts, select);
  }
  if (name == "gadget-thm6") return suite_apex_gadget(opts, false);
  if (name == "roundtrips") return suite_roundtrips(opts);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace blocker
