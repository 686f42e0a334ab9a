#include "mist/kernel.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "mist/bipartite.hpp"
#include "mist/errors.hpp"
#include "mist/expansion.hpp"
#include "mist/hypergraph.hpp"

namespace mist {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

VertexSet sorted_unique(std::span<const Vertex> in) {
  VertexSet out(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Forest over vertex ids 0..n-1 supporting edge edits and path queries.
class EditableForest {
 public:
  explicit EditableForest(int n) : adjacency_(idx(n)) {}

  void add(Vertex a, Vertex b) {
    insert(a, b);
    insert(b, a);
  }

  void remove(Vertex a, Vertex b) {
    erase(a, b);
    erase(b, a);
  }

  int degree(Vertex v) const { return static_cast<int>(adjacency_[idx(v)].size()); }
  bool has(Vertex a, Vertex b) const {
    const auto& nb = adjacency_[idx(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
  }

  /// Vertices on the path from `from` to `to`, both included; empty if disconnected.
  std::vector<Vertex> path(Vertex from, Vertex to) const {
    std::vector<Vertex> parent(adjacency_.size(), -1);
    std::vector<Vertex> queue{from};
    parent[idx(from)] = from;
    for (std::size_t head = 0; head < queue.size() && parent[idx(to)] < 0; ++head) {
      for (Vertex w : adjacency_[idx(queue[head])]) {
        if (parent[idx(w)] < 0) {
          parent[idx(w)] = queue[head];
          queue.push_back(w);
        }
      }
    }
    if (parent[idx(to)] < 0) return {};
    std::vector<Vertex> out{to};
    while (out.back() != from) out.push_back(parent[idx(out.back())]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
      for (Vertex v : adjacency_[u]) {
        if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
      }
    }
    return out;
  }

 private:
  void insert(Vertex a, Vertex b) {
    auto& nb = adjacency_[idx(a)];
    nb.insert(std::lower_bound(nb.begin(), nb.end(), b), b);
  }
  void erase(Vertex a, Vertex b) {
    auto& nb = adjacency_[idx(a)];
    nb.erase(std::lower_bound(nb.begin(), nb.end(), b));
  }

  std::vector<std::vector<Vertex>> adjacency_;
};

class Components {
 public:
  explicit Components(int n) : parent_(idx(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  Vertex find(Vertex x) {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[idx(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<Vertex> parent_;
};

// S has L-expansion 2 iff the doubled S side can be matched into L.
std::optional<Matching> doubled_matching(const Graph& g, const VertexSet& s, const VertexSet& l) {
  const BipartiteSubgraph b = bipartite_between(g, s, l);
  std::vector<std::vector<int>> doubled;
  for (int i = 0; i < b.x_size(); ++i) {
    doubled.push_back(b.x_adjacency(i));
    doubled.push_back(b.x_adjacency(i));
  }
  Matching m = maximum_matching(doubled, b.y_size());
  if (m.size() != 2 * b.x_size()) return std::nullopt;
  return m;
}

struct SLPair {
  VertexSet s;
  VertexSet l;
};

// Shrinks (S', L') until B(S, L) has a spanning tree whose L-vertices all have
// degree at most 2, and returns that tree.
SpanningTree low_degree_tree(const Graph& g, SLPair& pair) {
  while (true) {
    const VertexSet& s = pair.s;
    const VertexSet& l = pair.l;
    if (s.size() == 1) {
      std::vector<Edge> star;
      for (Vertex w : l) star.push_back(make_edge(s.front(), w));
      return SpanningTree(set_union(s, l), std::move(star));
    }

    // Hyperedge i is N(l[i]) written in positions of s.
    std::vector<VertexSet> hyperedges;
    hyperedges.reserve(l.size());
    for (Vertex w : l) {
      VertexSet e;
      for (Vertex u : g.neighbors(w)) {
        const auto it = std::lower_bound(s.begin(), s.end(), u);
        if (it == s.end() || *it != u) throw InvariantError("find_sl: N(L') is not inside S'");
        e.push_back(static_cast<Vertex>(it - s.begin()));
      }
      hyperedges.push_back(std::move(e));
    }
    const Hypergraph h(static_cast<int>(s.size()), hyperedges);

    if (const auto hypertree = greedy_hypertree(h)) {
      const ShrunkTree shrunk = shrink_to_tree(h, *hypertree);
      std::vector<Edge> edges;
      std::vector<char> used(l.size(), 0);
      for (const auto& [id, e] : shrunk.edge_map) {
        const Vertex w = l[idx(id)];
        used[idx(id)] = 1;
        edges.push_back(make_edge(s[idx(e.u)], w));
        edges.push_back(make_edge(s[idx(e.v)], w));
      }
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!used[i]) edges.push_back(make_edge(l[i], g.neighbors(l[i]).front()));
      }
      return SpanningTree(set_union(s, l), std::move(edges));
    }

    const auto partition = deficient_partition(h);
    if (!partition) throw InvariantError("find_sl: hypergraph has neither a hypertree nor a deficient partition");
    const VertexSet* chosen = nullptr;
    for (const auto& part : partition->parts) {
      const auto inside = std::count_if(hyperedges.begin(), hyperedges.end(), [&part](const VertexSet& e) {
        return std::includes(part.begin(), part.end(), e.begin(), e.end());
      });
      if (inside >= 2 * static_cast<long>(part.size())) {
        chosen = &part;
        break;
      }
    }
    if (chosen == nullptr) throw InvariantError("find_sl: no part holds twice its size in hyperedges");

    VertexSet x;
    for (Vertex p : *chosen) x.push_back(s[idx(p)]);
    VertexSet y;
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (std::includes(chosen->begin(), chosen->end(), hyperedges[i].begin(), hyperedges[i].end())) y.push_back(l[i]);
    }
    const ExpansionPair next = find_expansion_2(bipartite_between(g, x, y));
    pair = {next.x_prime, next.y_prime};
  }
}

// Promotes S-leaves through favourite edges until every S-vertex is internal.
SpanningTree promote(const Graph& g, const VertexSet& s, const VertexSet& l, const SpanningTree& initial,
                     int& promotions) {
  const auto matching = doubled_matching(g, s, l);
  if (!matching) throw InvariantError("find_sl: no matching saturates the doubled S side");
  // favourite[i] = the two L-partners of s[i]: first from M1, then from M2.
  std::vector<std::pair<Vertex, Vertex>> favourite;
  for (std::size_t i = 0; i < s.size(); ++i) {
    favourite.emplace_back(l[idx(matching->mate_x[2 * i])], l[idx(matching->mate_x[2 * i + 1])]);
  }

  EditableForest tree(g.vertex_count());
  for (const Edge& e : initial.edges()) tree.add(e.u, e.v);

  promotions = 0;
  const int limit = 2 * static_cast<int>(s.size());
  while (true) {
    const auto leaf = std::find_if(s.begin(), s.end(), [&tree](Vertex v) { return tree.degree(v) < 2; });
    if (leaf == s.end()) break;
    if (++promotions > limit) throw InvariantError("find_sl: favourite-edge promotion does not terminate");
    const Vertex v = *leaf;
    const auto& [first, second] = favourite[idx(leaf - s.begin())];
    const Vertex u = !tree.has(v, first) ? first : second;
    if (tree.has(v, u)) throw InvariantError("find_sl: S-leaf already holds both favourite edges");
    const auto route = tree.path(u, v);
    if (route.size() < 3) throw InvariantError("find_sl: favourite edge endpoints not linked in the tree");
    tree.remove(u, route[1]);
    tree.add(u, v);
  }
  return SpanningTree(set_union(s, l), tree.edges());
}

}  // namespace

SLCertificate find_sl(const Graph& g, std::span<const Vertex> independent) {
  const int n = g.vertex_count();
  if (n < 3) throw PreconditionError("find_sl: graph needs at least 3 vertices");
  if (!is_connected(g)) throw PreconditionError("find_sl: graph is disconnected");
  const VertexSet in_set = sorted_unique(independent);
  if (!in_set.empty() && (in_set.front() < 0 || in_set.back() >= n)) {
    throw PreconditionError("find_sl: independent set vertex out of range");
  }
  if (3 * static_cast<long>(in_set.size()) < 2L * n) {
    throw PreconditionError("find_sl: independent set has fewer than 2n/3 vertices");
  }
  if (!is_independent(g, in_set)) throw PreconditionError("find_sl: vertex set is not independent");

  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(in_set, v)) rest.push_back(v);
  }
  VertexSet attached;
  for (Vertex v : in_set) {
    if (g.degree(v) > 0) attached.push_back(v);
  }

  const ExpansionPair first = find_expansion_2(bipartite_between(g, rest, attached));
  SLPair pair{first.x_prime, first.y_prime};
  SLCertificate cert;
  cert.initial_tree = low_degree_tree(g, pair);
  cert.s = std::move(pair.s);
  cert.l = std::move(pair.l);
  cert.tree = promote(g, cert.s, cert.l, cert.initial_tree, cert.promotions);

  if (auto broken = certificate_violation(g, cert.s, cert.l, cert.tree)) {
    throw InvariantError("find_sl: certificate violates " + *broken);
  }
  return cert;
}

std::optional<std::string> sl_pair_violation(const Graph& g, const VertexSet& s, const VertexSet& l) {
  const int n = g.vertex_count();
  if (s.empty()) return "S nonempty";
  if (l.empty()) return "L nonempty";
  for (const VertexSet* set : {&s, &l}) {
    if (!std::is_sorted(set->begin(), set->end()) ||
        std::adjacent_find(set->begin(), set->end()) != set->end() || set->front() < 0 || set->back() >= n) {
      return "sorted in-range vertex sets";
    }
  }
  const VertexSet both = set_union(s, l);
  if (both.size() != s.size() + l.size()) return "S and L disjoint";
  if (!is_independent(g, l)) return "L independent";
  if (neighborhood(g, l) != s) return "N(L)=S";
  if (!doubled_matching(g, s, l)) return "S has L-expansion 2";
  return std::nullopt;
}

std::optional<std::string> certificate_violation(const Graph& g, const VertexSet& s, const VertexSet& l,
                                                 const SpanningTree& tree) {
  if (auto broken = sl_pair_violation(g, s, l)) return broken;
  if (tree.vertices() != set_union(s, l)) return "tree spans S and L";
  for (const Edge& e : tree.edges()) {
    const bool crosses = (contains(s, e.u) && contains(l, e.v)) || (contains(l, e.u) && contains(s, e.v));
    if (!crosses || !g.adjacent(e.u, e.v)) return "tree edges lie in B(S,L)";
  }
  if (tree.internal_count(s) != static_cast<int>(s.size())) return "all S internal";
  if (tree.internal_count(l) != static_cast<int>(s.size()) - 1) return "exactly |S|-1 of L internal";
  return std::nullopt;
}

Surgery replace_sl(const Graph& g, const VertexSet& s, const VertexSet& l) {
  const int n = g.vertex_count();
  Surgery out;
  out.index_map.assign(idx(n), -1);
  int next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!contains(s, v) && !contains(l, v)) out.index_map[idx(v)] = next++;
  }
  out.v_s = next;
  out.v_l = next + 1;
  for (Vertex v : neighborhood(g, s)) {
    if (!contains(l, v)) out.neighbor_map.push_back(v);
  }

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const Vertex a = out.index_map[idx(e.u)];
    const Vertex b = out.index_map[idx(e.v)];
    if (a >= 0 && b >= 0) edges.push_back(make_edge(a, b));
  }
  for (Vertex u : out.neighbor_map) edges.push_back(make_edge(out.v_s, out.index_map[idx(u)]));
  edges.push_back(make_edge(out.v_s, out.v_l));
  out.graph = Graph(next + 2, edges);
  return out;
}

Rule3Result apply_rule3(const Graph& g, int k, const SLCertificate& cert) {
  if (auto broken = certificate_violation(g, cert.s, cert.l, cert.tree)) {
    throw PreconditionError("apply_rule3: certificate violates " + *broken);
  }
  if (cert.s.size() + cert.l.size() == static_cast<std::size_t>(g.vertex_count())) {
    throw PreconditionError("apply_rule3: S and L cover the graph");
  }
  Surgery surgery = replace_sl(g, cert.s, cert.l);
  Rule3Result out;
  out.record.pre_vertex_count = g.vertex_count();
  out.record.s = cert.s;
  out.record.l = cert.l;
  out.record.v_s = surgery.v_s;
  out.record.v_l = surgery.v_l;
  out.record.neighbor_map = std::move(surgery.neighbor_map);
  out.record.index_map = std::move(surgery.index_map);
  out.record.bsl_tree = cert.tree.edges();
  out.record.initial_tree = cert.initial_tree.edges();
  out.record.delta_k = 2 * static_cast<int>(cert.s.size()) - 2;
  out.record.k_before = k;
  out.k = k - out.record.delta_k;
  out.graph = std::move(surgery.graph);
  if (!is_connected(out.graph)) throw InvariantError("apply_rule3: reduced graph is disconnected");
  return out;
}

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Solved: return "solved";
    case Outcome::Kernel: return "kernel";
    case Outcome::TrivialYes: return "trivial_yes";
    case Outcome::TrivialNo: return "trivial_no";
  }
  return "unknown";
}

KernelResult kernelize(const Graph& g, int k) {
  const int n = g.vertex_count();
  if (n < 1) throw PreconditionError("kernelize: empty graph");
  if (!is_connected(g)) throw PreconditionError("kernelize: graph is disconnected");

  KernelResult result;
  result.k_prime = k;
  if (k <= 0) {
    result.outcome = Outcome::TrivialYes;
    result.tree = dfs_tree(g, 0);
    result.reason = "k <= 0";
    return result;
  }
  if (n == 1 || k > n - 2) {
    result.outcome = Outcome::TrivialNo;
    result.reason = "k > n - 2";
    return result;
  }

  Graph current = g;
  int current_k = k;
  while (true) {
    const int size = current.vertex_count();
    // The DFS test runs before the size test: it is sound at any point and
    // answers instances such as long paths that already fit in 3k vertices.
    const SpanningTree dfs = dfs_tree(current, 0);
    if (dfs.internal_count() >= current_k) {
      result.outcome = Outcome::Solved;
      result.k_prime = current_k;
      result.tree = lift_solution(g, result.trace, dfs);
      if (result.tree->internal_count() < k) throw InvariantError("kernelize: lifted DFS tree has too few internal vertices");
      return result;
    }
    if (size <= 3 * current_k) {
      result.outcome = Outcome::Kernel;
      result.graph = std::move(current);
      result.k_prime = current_k;
      return result;
    }
    const VertexSet independent = dfs_leaf_independent_set(current, dfs);
    const SLCertificate cert = find_sl(current, independent);
    if (static_cast<int>(cert.s.size() + cert.l.size()) == size) {
      // S u L is the whole graph, so v_s would only see v_l and the k' count
      // is off by one. Rearranging any tree around the certificate shows the
      // certificate tree, with 2|S| - 1 internal vertices, is optimal here.
      if (cert.tree.internal_count() >= current_k) {
        result.outcome = Outcome::Solved;
        result.k_prime = current_k;
        result.tree = lift_solution(g, result.trace, SpanningTree::over_range(size, cert.tree.edges()));
        if (result.tree->internal_count() < k) throw InvariantError("kernelize: lifted certificate tree has too few internal vertices");
      } else {
        result.outcome = Outcome::TrivialNo;
        result.k_prime = current_k;
        result.reason = "S and L cover the reduced graph, whose optimum 2|S| - 1 is below k'";
      }
      return result;
    }
    Rule3Result reduced = apply_rule3(current, current_k, cert);
    if (reduced.graph.vertex_count() >= size || reduced.k > current_k) {
      throw InvariantError("kernelize: reduction made no progress");
    }
    result.trace.push_back(std::move(reduced.record));
    current = std::move(reduced.graph);
    current_k = reduced.k;
  }
}

Graph replay_reduction(const Graph& g, const ReductionRecord& rec) {
  if (rec.pre_vertex_count != g.vertex_count()) throw InvariantError("pre_vertex_count");
  for (const VertexSet* set : {&rec.s, &rec.l}) {
    if (set->empty() || !std::is_sorted(set->begin(), set->end()) ||
        std::adjacent_find(set->begin(), set->end()) != set->end() || set->front() < 0 ||
        set->back() >= g.vertex_count()) {
      throw InvariantError("S and L are sorted in-range vertex sets");
    }
  }
  if (set_union(rec.s, rec.l).size() != rec.s.size() + rec.l.size()) throw InvariantError("S and L disjoint");
  Surgery surgery = replace_sl(g, rec.s, rec.l);
  if (surgery.neighbor_map.empty()) throw InvariantError("N(S)\\L nonempty");
  if (surgery.neighbor_map != rec.neighbor_map) throw InvariantError("neighbor_map");
  if (surgery.index_map != rec.index_map) throw InvariantError("index_map");
  if (surgery.v_s != rec.v_s) throw InvariantError("v_s");
  if (surgery.v_l != rec.v_l) throw InvariantError("v_l");
  if (rec.delta_k != 2 * static_cast<int>(rec.s.size()) - 2) throw InvariantError("delta_k");
  return std::move(surgery.graph);
}

std::vector<Graph> replay_trace(const Graph& original, std::span<const ReductionRecord> trace) {
  std::vector<Graph> graphs{original};
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      graphs.push_back(replay_reduction(graphs.back(), trace[i]));
    } catch (const InvariantError& e) {
      throw InvariantError("reduction " + std::to_string(i) + ": " + e.what());
    }
  }
  return graphs;
}

SpanningTree lift_solution(const Graph& original, std::span<const ReductionRecord> trace, const SpanningTree& t) {
  const std::vector<Graph> graphs = replay_trace(original, trace);
  if (!is_spanning_tree_of(graphs.back(), t)) throw PreconditionError("lift_solution: tree does not span the kernel");

  SpanningTree current = t;
  for (std::size_t i = trace.size(); i-- > 0;) {
    const ReductionRecord& rec = trace[i];
    const Graph& g = graphs[i];
    std::vector<Vertex> old_id(idx(graphs[i + 1].vertex_count()), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (rec.index_map[idx(v)] >= 0) old_id[idx(rec.index_map[idx(v)])] = v;
    }

    std::vector<Edge> edges;
    std::vector<Vertex> hooked;  // old ids of the tree-neighbours of v_s
    for (const Edge& e : current.edges()) {
      const bool u_new = e.u == rec.v_s || e.u == rec.v_l;
      const bool v_new = e.v == rec.v_s || e.v == rec.v_l;
      if (u_new && v_new) continue;
      if (u_new || v_new) {
        const Vertex special = u_new ? e.u : e.v;
        const Vertex other = u_new ? e.v : e.u;
        if (special != rec.v_s) throw InvariantError("lift_solution: v_l is not a pendant of v_s");
        hooked.push_back(old_id[idx(other)]);
        continue;
      }
      edges.push_back(make_edge(old_id[idx(e.u)], old_id[idx(e.v)]));
    }
    edges.insert(edges.end(), rec.bsl_tree.begin(), rec.bsl_tree.end());
    for (Vertex u : hooked) {
      const auto s = std::find_if(rec.s.begin(), rec.s.end(), [&](Vertex x) { return g.adjacent(u, x); });
      if (s == rec.s.end()) throw InvariantError("lift_solution: neighbour of v_s has no edge into S");
      edges.push_back(make_edge(u, *s));
    }
    current = SpanningTree::over_range(g.vertex_count(), std::move(edges));
    if (!is_spanning_tree_of(g, current)) throw InvariantError("lift_solution: lifted tree uses a non-edge");
  }
  return current;
}

SpanningTree rearrange_tree(const Graph& g, const SpanningTree& t, const SLCertificate& cert) {
  if (!is_spanning_tree_of(g, t)) throw PreconditionError("rearrange_tree: tree does not span the graph");
  const int n = g.vertex_count();
  const VertexSet& s = cert.s;
  const VertexSet& l = cert.l;

  EditableForest forest(n);
  for (const Edge& e : t.edges()) {
    if (!contains(l, e.u) && !contains(l, e.v)) forest.add(e.u, e.v);
  }
  // Separate S-vertices that share a component by cutting the path edge at the lower one.
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      const auto route = forest.path(s[a], s[b]);
      if (!route.empty()) forest.remove(route[0], route[1]);
    }
  }
  for (const Edge& e : cert.tree.edges()) forest.add(e.u, e.v);

  std::vector<Edge> edges = forest.edges();
  Components components(n);
  for (const Edge& e : edges) {
    if (!components.unite(e.u, e.v)) throw InvariantError("rearrange_tree: certificate tree closed a cycle");
  }
  for (const Edge& e : g.edges()) {
    if (components.unite(e.u, e.v)) edges.push_back(e);
  }
  SpanningTree out = SpanningTree::over_range(n, std::move(edges));
  if (out.internal_count() < t.internal_count()) throw InvariantError("rearrange_tree: internal count decreased");
  if (out.internal_count(s) != static_cast<int>(s.size()) ||
      out.internal_count(l) != static_cast<int>(s.size()) - 1) {
    throw InvariantError("rearrange_tree: S/L internality pattern not met");
  }
  return out;
}

}  // namespace mist
