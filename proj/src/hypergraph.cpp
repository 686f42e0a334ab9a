#include "mist/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mist/bipartite.hpp"
#include "mist/errors.hpp"

namespace mist {

namespace {

VertexSet union_of(std::span<const VertexSet> sets) {
  VertexSet out;
  for (const auto& s : sets) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Grows a hyperforest one edge at a time. For every vertex v it keeps a
// matching of the accepted edges (each with v deleted) into the vertices, so
// testing a new edge costs one augmenting-path search per vertex.
class HyperforestBuilder {
 public:
  explicit HyperforestBuilder(int n)
      : n_(n), mate_edge_(static_cast<std::size_t>(n)), mate_vertex_(static_cast<std::size_t>(n),
                                                                     std::vector<int>(static_cast<std::size_t>(n), -1)) {}

  bool try_add(const VertexSet& e) {
    if (e.size() < 2) return false;
    auto saved_edge = mate_edge_;
    auto saved_vertex = mate_vertex_;
    sets_.push_back(e);
    const int id = static_cast<int>(sets_.size()) - 1;
    for (Vertex v = 0; v < n_; ++v) {
      mate_edge_[static_cast<std::size_t>(v)].push_back(-1);
      std::vector<char> visited(static_cast<std::size_t>(n_), 0);
      if (!augment(v, id, visited)) {
        sets_.pop_back();
        mate_edge_ = std::move(saved_edge);
        mate_vertex_ = std::move(saved_vertex);
        return false;
      }
    }
    return true;
  }

  std::size_t size() const { return sets_.size(); }

 private:
  // Kuhn augmentation in the incidence graph of H \ skip.
  bool augment(Vertex skip, int edge, std::vector<char>& visited) {
    auto& mate_vertex = mate_vertex_[static_cast<std::size_t>(skip)];
    auto& mate_edge = mate_edge_[static_cast<std::size_t>(skip)];
    for (Vertex u : sets_[static_cast<std::size_t>(edge)]) {
      if (u == skip || visited[static_cast<std::size_t>(u)]) continue;
      visited[static_cast<std::size_t>(u)] = 1;
      const int holder = mate_vertex[static_cast<std::size_t>(u)];
      if (holder < 0 || augment(skip, holder, visited)) {
        mate_vertex[static_cast<std::size_t>(u)] = edge;
        mate_edge[static_cast<std::size_t>(edge)] = u;
        return true;
      }
    }
    return false;
  }

  int n_;
  std::vector<VertexSet> sets_;
  std::vector<std::vector<int>> mate_edge_;    // [skip][edge] -> vertex
  std::vector<std::vector<int>> mate_vertex_;  // [skip][vertex] -> edge
};

Hypergraph contract(const Hypergraph& h, const std::vector<int>& class_of, int class_count) {
  std::vector<VertexSet> edges;
  edges.reserve(h.edges().size());
  for (const auto& e : h.edges()) {
    VertexSet c;
    for (Vertex v : e) c.push_back(class_of[static_cast<std::size_t>(v)]);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    edges.push_back(std::move(c));
  }
  return Hypergraph(class_count, std::move(edges));
}

}  // namespace

Hypergraph::Hypergraph(int vertex_count, std::vector<VertexSet> edges) : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw PreconditionError("negative vertex count");
  for (auto& e : edges_) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw PreconditionError("empty hyperedge");
    if (e.front() < 0 || e.back() >= n_) throw PreconditionError("hyperedge vertex out of range");
  }
}

void validate_partition(const Partition& p, int n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const auto& part : p.parts) {
    if (part.empty()) throw PreconditionError("empty part in partition");
    for (Vertex v : part) {
      if (v < 0 || v >= n) throw PreconditionError("partition vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw PreconditionError("partition parts overlap");
      seen[static_cast<std::size_t>(v)] = 1;
      ++covered;
    }
  }
  if (covered != n) throw PreconditionError("partition does not cover every vertex");
}

bool satisfies_strong_hall(int vertex_count, std::span<const VertexSet> sets) {
  if (sets.empty()) return true;
  const VertexSet covered = union_of(sets);
  if (covered.size() < sets.size() + 1) return false;
  for (Vertex v : covered) {
    std::vector<std::vector<int>> adjacency;
    adjacency.reserve(sets.size());
    for (const auto& e : sets) {
      std::vector<int> row;
      for (Vertex u : e) {
        if (u != v) row.push_back(u);
      }
      if (row.empty()) return false;
      adjacency.push_back(std::move(row));
    }
    if (maximum_matching(adjacency, vertex_count).size() != static_cast<int>(sets.size())) return false;
  }
  return true;
}

bool is_hyperforest(const Hypergraph& h, std::span<const int> edge_ids) {
  std::vector<VertexSet> sets;
  sets.reserve(edge_ids.size());
  std::vector<int> ids(edge_ids.begin(), edge_ids.end());
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (int id : ids) {
    if (id < 0 || id >= h.edge_count()) throw PreconditionError("hyperedge id out of range");
    sets.push_back(h.edge(id));
  }
  return satisfies_strong_hall(h.vertex_count(), sets);
}

std::optional<Hyperforest> greedy_hypertree(const Hypergraph& h) {
  if (h.vertex_count() < 1) throw PreconditionError("greedy_hypertree needs at least one vertex");
  const auto target = static_cast<std::size_t>(h.vertex_count() - 1);
  HyperforestBuilder builder(h.vertex_count());
  Hyperforest forest;
  for (int id = 0; id < h.edge_count() && builder.size() < target; ++id) {
    if (builder.try_add(h.edge(id))) forest.edge_ids.push_back(id);
  }
  if (forest.edge_ids.size() != target) return std::nullopt;
  return forest;
}

int hyperforest_rank(const Hypergraph& h) {
  HyperforestBuilder builder(h.vertex_count());
  for (const auto& e : h.edges()) builder.try_add(e);
  return static_cast<int>(builder.size());
}

bool is_partition_connected(const Hypergraph& h) {
  if (h.vertex_count() <= 1) return true;
  return greedy_hypertree(h).has_value();
}

ShrunkTree shrink_to_tree(const Hypergraph& h, const Hyperforest& t) {
  if (static_cast<int>(t.edge_ids.size()) != h.vertex_count() - 1 || !is_hyperforest(h, t.edge_ids)) {
    throw PreconditionError("shrink_to_tree: edge set is not a hypertree");
  }
  std::vector<int> ids = t.edge_ids;
  std::sort(ids.begin(), ids.end());
  std::vector<VertexSet> sets;
  for (int id : ids) sets.push_back(h.edge(id));

  for (std::size_t i = 0; i < sets.size(); ++i) {
    while (sets[i].size() > 2) {
      const VertexSet original = sets[i];
      bool shrunk = false;
      for (Vertex v : original) {
        VertexSet smaller;
        std::copy_if(original.begin(), original.end(), std::back_inserter(smaller), [v](Vertex u) { return u != v; });
        sets[i] = std::move(smaller);
        if (satisfies_strong_hall(h.vertex_count(), sets)) {
          shrunk = true;
          break;
        }
        sets[i] = original;
      }
      if (!shrunk) throw InvariantError("shrink_to_tree: no vertex can be removed from a hyperedge");
    }
  }

  ShrunkTree out;
  std::vector<Edge> tree_edges;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    const Edge e = make_edge(sets[i][0], sets[i][1]);
    tree_edges.push_back(e);
    out.edge_map.emplace_back(ids[i], e);
  }
  out.tree = SpanningTree::over_range(h.vertex_count(), std::move(tree_edges));
  return out;
}

std::vector<int> border(const Hypergraph& h, const Partition& p) {
  validate_partition(p, h.vertex_count());
  std::vector<int> part_of(static_cast<std::size_t>(h.vertex_count()), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Vertex v : p.parts[i]) part_of[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<int> out;
  for (int id = 0; id < h.edge_count(); ++id) {
    const auto& e = h.edge(id);
    const int first = part_of[static_cast<std::size_t>(e.front())];
    if (std::any_of(e.begin(), e.end(), [&](Vertex v) { return part_of[static_cast<std::size_t>(v)] != first; })) {
      out.push_back(id);
    }
  }
  return out;
}

std::optional<Partition> deficient_partition(const Hypergraph& h) {
  if (is_partition_connected(h)) return std::nullopt;

  // classes[c] = original vertices merged into contracted vertex c.
  std::vector<VertexSet> classes(static_cast<std::size_t>(h.vertex_count()));
  for (Vertex v = 0; v < h.vertex_count(); ++v) classes[static_cast<std::size_t>(v)] = {v};

  auto class_map = [&](std::size_t a, std::size_t b) {
    // Merge class b into a (a < b); classes after b shift down by one.
    std::vector<int> class_of(static_cast<std::size_t>(h.vertex_count()));
    int next = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const int target = c == b ? static_cast<int>(a) : next++;
      for (Vertex v : classes[c]) class_of[static_cast<std::size_t>(v)] = target;
    }
    return class_of;
  };

  bool merged = true;
  while (merged && classes.size() > 1) {
    merged = false;
    for (std::size_t a = 0; a < classes.size() && !merged; ++a) {
      for (std::size_t b = a + 1; b < classes.size() && !merged; ++b) {
        const auto class_of = class_map(a, b);
        const Hypergraph contracted = contract(h, class_of, static_cast<int>(classes.size()) - 1);
        if (!is_partition_connected(contracted)) {
          classes[a].insert(classes[a].end(), classes[b].begin(), classes[b].end());
          std::sort(classes[a].begin(), classes[a].end());
          classes.erase(classes.begin() + static_cast<std::ptrdiff_t>(b));
          merged = true;
        }
      }
    }
  }

  Partition p{std::move(classes)};
  std::sort(p.parts.begin(), p.parts.end(), [](const VertexSet& x, const VertexSet& y) { return x.front() < y.front(); });
  if (border(h, p).size() + 2 > p.parts.size()) {
    throw InvariantError("deficient_partition: fixpoint partition is not deficient");
  }
  return p;
}

}  // namespace mist
