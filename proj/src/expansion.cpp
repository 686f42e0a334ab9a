#include "mist/expansion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "mist/errors.hpp"

namespace mist {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& bits) {
  int total = 0;
  for (auto word : bits) total += std::popcount(word);
  return total;
}

// Every nonempty subset of rows[from..] joined with `acc` (of `chosen` rows)
// reaches at least c per chosen row.
bool all_subsets_expand(const std::vector<Bits>& rows, std::size_t from, const Bits& acc, int chosen, int c) {
  for (std::size_t i = from; i < rows.size(); ++i) {
    Bits next = acc;
    for (std::size_t w = 0; w < next.size(); ++w) next[w] |= rows[i][w];
    if (popcount(next) < c * (chosen + 1)) return false;
    if (!all_subsets_expand(rows, i + 1, next, chosen + 1, c)) return false;
  }
  return true;
}

}  // namespace

ExpansionPair find_expansion_2(const BipartiteSubgraph& b) {
  const int nx = b.x_size();
  const int ny = b.y_size();
  if (nx == 0) throw PreconditionError("find_expansion_2: side X is empty");
  if (ny < 2 * nx) {
    throw PreconditionError("find_expansion_2: |Y| = " + std::to_string(ny) + " < 2|X| = " + std::to_string(2 * nx));
  }
  for (int j = 0; j < ny; ++j) {
    if (b.y_adjacency(j).empty()) {
      throw PreconditionError("find_expansion_2: Y-vertex " + std::to_string(b.side_y()[static_cast<std::size_t>(j)]) +
                              " has no neighbour in X");
    }
  }

  // Left vertex 2i and 2i+1 are the two copies of x_i.
  std::vector<std::vector<int>> doubled;
  doubled.reserve(static_cast<std::size_t>(2 * nx));
  for (int i = 0; i < nx; ++i) {
    doubled.push_back(b.x_adjacency(i));
    doubled.push_back(b.x_adjacency(i));
  }
  const Matching m = maximum_matching(doubled, ny);
  if (m.size() == 2 * nx) return {b.side_x(), b.side_y()};

  // Alternating reachability from the unmatched copies.
  std::vector<char> left_reached(doubled.size(), 0);
  std::vector<char> right_reached(static_cast<std::size_t>(ny), 0);
  std::vector<int> queue;
  for (std::size_t u = 0; u < doubled.size(); ++u) {
    if (m.mate_x[u] < 0) {
      left_reached[u] = 1;
      queue.push_back(static_cast<int>(u));
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto u = static_cast<std::size_t>(queue[head]);
    for (int r : doubled[u]) {
      if (right_reached[static_cast<std::size_t>(r)]) continue;
      right_reached[static_cast<std::size_t>(r)] = 1;
      const int w = m.mate_y[static_cast<std::size_t>(r)];
      if (w >= 0 && !left_reached[static_cast<std::size_t>(w)]) {
        left_reached[static_cast<std::size_t>(w)] = 1;
        queue.push_back(w);
      }
    }
  }

  ExpansionPair pair;
  for (int i = 0; i < nx; ++i) {
    const bool a = left_reached[static_cast<std::size_t>(2 * i)];
    const bool c = left_reached[static_cast<std::size_t>(2 * i + 1)];
    if (a != c) throw InvariantError("find_expansion_2: copies of one vertex split by the cover");
    if (!a) pair.x_prime.push_back(b.side_x()[static_cast<std::size_t>(i)]);
  }
  for (int j = 0; j < ny; ++j) {
    if (!right_reached[static_cast<std::size_t>(j)]) pair.y_prime.push_back(b.side_y()[static_cast<std::size_t>(j)]);
  }
  if (pair.x_prime.empty() || pair.y_prime.empty()) {
    throw InvariantError("find_expansion_2: empty expansion pair");
  }
  return pair;
}

bool verify_expansion(const BipartiteSubgraph& b, const ExpansionPair& p, int c) {
  if (p.x_prime.size() > 20) throw PreconditionError("verify_expansion: |X'| > 20");
  if (p.x_prime.empty() || p.y_prime.empty()) return false;

  std::vector<int> xs;
  for (Vertex v : p.x_prime) {
    const int i = b.x_index(v);
    if (i < 0 || std::find(xs.begin(), xs.end(), i) != xs.end()) return false;
    xs.push_back(i);
  }
  std::vector<int> ys;
  std::vector<int> y_pos(static_cast<std::size_t>(b.y_size()), -1);
  for (Vertex v : p.y_prime) {
    const int j = b.y_index(v);
    if (j < 0 || y_pos[static_cast<std::size_t>(j)] >= 0) return false;
    y_pos[static_cast<std::size_t>(j)] = static_cast<int>(ys.size());
    ys.push_back(j);
  }

  // N(Y') must be exactly X'.
  std::vector<char> in_x(static_cast<std::size_t>(b.x_size()), 0);
  for (int i : xs) in_x[static_cast<std::size_t>(i)] = 1;
  std::vector<char> hit(static_cast<std::size_t>(b.x_size()), 0);
  for (int j : ys) {
    for (int i : b.y_adjacency(j)) {
      if (!in_x[static_cast<std::size_t>(i)]) return false;
      hit[static_cast<std::size_t>(i)] = 1;
    }
  }
  for (int i : xs) {
    if (!hit[static_cast<std::size_t>(i)]) return false;
  }

  const std::size_t words = (ys.size() + 63) / 64;
  std::vector<Bits> rows;
  for (int i : xs) {
    Bits row(words, 0);
    for (int j : b.x_adjacency(i)) {
      const int pos = y_pos[static_cast<std::size_t>(j)];
      if (pos >= 0) row[static_cast<std::size_t>(pos) / 64] |= std::uint64_t{1} << (pos % 64);
    }
    rows.push_back(std::move(row));
  }
  return all_subsets_expand(rows, 0, Bits(words, 0), 0, c);
}

}  // namespace mist
