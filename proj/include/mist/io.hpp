#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mist/graph.hpp"
#include "mist/kernel.hpp"

namespace mist {

/// Edge-list document:
///
///   # comment lines anywhere
///   p <n> <m>
///   e <u> <v>        (m lines, 0 <= u < v < n, no duplicates)
///
/// Throws FormatError on any deviation.
Graph parse_edge_list(std::string_view text);

/// Canonical form: header then edges in lexicographic order, no comments.
std::string serialize_edge_list(const Graph& g);

Graph read_edge_list_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// On-disk form of a kernelization run.
struct TraceDocument {
  int input_vertices = 0;
  int input_edges = 0;
  int k = 0;
  std::string outcome;
  int k_prime = 0;
  std::vector<ReductionRecord> reductions;
  std::optional<int> kernel_vertices;
  std::optional<int> kernel_edges;
  std::vector<Edge> solved_tree;
  std::string reason;
};

/// Deterministic JSON rendering (sorted keys, two-space indent, trailing newline).
std::string serialize_trace(const Graph& input, int k, const KernelResult& result);

/// Throws FormatError when a field is missing or has the wrong type.
TraceDocument parse_trace(std::string_view text);

}  // namespace mist
