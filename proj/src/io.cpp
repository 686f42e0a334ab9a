#include "mist/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mist/errors.hpp"

namespace mist {

namespace {

using nlohmann::json;

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

long parse_number(std::string_view word, int line_no) {
  long value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": '" + std::string(word) + "' is not an integer");
  }
  return value;
}

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from(const json& j) {
  std::vector<Edge> out;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw FormatError("trace: edge must be a pair");
    out.push_back(make_edge(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
  }
  return out;
}

json record_json(const ReductionRecord& rec) {
  return {
      {"pre_vertex_count", rec.pre_vertex_count},
      {"s", rec.s},
      {"l", rec.l},
      {"v_s", rec.v_s},
      {"v_l", rec.v_l},
      {"neighbor_map", rec.neighbor_map},
      {"index_map", rec.index_map},
      {"bsl_tree", edges_json(rec.bsl_tree)},
      {"initial_tree", edges_json(rec.initial_tree)},
      {"delta_k", rec.delta_k},
      {"k_before", rec.k_before},
  };
}

ReductionRecord record_from(const json& j) {
  ReductionRecord rec;
  rec.pre_vertex_count = j.at("pre_vertex_count").get<int>();
  rec.s = j.at("s").get<VertexSet>();
  rec.l = j.at("l").get<VertexSet>();
  rec.v_s = j.at("v_s").get<Vertex>();
  rec.v_l = j.at("v_l").get<Vertex>();
  rec.neighbor_map = j.at("neighbor_map").get<VertexSet>();
  rec.index_map = j.at("index_map").get<std::vector<Vertex>>();
  rec.bsl_tree = edges_from(j.at("bsl_tree"));
  if (j.contains("initial_tree")) rec.initial_tree = edges_from(j.at("initial_tree"));
  rec.delta_k = j.at("delta_k").get<int>();
  rec.k_before = j.at("k_before").get<int>();
  return rec;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long, long>> header;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    const auto where = "line " + std::to_string(line_no) + ": ";
    if (words[0] == "p") {
      if (header) throw FormatError(where + "second header line");
      if (words.size() != 3) throw FormatError(where + "header must be 'p <n> <m>'");
      const long n = parse_number(words[1], line_no);
      const long m = parse_number(words[2], line_no);
      if (n < 0 || m < 0 || n > 100'000'000) throw FormatError(where + "header counts out of range");
      header.emplace(n, m);
    } else if (words[0] == "e") {
      if (!header) throw FormatError(where + "edge before the 'p' header");
      if (words.size() != 3) throw FormatError(where + "edge must be 'e <u> <v>'");
      const long u = parse_number(words[1], line_no);
      const long v = parse_number(words[2], line_no);
      if (u < 0 || u >= v || v >= header->first) {
        throw FormatError(where + "edge endpoints must satisfy 0 <= u < v < n");
      }
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    } else {
      throw FormatError(where + "unknown line type '" + std::string(words[0]) + "'");
    }
  }
  if (!header) throw FormatError("missing 'p <n> <m>' header");
  if (static_cast<long>(edges.size()) != header->second) {
    throw FormatError("header declares " + std::to_string(header->second) + " edges, found " +
                      std::to_string(edges.size()));
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw FormatError("duplicate edge");
  return Graph(static_cast<int>(header->first), edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path);
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw FormatError("failed writing " + path);
}

Graph read_edge_list_file(const std::string& path) { return parse_edge_list(read_file(path)); }

std::string serialize_trace(const Graph& input, int k, const KernelResult& result) {
  json doc;
  doc["format"] = "mist-trace/1";
  doc["input"] = {{"vertices", input.vertex_count()}, {"edges", input.edge_count()}};
  doc["k"] = k;
  doc["outcome"] = outcome_name(result.outcome);
  doc["k_prime"] = result.k_prime;
  doc["reason"] = result.reason;
  json reductions = json::array();
  for (const auto& rec : result.trace) reductions.push_back(record_json(rec));
  doc["reductions"] = std::move(reductions);
  if (result.outcome == Outcome::Kernel) {
    doc["kernel"] = {{"vertices", result.graph.vertex_count()}, {"edges", result.graph.edge_count()}};
  }
  if (result.tree) {
    doc["tree"] = edges_json(result.tree->edges());
    doc["tree_internal"] = result.tree->internal_count();
  }
  return doc.dump(2) + "\n";
}

TraceDocument parse_trace(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format").get<std::string>() != "mist-trace/1") throw FormatError("unsupported trace format");
    TraceDocument out;
    out.input_vertices = doc.at("input").at("vertices").get<int>();
    out.input_edges = doc.at("input").at("edges").get<int>();
    out.k = doc.at("k").get<int>();
    out.outcome = doc.at("outcome").get<std::string>();
    out.k_prime = doc.at("k_prime").get<int>();
    out.reason = doc.value("reason", "");
    for (const auto& rec : doc.at("reductions")) out.reductions.push_back(record_from(rec));
    if (doc.contains("kernel")) {
      out.kernel_vertices = doc.at("kernel").at("vertices").get<int>();
      out.kernel_edges = doc.at("kernel").at("edges").get<int>();
    }
    if (doc.contains("tree")) out.solved_tree = edges_from(doc.at("tree"));
    return out;
  } catch (const json::exception& e) {
    throw FormatError(std::string("trace: ") + e.what());
  }
}

}  // namespace mist
