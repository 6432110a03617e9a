#include "clustcmp/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <unordered_set>

namespace clustcmp {

namespace {

[[noreturn]] void fail(errc code, const std::string& source, std::int64_t line,
                       const std::string& what) {
  throw Error(code, source + ": " + std::string(errc_name(code)) + " at line " +
                        std::to_string(line) + ": " + what,
              line);
}

std::uint64_t edge_key(object_id u, object_id v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Graph Graph::build(std::int64_t num_vertices, std::vector<Edge> edges) {
  if (num_vertices < 0) {
    throw Error(errc::invalid_argument, "vertex count must be non-negative");
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size());
  for (auto& [u, v] : edges) {
    if (u == v) {
      throw Error(errc::parse_error, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (static_cast<std::int64_t>(v) >= num_vertices) {
      throw Error(errc::out_of_range_id, "OutOfRangeId: vertex " + std::to_string(v) +
                                             " exceeds vertex count " +
                                             std::to_string(num_vertices));
    }
    if (!seen.insert(edge_key(u, v)).second) {
      throw Error(errc::parse_error,
                  "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    }
  }
  std::sort(edges.begin(), edges.end());
  Graph g;
  g.num_vertices_ = num_vertices;
  g.edges_ = std::move(edges);
  return g;
}

Graph read_edge_list(std::istream& in, const std::string& source_name,
                     std::optional<std::int64_t> n_override) {
  std::vector<Graph::Edge> edges;
  std::optional<std::int64_t> header_n;
  std::unordered_set<std::uint64_t> seen;

  std::string line;
  std::int64_t line_no = 0;
  auto parse_int = [&](std::string_view token) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      fail(errc::parse_error, source_name, line_no,
           "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t begin = line.find_first_not_of(" \t");
    if (begin == std::string::npos) continue;
    if (line[begin] == '#') {
      std::string_view rest(line.data() + begin, line.size() - begin);
      if (rest.rfind("#n=", 0) == 0) {
        if (header_n) fail(errc::parse_error, source_name, line_no, "duplicate #n= header");
        const std::int64_t n = parse_int(rest.substr(3));
        if (n < 0) fail(errc::parse_error, source_name, line_no, "vertex count must be non-negative");
        header_n = n;
      }
      continue;
    }

    std::vector<std::int64_t> fields;
    std::string_view view(line);
    std::size_t pos = begin;
    while (pos < view.size()) {
      std::size_t end = view.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = view.size();
      if (end > pos) fields.push_back(parse_int(view.substr(pos, end - pos)));
      pos = view.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) break;
    }
    if (fields.size() != 2) {
      fail(errc::parse_error, source_name, line_no, "expected 'u v'");
    }
    if (fields[0] < 0 || fields[1] < 0) {
      fail(errc::out_of_range_id, source_name, line_no, "vertex ids must be non-negative");
    }
    auto u = static_cast<object_id>(fields[0]);
    auto v = static_cast<object_id>(fields[1]);
    if (u == v) fail(errc::parse_error, source_name, line_no, "self-loop");
    if (u > v) std::swap(u, v);
    if (!seen.insert(edge_key(u, v)).second) {
      fail(errc::parse_error, source_name, line_no, "duplicate edge");
    }
    edges.emplace_back(u, v);
  }

  if (!n_override && !header_n) {
    throw Error(errc::parse_error,
                source_name + ": ParseError: vertex count not declared (no #n= header; pass --n)");
  }
  const std::int64_t n = n_override ? *n_override : *header_n;
  try {
    return Graph::build(n, std::move(edges));
  } catch (const Error& e) {
    throw Error(e.code(), source_name + ": " + e.what());
  }
}

Graph read_edge_list_file(const std::filesystem::path& path,
                          std::optional<std::int64_t> n_override) {
  std::ifstream in(path);
  if (!in) {
    throw Error(errc::parse_error, path.string() + ": cannot open file");
  }
  return read_edge_list(in, path.string(), n_override);
}

void write_edge_map_csv(std::ostream& out, const Graph& g) {
  out << "edge_id,u,v\n";
  for (std::size_t id = 0; id < g.edges().size(); ++id) {
    out << id << ',' << g.edge(id).first << ',' << g.edge(id).second << "\n";
  }
}

namespace {

// Drops empty induced sets, collapses duplicates (keeping first occurrence
// order), and builds a Clustering over `universe`.
InducedClustering finalize_induced(std::vector<std::vector<object_id>> induced,
                                   Universe universe) {
  InducedClustering result;
  std::vector<std::vector<object_id>> kept;
  kept.reserve(induced.size());
  for (auto& members : induced) {
    if (members.empty()) {
      ++result.dropped_empty;
      continue;
    }
    kept.push_back(std::move(members));
  }
  std::vector<bool> duplicate(kept.size(), false);
  {
    std::vector<std::size_t> order(kept.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t lhs, std::size_t rhs) { return kept[lhs] < kept[rhs]; });
    for (std::size_t k = 1; k < order.size(); ++k) {
      if (kept[order[k]] == kept[order[k - 1]]) {
        duplicate[std::max(order[k], order[k - 1])] = true;
        // Chains of equal sets keep comparing against the survivor.
        order[k] = std::min(order[k], order[k - 1]);
      }
    }
  }
  std::vector<std::vector<object_id>> unique;
  unique.reserve(kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (duplicate[i]) {
      ++result.collapsed_duplicates;
    } else {
      unique.push_back(std::move(kept[i]));
    }
  }
  result.clustering = Clustering::validate(std::move(unique), universe);
  return result;
}

}  // namespace

InducedClustering induce_edge_clustering(const Graph& g, const Clustering& vertex_clusters) {
  if (vertex_clusters.universe() != g.vertex_universe()) {
    throw Error(errc::universe_mismatch,
                "UniverseMismatch: clustering universe " +
                    std::to_string(vertex_clusters.num_objects()) + " vs " +
                    std::to_string(g.num_vertices()) + " vertices");
  }
  MembershipIndex index(vertex_clusters);
  std::vector<std::vector<object_id>> induced(vertex_clusters.size());
  for (std::size_t id = 0; id < g.edges().size(); ++id) {
    const auto [u, v] = g.edge(id);
    const auto cu = index.clusters_of(u);
    const auto cv = index.clusters_of(v);
    std::size_t i = 0, j = 0;
    while (i < cu.size() && j < cv.size()) {
      if (cu[i] < cv[j]) {
        ++i;
      } else if (cv[j] < cu[i]) {
        ++j;
      } else {
        induced[cu[i]].push_back(static_cast<object_id>(id));
        ++i;
        ++j;
      }
    }
  }
  return finalize_induced(std::move(induced), g.edge_universe());
}

InducedClustering induce_vertex_clustering(const Graph& g, const Clustering& edge_clusters) {
  if (edge_clusters.universe() != g.edge_universe()) {
    throw Error(errc::universe_mismatch,
                "UniverseMismatch: clustering universe " +
                    std::to_string(edge_clusters.num_objects()) + " vs " +
                    std::to_string(g.num_edges()) + " edges");
  }
  std::vector<std::vector<object_id>> induced;
  induced.reserve(edge_clusters.size());
  for (const auto& cluster : edge_clusters.clusters()) {
    std::vector<object_id> vertices;
    vertices.reserve(2 * cluster.size());
    for (object_id edge_id : cluster) {
      vertices.push_back(g.edge(edge_id).first);
      vertices.push_back(g.edge(edge_id).second);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    induced.push_back(std::move(vertices));
  }
  return finalize_induced(std::move(induced), g.vertex_universe());
}

InducedClustering edge_closure(const Graph& g, const Clustering& edge_clusters) {
  const InducedClustering vertices = induce_vertex_clustering(g, edge_clusters);
  InducedClustering closed = induce_edge_clustering(g, vertices.clustering);
  closed.collapsed_duplicates += vertices.collapsed_duplicates;
  return closed;
}

}  // namespace clustcmp
