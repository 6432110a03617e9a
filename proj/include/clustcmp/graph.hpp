#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clustcmp/clustering.hpp"

namespace clustcmp {

// Undirected simple graph. Edges are canonical (min, max) pairs indexed
// densely 0..|E|-1 in sorted order, so an edge clustering is an ordinary
// Clustering over the edge-id universe.
class Graph {
 public:
  using Edge = std::pair<object_id, object_id>;

  // Normalizes endpoint order, sorts, and assigns edge ids. Throws
  // Error(parse_error) on self-loops or duplicate edges, out_of_range_id on
  // endpoints outside [0, num_vertices).
  static Graph build(std::int64_t num_vertices, std::vector<Edge> edges);

  std::int64_t num_vertices() const noexcept { return num_vertices_; }
  std::int64_t num_edges() const noexcept { return static_cast<std::int64_t>(edges_.size()); }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  Universe vertex_universe() const noexcept { return Universe{num_vertices_}; }
  Universe edge_universe() const noexcept { return Universe{num_edges()}; }

 private:
  std::int64_t num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Edge-list text format: one `u v` pair per line, `#n=<N>` vertex-count
// header, `#` comments. Self-loops and duplicate edges are parse errors.
Graph read_edge_list(std::istream& in, const std::string& source_name,
                     std::optional<std::int64_t> n_override = {});
Graph read_edge_list_file(const std::filesystem::path& path,
                          std::optional<std::int64_t> n_override = {});

// Sidecar mapping so edge clusterings stay portable: `edge_id,u,v` rows.
void write_edge_map_csv(std::ostream& out, const Graph& g);

// The induced sets of the graph/clustering transformations below may be
// empty or coincide; empties are dropped and duplicates collapsed so the
// result satisfies the clustering invariants, with counts reported for
// auditing.
struct InducedClustering {
  Clustering clustering;
  std::int64_t dropped_empty = 0;
  std::int64_t collapsed_duplicates = 0;
};

// One edge cluster per vertex cluster: the edges with both endpoints inside
// it. Edges whose endpoints share no cluster become edge outliers.
InducedClustering induce_edge_clustering(const Graph& g, const Clustering& vertex_clusters);

// One vertex cluster per edge cluster: all endpoints of its edges. Vertices
// touching no clustered edge become vertex outliers.
InducedClustering induce_vertex_clustering(const Graph& g, const Clustering& edge_clusters);

// Closure: induce vertices, then edges. Re-adds the internal edges an edge
// cluster is missing; idempotent, and every input cluster is contained in
// one of its output clusters.
InducedClustering edge_closure(const Graph& g, const Clustering& edge_clusters);

}  // namespace clustcmp
