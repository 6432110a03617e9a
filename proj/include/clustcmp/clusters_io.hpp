#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "clustcmp/clustering.hpp"

namespace clustcmp {

// ".clusters" text format:
//   - optional `#n=<N>` header declaring the universe size (a CLI --n
//     override wins over the header);
//   - other `#...` lines are comments, blank lines are skipped;
//   - every remaining line is one cluster: base-10 object ids separated by
//     spaces. An object absent from every line is an outlier.
//
// Serialization is bit-exact: `#n=<N>` first, clusters in stored order, ids
// ascending, single-space separated, `\n` line endings.

Clustering read_clusters(std::istream& in, const std::string& source_name,
                         std::optional<std::int64_t> n_override = {});

Clustering read_clusters_file(const std::filesystem::path& path,
                              std::optional<std::int64_t> n_override = {});

void write_clusters(std::ostream& out, const Clustering& c);

void write_clusters_file(const std::filesystem::path& path, const Clustering& c);

std::string serialize_clusters(const Clustering& c);

}  // namespace clustcmp
