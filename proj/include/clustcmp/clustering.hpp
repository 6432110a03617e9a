#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "clustcmp/types.hpp"

namespace clustcmp {

// The common object set: ids are 0..size-1. The universe is always declared
// explicitly (file header or CLI flag) and never inferred from the ids seen,
// because objects a file does not mention are exactly its outliers.
struct Universe {
  std::int64_t size = 0;

  friend bool operator==(const Universe&, const Universe&) = default;
};

// A set of distinct non-empty object-id subsets over a universe. Cluster
// order is presentation-only: it is preserved for reporting but carries no
// semantics, and no score depends on it. Members of each cluster are stored
// sorted ascending. Immutable after construction.
class Clustering {
 public:
  Clustering() = default;

  // Validates raw input and builds the canonical form. Throws Error with
  // code empty_cluster, duplicate_id_in_cluster, out_of_range_id, or
  // duplicate_cluster; Error::index() names the offending cluster position.
  // Duplicate clusters are rejected rather than deduplicated: silently
  // dropping one would change the weighted averages downstream.
  static Clustering validate(std::vector<std::vector<object_id>> raw, Universe universe);

  const Universe& universe() const noexcept { return universe_; }
  std::int64_t num_objects() const noexcept { return universe_.size; }

  std::size_t size() const noexcept { return clusters_.size(); }
  bool empty() const noexcept { return clusters_.empty(); }
  std::span<const object_id> cluster(std::size_t i) const { return clusters_[i]; }
  const std::vector<std::vector<object_id>>& clusters() const noexcept { return clusters_; }

  // Sum of cluster sizes (objects counted once per membership).
  std::int64_t total_membership() const noexcept { return total_membership_; }

 private:
  Universe universe_;
  std::vector<std::vector<object_id>> clusters_;
  std::int64_t total_membership_ = 0;
};

// Equality as sets of sets, ignoring cluster order. Requires equal universes.
bool equal_as_sets(const Clustering& a, const Clustering& b);

// The objects belonging to no cluster, sorted ascending.
std::vector<object_id> outliers(const Clustering& c);

// Inverted index: for each object, the indices of the clusters containing
// it (ascending). Backbone of the sparse best-match computation.
class MembershipIndex {
 public:
  explicit MembershipIndex(const Clustering& c);

  std::span<const std::uint32_t> clusters_of(object_id x) const {
    return {entries_.data() + offsets_[x], entries_.data() + offsets_[x + 1]};
  }

  std::int64_t total_membership() const noexcept {
    return static_cast<std::int64_t>(entries_.size());
  }
  std::size_t num_clusters() const noexcept { return num_clusters_; }
  std::int64_t num_objects() const noexcept {
    return static_cast<std::int64_t>(offsets_.size()) - 1;
  }

 private:
  std::vector<std::int64_t> offsets_;
  std::vector<std::uint32_t> entries_;
  std::size_t num_clusters_ = 0;
};

}  // namespace clustcmp
