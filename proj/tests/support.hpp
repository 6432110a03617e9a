#pragma once

// Random instance generators shared by the property tests and the
// acceptance suite.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "clustcmp/clustering.hpp"
#include "clustcmp/rng.hpp"

namespace support {

using clustcmp::Clustering;
using clustcmp::object_id;
using clustcmp::Rng;
using clustcmp::Universe;

// Clustering with overlaps and outliers: up to max_clusters clusters of
// random size, members drawn without replacement per cluster, duplicates
// skipped. May be empty.
inline Clustering random_clustering(Rng& rng, std::int64_t n, std::int64_t max_clusters = 10) {
  if (n == 0) return Clustering::validate({}, Universe{0});
  std::vector<object_id> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::set<std::vector<object_id>> seen;
  std::vector<std::vector<object_id>> clusters;
  const auto k = rng.below(static_cast<std::uint64_t>(max_clusters) + 1);
  for (std::uint64_t c = 0; c < k; ++c) {
    const auto size = 1 + rng.below(static_cast<std::uint64_t>(n));
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto j = i + rng.below(static_cast<std::uint64_t>(n) - i);
      std::swap(pool[i], pool[j]);
    }
    std::vector<object_id> members(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) clusters.push_back(std::move(members));
  }
  return Clustering::validate(std::move(clusters), Universe{n});
}

// Uniform label partition; labels are also handy for the ARI oracle. Some
// labels may end up unused, so the partition can have fewer than k clusters.
inline std::vector<std::int64_t> random_labels(Rng& rng, std::int64_t n, std::int64_t k) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  for (auto& label : labels) label = static_cast<std::int64_t>(rng.below(k));
  return labels;
}

inline Clustering clustering_from_labels(const std::vector<std::int64_t>& labels,
                                         std::int64_t num_labels) {
  std::vector<std::vector<object_id>> groups(static_cast<std::size_t>(num_labels));
  for (std::size_t x = 0; x < labels.size(); ++x) {
    groups[static_cast<std::size_t>(labels[x])].push_back(static_cast<object_id>(x));
  }
  std::vector<std::vector<object_id>> clusters;
  for (auto& group : groups) {
    if (!group.empty()) clusters.push_back(std::move(group));
  }
  return Clustering::validate(std::move(clusters),
                              Universe{static_cast<std::int64_t>(labels.size())});
}

// Applies an object-id bijection to every cluster.
inline Clustering relabel(const Clustering& c, const std::vector<object_id>& permutation) {
  std::vector<std::vector<object_id>> clusters;
  clusters.reserve(c.size());
  for (const auto& cluster : c.clusters()) {
    std::vector<object_id> mapped;
    mapped.reserve(cluster.size());
    for (object_id x : cluster) mapped.push_back(permutation[x]);
    clusters.push_back(std::move(mapped));
  }
  return Clustering::validate(std::move(clusters), c.universe());
}

inline Clustering reorder_clusters(const Clustering& c, Rng& rng) {
  std::vector<std::vector<object_id>> clusters = c.clusters();
  rng.shuffle(clusters);
  return Clustering::validate(std::move(clusters), c.universe());
}

inline std::vector<object_id> random_permutation(Rng& rng, std::int64_t n) {
  std::vector<object_id> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return perm;
}

// One perturbation for the robustness bounds: either add an object to an
// existing cluster or add a new singleton. Returns nullopt when no valid
// perturbation was found (duplicate-cluster collisions).
struct Perturbation {
  Clustering perturbed;
  object_id moved = 0;
  std::optional<std::size_t> modified_cluster;
  bool moved_was_outlier = false;
};

inline std::optional<Perturbation> random_perturbation(const Clustering& a, Rng& rng) {
  const std::int64_t n = a.num_objects();
  if (n == 0) return std::nullopt;
  const bool create_singleton = a.empty() || rng.below(2) == 0;

  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (const auto& cluster : a.clusters()) {
    for (object_id x : cluster) covered[x] = 1;
  }

  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto x = static_cast<object_id>(rng.below(static_cast<std::uint64_t>(n)));
    std::vector<std::vector<object_id>> clusters = a.clusters();
    Perturbation result;
    result.moved = x;
    result.moved_was_outlier = !covered[x];
    if (create_singleton) {
      clusters.push_back({x});
    } else {
      const auto idx = static_cast<std::size_t>(rng.below(a.size()));
      auto& target = clusters[idx];
      if (std::binary_search(target.begin(), target.end(), x)) continue;
      target.insert(std::upper_bound(target.begin(), target.end(), x), x);
      result.modified_cluster = idx;
    }
    try {
      result.perturbed = Clustering::validate(std::move(clusters), a.universe());
    } catch (const clustcmp::Error&) {
      continue;  // duplicate cluster; try another draw
    }
    return result;
  }
  return std::nullopt;
}

}  // namespace support
