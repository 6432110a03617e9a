#include "clustcmp/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace clustcmp {

namespace {

constexpr std::int64_t kScenarioObjects = 1024;
constexpr std::int64_t kScenarioClusters = 32;

Clustering from_labels(const std::vector<std::int64_t>& labels, std::int64_t num_labels) {
  std::vector<std::vector<object_id>> groups(static_cast<std::size_t>(num_labels));
  for (std::size_t x = 0; x < labels.size(); ++x) {
    groups[static_cast<std::size_t>(labels[x])].push_back(static_cast<object_id>(x));
  }
  std::vector<std::vector<object_id>> clusters;
  clusters.reserve(groups.size());
  for (auto& group : groups) {
    if (!group.empty()) clusters.push_back(std::move(group));
  }
  return Clustering::validate(std::move(clusters),
                              Universe{static_cast<std::int64_t>(labels.size())});
}

Clustering equal_blocks(std::int64_t n, std::int64_t k) {
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  const std::int64_t block = n / k;
  for (std::int64_t x = 0; x < n; ++x) labels[static_cast<std::size_t>(x)] = x / block;
  return from_labels(labels, k);
}

// Uniformly random partition into k equal clusters: a random permutation
// chunked into blocks of n/k.
std::vector<std::int64_t> random_equal_labels(std::int64_t n, std::int64_t k, Rng& rng) {
  std::vector<object_id> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  std::vector<std::int64_t> labels(static_cast<std::size_t>(n));
  const std::int64_t block = n / k;
  for (std::int64_t j = 0; j < n; ++j) labels[perm[static_cast<std::size_t>(j)]] = j / block;
  return labels;
}

double squared_distance(const std::array<double, 2>& p, const std::array<double, 2>& q) {
  const double dx = p[0] - q[0];
  const double dy = p[1] - q[1];
  return dx * dx + dy * dy;
}

}  // namespace

ScenarioPair scenario_shuffle(double fraction, Rng& rng) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw Error(errc::invalid_argument, "shuffle fraction must lie in [0,1]");
  }
  Clustering first = equal_blocks(kScenarioObjects, kScenarioClusters);

  std::vector<std::int64_t> labels(kScenarioObjects);
  for (std::int64_t x = 0; x < kScenarioObjects; ++x) {
    labels[static_cast<std::size_t>(x)] = x / (kScenarioObjects / kScenarioClusters);
  }
  const auto count = static_cast<std::int64_t>(fraction * kScenarioObjects);
  // Partial Fisher-Yates picks the shuffled subset uniformly.
  std::vector<object_id> pool(kScenarioObjects);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::int64_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::int64_t>(
                           rng.below(static_cast<std::uint64_t>(kScenarioObjects - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    labels[pool[static_cast<std::size_t>(i)]] =
        static_cast<std::int64_t>(rng.below(kScenarioClusters));
  }
  return {std::move(first), from_labels(labels, kScenarioClusters)};
}

ScenarioPair scenario_skew(std::int64_t steps, Rng& rng) {
  Clustering first = equal_blocks(kScenarioObjects, kScenarioClusters);

  std::vector<std::int64_t> labels = random_equal_labels(kScenarioObjects, kScenarioClusters, rng);
  for (std::int64_t step = 0; step < steps; ++step) {
    const auto x = static_cast<std::size_t>(rng.below(kScenarioObjects));
    // Sampling a uniform object and taking its cluster is exactly
    // size-proportional selection; emptied clusters are never chosen again.
    const auto target = labels[static_cast<std::size_t>(rng.below(kScenarioObjects))];
    labels[x] = target;
  }
  return {std::move(first), from_labels(labels, kScenarioClusters)};
}

ScenarioPair scenario_kclusters(std::int64_t k, Rng& rng) {
  if (k < 1 || kScenarioObjects % k != 0) {
    throw Error(errc::bad_k,
                "BadK: k = " + std::to_string(k) + " does not divide " +
                    std::to_string(kScenarioObjects));
  }
  Clustering first = equal_blocks(kScenarioObjects, 8);
  return {std::move(first), from_labels(random_equal_labels(kScenarioObjects, k, rng), k)};
}

GeometricLayer build_layer(const std::vector<std::int64_t>& sizes, Rng& rng) {
  std::int64_t n = 0;
  for (std::int64_t p : sizes) {
    if (p < 1) throw Error(errc::bad_sizes, "BadSizes: every part size must be at least 1");
    n += p;
  }
  if (sizes.empty()) throw Error(errc::bad_sizes, "BadSizes: at least one part required");

  GeometricLayer layer;
  layer.base_sizes = sizes;
  layer.points.resize(static_cast<std::size_t>(n));
  for (auto& point : layer.points) {
    // Uniform over the closed unit disk via angle + sqrt-radius.
    const double angle = 2.0 * std::numbers::pi * rng.unit_double();
    const double radius = std::sqrt(rng.unit_double());
    point = {radius * std::cos(angle), radius * std::sin(angle)};
  }

  std::vector<char> assigned(static_cast<std::size_t>(n), 0);
  layer.base_parts.reserve(sizes.size());
  for (std::int64_t target : sizes) {
    // Seed: the unassigned point furthest from the origin, lowest id on ties.
    std::size_t seed = 0;
    double seed_dist = -1.0;
    for (std::size_t x = 0; x < layer.points.size(); ++x) {
      if (assigned[x]) continue;
      const double d = layer.points[x][0] * layer.points[x][0] +
                       layer.points[x][1] * layer.points[x][1];
      if (d > seed_dist) {
        seed_dist = d;
        seed = x;
      }
    }

    std::vector<std::pair<double, object_id>> candidates;
    for (std::size_t x = 0; x < layer.points.size(); ++x) {
      if (assigned[x] || x == seed) continue;
      candidates.emplace_back(squared_distance(layer.points[x], layer.points[seed]),
                              static_cast<object_id>(x));
    }
    std::sort(candidates.begin(), candidates.end());

    std::vector<object_id> part;
    part.reserve(static_cast<std::size_t>(target));
    part.push_back(static_cast<object_id>(seed));
    for (std::int64_t i = 0; i < target - 1; ++i) {
      part.push_back(candidates[static_cast<std::size_t>(i)].second);
    }
    std::sort(part.begin(), part.end());
    for (object_id x : part) assigned[x] = 1;
    layer.base_parts.push_back(std::move(part));
  }
  return layer;
}

Clustering geometric_clustering(const GeometricLayer& layer, double eta) {
  const auto n = static_cast<std::int64_t>(layer.points.size());
  if (eta <= 0.0) {
    throw Error(errc::bad_eta, "BadEta: eta must be positive");
  }

  std::vector<std::vector<object_id>> clusters;
  clusters.reserve(layer.base_parts.size());
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (std::size_t i = 0; i < layer.base_parts.size(); ++i) {
    const auto& base = layer.base_parts[i];
    const auto p = static_cast<double>(layer.base_sizes[i]);
    const auto target = static_cast<std::int64_t>(std::floor(p * eta + 0.5));
    if (target < 1 || target > n) {
      throw Error(errc::bad_eta, "BadEta: target size " + std::to_string(target) +
                                     " for part " + std::to_string(i) + " outside [1, " +
                                     std::to_string(n) + "]");
    }

    std::array<double, 2> centroid = {0.0, 0.0};
    for (object_id x : base) {
      centroid[0] += layer.points[x][0];
      centroid[1] += layer.points[x][1];
    }
    centroid[0] /= static_cast<double>(base.size());
    centroid[1] /= static_cast<double>(base.size());

    const auto base_size = static_cast<std::int64_t>(base.size());
    std::vector<object_id> cluster;
    if (target >= base_size) {
      cluster = base;
      if (target > base_size) {
        for (object_id x : base) member[x] = 1;
        std::vector<std::pair<double, object_id>> candidates;
        candidates.reserve(static_cast<std::size_t>(n) - base.size());
        for (std::int64_t x = 0; x < n; ++x) {
          if (member[static_cast<std::size_t>(x)]) continue;
          candidates.emplace_back(
              squared_distance(layer.points[static_cast<std::size_t>(x)], centroid),
              static_cast<object_id>(x));
        }
        std::sort(candidates.begin(), candidates.end());
        for (std::int64_t j = 0; j < target - base_size; ++j) {
          cluster.push_back(candidates[static_cast<std::size_t>(j)].second);
        }
        for (object_id x : base) member[x] = 0;
      }
    } else {
      std::vector<std::pair<double, object_id>> ranked;
      ranked.reserve(base.size());
      for (object_id x : base) {
        ranked.emplace_back(squared_distance(layer.points[x], centroid), x);
      }
      std::sort(ranked.begin(), ranked.end());
      for (std::int64_t j = 0; j < target; ++j) {
        cluster.push_back(ranked[static_cast<std::size_t>(j)].second);
      }
    }
    std::sort(cluster.begin(), cluster.end());
    clusters.push_back(std::move(cluster));
  }
  return Clustering::validate(std::move(clusters), layer.universe());
}

}  // namespace clustcmp
