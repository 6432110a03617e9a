#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "clustcmp/clustering.hpp"
#include "clustcmp/rng.hpp"

namespace clustcmp {

// Synthetic clustering pairs for the five bias-audit scenarios. Scenarios
// 1-3 build partitions of 1024 objects; scenarios 4-5 use the geometric
// layer below to create overlaps (expansion factor eta > 1) or outliers
// (eta < 1). All constructions draw exclusively from Rng, so a seed pins
// the output on every platform.

struct ScenarioPair {
  Clustering first;
  Clustering second;
};

// Scenario 1: 32 clusters of 32; the copy has a uniformly chosen
// floor(fraction*1024)-subset of objects reassigned to a uniformly random
// cluster (possibly their own). Both sides stay partitions.
ScenarioPair scenario_shuffle(double fraction, Rng& rng);

// Scenario 2: fixed 32x32 partition vs an independently random equal
// partition evolved by `steps` preferential reassignments (target cluster
// chosen proportional to current cluster sizes). Emptied clusters vanish.
ScenarioPair scenario_skew(std::int64_t steps, Rng& rng);

// Scenario 3: 8 clusters of 128 vs a uniformly random partition into k
// equal clusters. Throws Error(bad_k) unless k divides 1024.
ScenarioPair scenario_kclusters(std::int64_t k, Rng& rng);

// Reference layer for the geometric generator: per-object positions in the
// unit disk plus a seeded base partition with the requested part sizes.
struct GeometricLayer {
  std::vector<std::array<double, 2>> points;
  std::vector<std::int64_t> base_sizes;
  std::vector<std::vector<object_id>> base_parts;  // disjoint, sizes match base_sizes

  Universe universe() const { return Universe{static_cast<std::int64_t>(points.size())}; }
};

// Samples points i.i.d. uniform over the closed unit disk, then seeds each
// part at the unassigned point furthest from the origin and grows it with
// the seed's nearest unassigned neighbours. Distance ties break toward the
// lowest object id. Throws Error(bad_sizes) if any size < 1.
GeometricLayer build_layer(const std::vector<std::int64_t>& sizes, Rng& rng);

// Deterministic second stage: every part is resized around the centroid of
// its base members (computed once). eta >= 1 grows the part with the
// nearest non-members (overlaps allowed); eta < 1 keeps only the nearest
// base members (creating outliers, never overlaps). Target size is
// round-half-up(p_i * eta); throws Error(bad_eta) if a target leaves [1, n].
Clustering geometric_clustering(const GeometricLayer& layer, double eta);

}  // namespace clustcmp
