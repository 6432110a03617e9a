#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "clustcmp/clustering.hpp"

namespace clustcmp {

// Cluster-pair similarity scores. fstar is the Jaccard index |Ci∩Cj|/|Ci∪Cj|,
// a monotone transform of f1: fstar = f1 / (2 - f1).
struct PairScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double fstar = 0.0;
};

// Requires both sets non-empty (precision/recall are undefined otherwise);
// throws Error(empty_input). Inputs are sorted id sets.
PairScores pair_scores(std::span<const object_id> ci, std::span<const object_id> cj);

struct BestMatch {
  double fstar = 0.0;
  std::optional<std::size_t> index;  // argmax cluster in `other`, none if no overlap
};

// Max Jaccard between `c` and any cluster of `other`, visiting only clusters
// that share at least one object with `c` (the rest score 0). Returns 0 and
// no index against the empty clustering. Ties go to the lowest cluster index;
// the value itself is tie-independent.
BestMatch best_match(std::span<const object_id> c, const Clustering& other,
                     const MembershipIndex& other_index);

// Directional size-weighted average of per-cluster best matches:
//   sum_i (|Ci| / sum_k |Ck|) * bestmatch(Ci, b).
// Defined as 0 when `a` has no clusters (the average has no terms).
double fstar_w_asym(const Clustering& a, const Clustering& b);

// Symmetric combination: 0.5 * fstar_w_asym(a,b) + 0.5 * fstar_w_asym(b,a).
double fstar_w(const Clustering& a, const Clustering& b);

// Outlier-aware directional score. With O1/O2 the outlier sets and X the
// universe:
//   (|O1|/|X|) * jaccard(O1, O2) + (|X\O1|/|X|) * fstar_w_asym(a, b).
// When both outlier sets are empty the first term has coefficient 0 and the
// 0/0 Jaccard is never evaluated. Throws Error(empty_universe) when |X| = 0.
double fstar_wo_asym(const Clustering& a, const Clustering& b);

// Symmetric outlier-aware score; equals fstar_w when neither side has
// outliers.
double fstar_wo(const Clustering& a, const Clustering& b);

struct MatchRecord {
  std::optional<std::size_t> match;  // best-match cluster index in the other clustering
  double fstar = 0.0;
  double weight = 0.0;  // |Ci| / total membership of its own clustering
};

// Per-cluster best-match records in both directions plus the outlier-set
// Jaccard. Aggregating the report with the fstar_wo weighting reproduces the
// score exactly; useful for locating where two clusterings disagree.
struct MatchReport {
  std::vector<MatchRecord> first_to_second;
  std::vector<MatchRecord> second_to_first;
  double outlier_jaccard = 0.0;  // 0 by convention when both outlier sets are empty
  std::int64_t outliers_first = 0;
  std::int64_t outliers_second = 0;
};

MatchReport match_report(const Clustering& a, const Clustering& b);

// Counts entering the perturbation bounds for moving one object into or out
// of one cluster of `a` (see perturbation_stats).
struct PerturbationStats {
  std::int64_t membership_a = 0;  // sum of cluster sizes of a
  std::int64_t membership_b = 0;  // sum of cluster sizes of b
  // Clusters of b whose best match in a is the modified cluster, or that
  // contain the moved object. Equals `containing` when no cluster index is
  // given (the created/destroyed-cluster case).
  std::int64_t affected = 0;
  std::int64_t containing = 0;  // clusters of b containing the moved object
};

// `modified_cluster` is the index in `a` of the cluster gaining/losing the
// object, or nullopt when the move creates or destroys a singleton cluster.
// "Best match" uses the same lowest-index tie-break as best_match.
PerturbationStats perturbation_stats(const Clustering& a, const Clustering& b, object_id moved,
                                     std::optional<std::size_t> modified_cluster);

}  // namespace clustcmp
