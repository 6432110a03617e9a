#pragma once

#include <cstdint>
#include <vector>

#include "clustcmp/clustering.hpp"

namespace clustcmp {

// Comparison measures from the literature, for benchmarking against the
// fstar family. Neither is defined for outliers: objects outside every
// cluster simply co-occur in zero clusters (Omega) or sit outside every
// binary cluster variable (oNMI).

// t[j] = number of object pairs co-occurring in exactly j clusters,
// j = 0..max overlap depth. Row sum is n(n-1)/2.
std::vector<std::int64_t> pair_coverage_histogram(const Clustering& c);

// Omega index (Collins & Dent 1988): the pair-counting agreement over the
// number of shared clusters, adjusted for chance.
//   Obs = (1/N) * sum_j |{pairs sharing exactly j clusters in both}|
//   Exp = (1/N^2) * sum_j t_j(a) * t_j(b),  N = n(n-1)/2
//   omega = (Obs - Exp) / (1 - Exp)
// Reduces to the ARI on partitions. The degenerate case Exp = 1 returns 1
// when Obs = 1 and 0 otherwise. Requires n >= 2.
double omega_index(const Clustering& a, const Clustering& b);

enum class OnmiVariant { lfk, mgh };

// Joint object counts of a cluster pair viewed as binary variables.
struct JointCounts {
  std::int64_t neither = 0;      // in neither cluster
  std::int64_t only_second = 0;  // in the second cluster only
  std::int64_t only_first = 0;   // in the first cluster only
  std::int64_t both = 0;
};

JointCounts joint_counts(std::int64_t n, std::span<const object_id> first,
                         std::span<const object_id> second);

// Overlapping NMI via set matching over per-cluster binary variables
// (Lancichinetti, Fortunato & Kertesz 2009; McDaid, Greene & Hurley 2011).
// A pair (Xk, Yl) contributes its conditional entropy only when
// h(neither) + h(both) >= h(only_second) + h(only_first); otherwise
// H(Xk|Yl) := H(Xk). Entropies are base 2 with 0*log0 = 0.
//   LFK: 1 - 0.5 * (<H(X|Y)/H(X)> + <H(Y|X)/H(Y)>)   (per-cluster means)
//   MGH: I(X:Y) / max(H(X), H(Y))
// Requires both clusterings non-empty.
double onmi(const Clustering& a, const Clustering& b, OnmiVariant variant);

}  // namespace clustcmp
