#include "clustcmp/similarity.hpp"

#include <algorithm>
#include <string>

namespace clustcmp {

namespace {

void require_same_universe(const Clustering& a, const Clustering& b) {
  if (a.universe() != b.universe()) {
    throw Error(errc::universe_mismatch,
                std::string(errc_name(errc::universe_mismatch)) + ": universes of size " +
                    std::to_string(a.num_objects()) + " and " + std::to_string(b.num_objects()));
  }
}

std::int64_t intersection_size(std::span<const object_id> lhs, std::span<const object_id> rhs) {
  std::int64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (lhs[i] < rhs[j]) {
      ++i;
    } else if (rhs[j] < lhs[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// Per-call overlap accumulator, reset between clusters by walking the
// touched list. Never shared across concurrent calls.
struct OverlapScratch {
  std::vector<std::int64_t> count;
  std::vector<std::uint32_t> touched;

  explicit OverlapScratch(std::size_t num_clusters) : count(num_clusters, 0) {}
};

BestMatch best_match_impl(std::span<const object_id> c, const Clustering& other,
                          const MembershipIndex& index, OverlapScratch& scratch) {
  for (object_id x : c) {
    for (std::uint32_t cl : index.clusters_of(x)) {
      if (scratch.count[cl]++ == 0) scratch.touched.push_back(cl);
    }
  }
  BestMatch best;
  for (std::uint32_t cl : scratch.touched) {
    const std::int64_t inter = scratch.count[cl];
    const std::int64_t uni =
        static_cast<std::int64_t>(c.size()) + static_cast<std::int64_t>(other.cluster(cl).size()) -
        inter;
    const double fstar = static_cast<double>(inter) / static_cast<double>(uni);
    if (!best.index || fstar > best.fstar || (fstar == best.fstar && cl < *best.index)) {
      best.fstar = fstar;
      best.index = cl;
    }
    scratch.count[cl] = 0;
  }
  scratch.touched.clear();
  return best;
}

// Directional weighted average. Per-cluster terms |Ci| * bestmatch(Ci) are
// summed in sorted order so the result is bit-identical under cluster
// reordering and object relabeling.
double fstar_w_asym_impl(const Clustering& a, const Clustering& b, const MembershipIndex& index_b,
                         OverlapScratch& scratch, std::vector<double>& terms) {
  if (a.empty()) return 0.0;
  terms.clear();
  terms.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ci = a.cluster(i);
    const BestMatch best = best_match_impl(ci, b, index_b, scratch);
    terms.push_back(static_cast<double>(ci.size()) * best.fstar);
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum / static_cast<double>(a.total_membership());
}

struct OutlierOverlap {
  std::int64_t only_a = 0;   // |O1|
  std::int64_t only_b = 0;   // |O2|
  std::int64_t common = 0;   // |O1 ∩ O2|
};

OutlierOverlap outlier_overlap(const Clustering& a, const Clustering& b) {
  const auto n = static_cast<std::size_t>(a.num_objects());
  std::vector<char> covered_a(n, 0), covered_b(n, 0);
  for (const auto& cluster : a.clusters()) {
    for (object_id x : cluster) covered_a[x] = 1;
  }
  for (const auto& cluster : b.clusters()) {
    for (object_id x : cluster) covered_b[x] = 1;
  }
  OutlierOverlap result;
  for (std::size_t x = 0; x < n; ++x) {
    const bool oa = !covered_a[x];
    const bool ob = !covered_b[x];
    result.only_a += oa;
    result.only_b += ob;
    result.common += oa && ob;
  }
  return result;
}

double outlier_jaccard_value(const OutlierOverlap& o) {
  if (o.only_a == 0 && o.only_b == 0) return 0.0;  // coefficient is 0; never evaluate 0/0
  return static_cast<double>(o.common) / static_cast<double>(o.only_a + o.only_b - o.common);
}

// Algebraically (|O|/n)*oj + ((n-|O|)/n)*weighted, arranged so two exact-1
// components produce exactly 1 (the two weights need not sum to 1.0 after
// rounding).
double fstar_wo_directional(double outlier_count, double n, double outlier_jaccard,
                            double weighted) {
  return weighted + (outlier_count / n) * (outlier_jaccard - weighted);
}

}  // namespace

PairScores pair_scores(std::span<const object_id> ci, std::span<const object_id> cj) {
  if (ci.empty() || cj.empty()) {
    throw Error(errc::empty_input, "EmptyInput: pair_scores requires non-empty sets");
  }
  const std::int64_t inter = intersection_size(ci, cj);
  const auto si = static_cast<std::int64_t>(ci.size());
  const auto sj = static_cast<std::int64_t>(cj.size());
  PairScores scores;
  scores.precision = static_cast<double>(inter) / static_cast<double>(si);
  scores.recall = static_cast<double>(inter) / static_cast<double>(sj);
  scores.f1 = 2.0 * static_cast<double>(inter) / static_cast<double>(si + sj);
  scores.fstar = static_cast<double>(inter) / static_cast<double>(si + sj - inter);
  return scores;
}

BestMatch best_match(std::span<const object_id> c, const Clustering& other,
                     const MembershipIndex& other_index) {
  OverlapScratch scratch(other.size());
  return best_match_impl(c, other, other_index, scratch);
}

double fstar_w_asym(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  MembershipIndex index_b(b);
  OverlapScratch scratch(b.size());
  std::vector<double> terms;
  return fstar_w_asym_impl(a, b, index_b, scratch, terms);
}

double fstar_w(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  MembershipIndex index_a(a), index_b(b);
  OverlapScratch scratch_a(a.size()), scratch_b(b.size());
  std::vector<double> terms;
  const double ab = fstar_w_asym_impl(a, b, index_b, scratch_b, terms);
  const double ba = fstar_w_asym_impl(b, a, index_a, scratch_a, terms);
  return 0.5 * ab + 0.5 * ba;
}

double fstar_wo_asym(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  if (a.num_objects() == 0) {
    throw Error(errc::empty_universe, "EmptyUniverse: fstar_wo is undefined for n = 0");
  }
  MembershipIndex index_b(b);
  OverlapScratch scratch(b.size());
  std::vector<double> terms;
  const double weighted = fstar_w_asym_impl(a, b, index_b, scratch, terms);
  const OutlierOverlap o = outlier_overlap(a, b);
  return fstar_wo_directional(static_cast<double>(o.only_a),
                              static_cast<double>(a.num_objects()), outlier_jaccard_value(o),
                              weighted);
}

double fstar_wo(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  if (a.num_objects() == 0) {
    throw Error(errc::empty_universe, "EmptyUniverse: fstar_wo is undefined for n = 0");
  }
  MembershipIndex index_a(a), index_b(b);
  OverlapScratch scratch_a(a.size()), scratch_b(b.size());
  std::vector<double> terms;
  const double ab = fstar_w_asym_impl(a, b, index_b, scratch_b, terms);
  const double ba = fstar_w_asym_impl(b, a, index_a, scratch_a, terms);
  const OutlierOverlap o = outlier_overlap(a, b);
  const double oj = outlier_jaccard_value(o);
  const auto n = static_cast<double>(a.num_objects());
  const double dir_ab = fstar_wo_directional(static_cast<double>(o.only_a), n, oj, ab);
  const double dir_ba = fstar_wo_directional(static_cast<double>(o.only_b), n, oj, ba);
  return 0.5 * dir_ab + 0.5 * dir_ba;
}

MatchReport match_report(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  MembershipIndex index_a(a), index_b(b);
  OverlapScratch scratch_a(a.size()), scratch_b(b.size());

  MatchReport report;
  auto fill_direction = [](const Clustering& from, const Clustering& to,
                           const MembershipIndex& to_index, OverlapScratch& scratch,
                           std::vector<MatchRecord>& records) {
    records.reserve(from.size());
    for (std::size_t i = 0; i < from.size(); ++i) {
      const auto ci = from.cluster(i);
      const BestMatch best = best_match_impl(ci, to, to_index, scratch);
      records.push_back({best.index, best.fstar,
                         static_cast<double>(ci.size()) /
                             static_cast<double>(from.total_membership())});
    }
  };
  fill_direction(a, b, index_b, scratch_b, report.first_to_second);
  fill_direction(b, a, index_a, scratch_a, report.second_to_first);

  const OutlierOverlap o = outlier_overlap(a, b);
  report.outlier_jaccard = outlier_jaccard_value(o);
  report.outliers_first = o.only_a;
  report.outliers_second = o.only_b;
  return report;
}

PerturbationStats perturbation_stats(const Clustering& a, const Clustering& b, object_id moved,
                                     std::optional<std::size_t> modified_cluster) {
  require_same_universe(a, b);
  if (static_cast<std::int64_t>(moved) >= a.num_objects()) {
    throw Error(errc::bad_index, "BadIndex: moved object " + std::to_string(moved) +
                                     " outside universe of size " +
                                     std::to_string(a.num_objects()));
  }
  if (modified_cluster && *modified_cluster >= a.size()) {
    throw Error(errc::bad_index,
                "BadIndex: cluster index " + std::to_string(*modified_cluster) +
                    " out of range (clustering has " + std::to_string(a.size()) + " clusters)");
  }

  PerturbationStats stats;
  stats.membership_a = a.total_membership();
  stats.membership_b = b.total_membership();

  MembershipIndex index_b(b);
  stats.containing = static_cast<std::int64_t>(index_b.clusters_of(moved).size());

  if (!modified_cluster) {
    stats.affected = stats.containing;
    return stats;
  }

  MembershipIndex index_a(a);
  OverlapScratch scratch(a.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    const auto cj = b.cluster(j);
    const bool contains = std::binary_search(cj.begin(), cj.end(), moved);
    bool matched = false;
    if (!contains) {
      const BestMatch best = best_match_impl(cj, a, index_a, scratch);
      matched = best.index && *best.index == *modified_cluster;
    }
    stats.affected += contains || matched;
  }
  return stats;
}

}  // namespace clustcmp
