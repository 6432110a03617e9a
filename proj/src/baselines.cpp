#include "clustcmp/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>
#include <utility>

namespace clustcmp {

namespace {

void require_same_universe(const Clustering& a, const Clustering& b) {
  if (a.universe() != b.universe()) {
    throw Error(errc::universe_mismatch,
                std::string(errc_name(errc::universe_mismatch)) + ": universes of size " +
                    std::to_string(a.num_objects()) + " and " + std::to_string(b.num_objects()));
  }
}

std::uint64_t pair_key(object_id u, object_id v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Shared-cluster count per co-occurring object pair; pairs in no common
// cluster are implicit.
void accumulate_pair_counts(const Clustering& c,
                            std::unordered_map<std::uint64_t, std::pair<std::int64_t, std::int64_t>>& counts,
                            bool second_slot) {
  for (const auto& cluster : c.clusters()) {
    for (std::size_t i = 0; i < cluster.size(); ++i) {
      for (std::size_t j = i + 1; j < cluster.size(); ++j) {
        auto& entry = counts[pair_key(cluster[i], cluster[j])];
        if (second_slot) {
          ++entry.second;
        } else {
          ++entry.first;
        }
      }
    }
  }
}

// -(count/n) * log2(count/n), with h(0) = 0.
double entropy_term(std::int64_t count, std::int64_t n) {
  if (count <= 0) return 0.0;
  const double p = static_cast<double>(count) / static_cast<double>(n);
  return -p * std::log2(p);
}

}  // namespace

std::vector<std::int64_t> pair_coverage_histogram(const Clustering& c) {
  const std::int64_t n = c.num_objects();
  std::unordered_map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> counts;
  accumulate_pair_counts(c, counts, false);
  std::vector<std::int64_t> hist(1, 0);
  std::int64_t covered = 0;
  for (const auto& [key, entry] : counts) {
    const auto j = static_cast<std::size_t>(entry.first);
    if (j >= hist.size()) hist.resize(j + 1, 0);
    ++hist[j];
    ++covered;
  }
  hist[0] = n * (n - 1) / 2 - covered;
  return hist;
}

double omega_index(const Clustering& a, const Clustering& b) {
  require_same_universe(a, b);
  const std::int64_t n = a.num_objects();
  if (n < 2) {
    throw Error(errc::invalid_argument, "omega_index requires at least 2 objects");
  }
  const std::int64_t total_pairs = n * (n - 1) / 2;

  std::unordered_map<std::uint64_t, std::pair<std::int64_t, std::int64_t>> counts;
  accumulate_pair_counts(a, counts, false);
  accumulate_pair_counts(b, counts, true);

  std::int64_t agreeing = total_pairs - static_cast<std::int64_t>(counts.size());
  std::vector<std::int64_t> hist_a(1, 0), hist_b(1, 0);
  for (const auto& [key, entry] : counts) {
    if (entry.first == entry.second) ++agreeing;
    const auto ja = static_cast<std::size_t>(entry.first);
    const auto jb = static_cast<std::size_t>(entry.second);
    if (ja >= hist_a.size()) hist_a.resize(ja + 1, 0);
    if (jb >= hist_b.size()) hist_b.resize(jb + 1, 0);
    if (entry.first > 0) ++hist_a[ja];
    if (entry.second > 0) ++hist_b[jb];
  }
  std::int64_t covered_a = 0, covered_b = 0;
  for (std::size_t j = 1; j < hist_a.size(); ++j) covered_a += hist_a[j];
  for (std::size_t j = 1; j < hist_b.size(); ++j) covered_b += hist_b[j];
  hist_a[0] = total_pairs - covered_a;
  hist_b[0] = total_pairs - covered_b;

  __int128 expected_numerator = 0;  // sum_j t_j(a) * t_j(b); compare against N^2 exactly
  const std::size_t depth = std::min(hist_a.size(), hist_b.size());
  for (std::size_t j = 0; j < depth; ++j) {
    expected_numerator += static_cast<__int128>(hist_a[j]) * hist_b[j];
  }
  const __int128 n_squared = static_cast<__int128>(total_pairs) * total_pairs;

  const double observed = static_cast<double>(agreeing) / static_cast<double>(total_pairs);
  if (expected_numerator == n_squared) {
    // Exp = 1: both histograms are a point mass at the same depth.
    return agreeing == total_pairs ? 1.0 : 0.0;
  }
  const double expected = static_cast<double>(expected_numerator) /
                          (static_cast<double>(total_pairs) * static_cast<double>(total_pairs));
  return (observed - expected) / (1.0 - expected);
}

JointCounts joint_counts(std::int64_t n, std::span<const object_id> first,
                         std::span<const object_id> second) {
  std::int64_t inter = 0;
  std::size_t i = 0, j = 0;
  while (i < first.size() && j < second.size()) {
    if (first[i] < second[j]) {
      ++i;
    } else if (second[j] < first[i]) {
      ++j;
    } else {
      ++inter;
      ++i;
      ++j;
    }
  }
  JointCounts counts;
  counts.both = inter;
  counts.only_first = static_cast<std::int64_t>(first.size()) - inter;
  counts.only_second = static_cast<std::int64_t>(second.size()) - inter;
  counts.neither = n - counts.both - counts.only_first - counts.only_second;
  return counts;
}

double onmi(const Clustering& a, const Clustering& b, OnmiVariant variant) {
  require_same_universe(a, b);
  if (a.empty() || b.empty()) {
    throw Error(errc::empty_clustering, "EmptyClustering: oNMI requires non-empty clusterings");
  }
  const std::int64_t n = a.num_objects();

  // H(Xk|Y) per cluster of `from`: min over admissible pairs, H(Xk) if none.
  auto conditional_entropies = [n](const Clustering& from, const Clustering& to) {
    std::vector<double> result(from.size());
    for (std::size_t k = 0; k < from.size(); ++k) {
      const auto xk = from.cluster(k);
      const auto sx = static_cast<std::int64_t>(xk.size());
      const double h_x = entropy_term(sx, n) + entropy_term(n - sx, n);
      double best = h_x;
      for (std::size_t l = 0; l < to.size(); ++l) {
        const JointCounts c = joint_counts(n, xk, to.cluster(l));
        const double h_neither = entropy_term(c.neither, n);
        const double h_only_second = entropy_term(c.only_second, n);
        const double h_only_first = entropy_term(c.only_first, n);
        const double h_both = entropy_term(c.both, n);
        if (h_neither + h_both < h_only_second + h_only_first) continue;
        const auto sy = static_cast<std::int64_t>(to.cluster(l).size());
        const double h_y = entropy_term(sy, n) + entropy_term(n - sy, n);
        const double conditional =
            std::max(0.0, h_neither + h_only_second + h_only_first + h_both - h_y);
        best = std::min(best, conditional);
      }
      result[k] = best;
    }
    return result;
  };

  auto cluster_entropy = [n](const Clustering& c, std::size_t k) {
    const auto s = static_cast<std::int64_t>(c.cluster(k).size());
    return entropy_term(s, n) + entropy_term(n - s, n);
  };

  const std::vector<double> h_a_given_b = conditional_entropies(a, b);
  const std::vector<double> h_b_given_a = conditional_entropies(b, a);

  if (variant == OnmiVariant::lfk) {
    auto normalized_mean = [&](const Clustering& c, const std::vector<double>& conditionals) {
      double sum = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const double h = cluster_entropy(c, k);
        if (h > 0.0) sum += conditionals[k] / h;
      }
      return sum / static_cast<double>(c.size());
    };
    return 1.0 - 0.5 * (normalized_mean(a, h_a_given_b) + normalized_mean(b, h_b_given_a));
  }

  double h_a = 0.0, h_b = 0.0, cond_a = 0.0, cond_b = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    h_a += cluster_entropy(a, k);
    cond_a += h_a_given_b[k];
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    h_b += cluster_entropy(b, k);
    cond_b += h_b_given_a[k];
  }
  const double denom = std::max(h_a, h_b);
  if (denom == 0.0) {
    // Zero information on both sides means each clustering is the single
    // full-universe cluster, hence equal.
    return 1.0;
  }
  const double information = 0.5 * (h_a - cond_a) + 0.5 * (h_b - cond_b);
  return information / denom;
}

}  // namespace clustcmp
