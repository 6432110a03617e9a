#pragma once

// Brute-force reference implementations, independent of the library's sparse
// matching path. Test-only.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "clustcmp/clustering.hpp"

namespace oracles {

using clustcmp::Clustering;
using clustcmp::object_id;

inline std::int64_t set_intersection_size(const std::vector<object_id>& a,
                                          const std::vector<object_id>& b) {
  std::vector<object_id> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return static_cast<std::int64_t>(out.size());
}

inline double jaccard(const std::vector<object_id>& a, const std::vector<object_id>& b) {
  const std::int64_t inter = set_intersection_size(a, b);
  const auto uni = static_cast<std::int64_t>(a.size() + b.size()) - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

// All-pairs best match; no inverted index anywhere.
inline double naive_best_match(const std::vector<object_id>& c, const Clustering& other) {
  double best = 0.0;
  for (const auto& cj : other.clusters()) {
    best = std::max(best, jaccard(c, cj));
  }
  return best;
}

// Same reduction contract as the library (terms sorted before summation, so
// results are comparable bit-for-bit), but matching is all-pairs.
inline double naive_fstar_w_asym(const Clustering& a, const Clustering& b) {
  if (a.clusters().empty()) return 0.0;
  std::vector<double> terms;
  std::int64_t total = 0;
  for (const auto& ci : a.clusters()) {
    terms.push_back(static_cast<double>(ci.size()) * naive_best_match(ci, b));
    total += static_cast<std::int64_t>(ci.size());
  }
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum / static_cast<double>(total);
}

inline std::vector<object_id> naive_outliers(const Clustering& c) {
  std::vector<bool> covered(static_cast<std::size_t>(c.num_objects()), false);
  for (const auto& cluster : c.clusters()) {
    for (object_id x : cluster) covered[x] = true;
  }
  std::vector<object_id> out;
  for (std::size_t x = 0; x < covered.size(); ++x) {
    if (!covered[x]) out.push_back(static_cast<object_id>(x));
  }
  return out;
}

inline double naive_fstar_wo_asym(const Clustering& a, const Clustering& b) {
  const auto n = static_cast<double>(a.num_objects());
  const std::vector<object_id> o1 = naive_outliers(a);
  const std::vector<object_id> o2 = naive_outliers(b);
  const double oj = (o1.empty() && o2.empty()) ? 0.0 : jaccard(o1, o2);
  const double weighted = naive_fstar_w_asym(a, b);
  return weighted + (static_cast<double>(o1.size()) / n) * (oj - weighted);
}

inline double naive_fstar_wo(const Clustering& a, const Clustering& b) {
  return 0.5 * naive_fstar_wo_asym(a, b) + 0.5 * naive_fstar_wo_asym(b, a);
}

// Pairwise-agreement ARI for partitions given per-object labels.
inline double brute_ari(const std::vector<std::int64_t>& labels_a,
                        const std::vector<std::int64_t>& labels_b) {
  std::int64_t both = 0, a_only = 0, b_only = 0, neither = 0;
  const std::size_t n = labels_a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same_a = labels_a[i] == labels_a[j];
      const bool same_b = labels_b[i] == labels_b[j];
      both += same_a && same_b;
      a_only += same_a && !same_b;
      b_only += !same_a && same_b;
      neither += !same_a && !same_b;
    }
  }
  const double numerator =
      2.0 * (static_cast<double>(both) * neither - static_cast<double>(a_only) * b_only);
  const double denominator =
      static_cast<double>(both + a_only) * (a_only + neither) +
      static_cast<double>(both + b_only) * (b_only + neither);
  if (denominator == 0.0) return (a_only == 0 && b_only == 0) ? 1.0 : 0.0;
  return numerator / denominator;
}

// Omega index straight from its definition: for every object pair, count
// shared clusters on each side by scanning all clusters.
inline double naive_omega(const Clustering& a, const Clustering& b) {
  const std::int64_t n = a.num_objects();
  const std::int64_t total_pairs = n * (n - 1) / 2;
  auto shared = [](const Clustering& c, object_id u, object_id v) {
    std::int64_t count = 0;
    for (const auto& cluster : c.clusters()) {
      const bool has_u = std::binary_search(cluster.begin(), cluster.end(), u);
      const bool has_v = std::binary_search(cluster.begin(), cluster.end(), v);
      count += has_u && has_v;
    }
    return count;
  };
  std::vector<std::int64_t> hist_a, hist_b;
  std::int64_t agree = 0;
  for (object_id u = 0; static_cast<std::int64_t>(u) < n; ++u) {
    for (object_id v = u + 1; static_cast<std::int64_t>(v) < n; ++v) {
      const std::int64_t ja = shared(a, u, v);
      const std::int64_t jb = shared(b, u, v);
      agree += ja == jb;
      if (static_cast<std::size_t>(ja) >= hist_a.size()) hist_a.resize(ja + 1, 0);
      if (static_cast<std::size_t>(jb) >= hist_b.size()) hist_b.resize(jb + 1, 0);
      ++hist_a[ja];
      ++hist_b[jb];
    }
  }
  double expected = 0.0;
  for (std::size_t j = 0; j < std::min(hist_a.size(), hist_b.size()); ++j) {
    expected += static_cast<double>(hist_a[j]) * static_cast<double>(hist_b[j]);
  }
  expected /= static_cast<double>(total_pairs) * static_cast<double>(total_pairs);
  const double observed = static_cast<double>(agree) / static_cast<double>(total_pairs);
  if (expected == 1.0) return observed == 1.0 ? 1.0 : 0.0;
  return (observed - expected) / (1.0 - expected);
}

// oNMI evaluated densely over boolean membership rows.
struct NaiveOnmi {
  double lfk = 0.0;
  double mgh = 0.0;
};

inline NaiveOnmi naive_onmi(const Clustering& a, const Clustering& b) {
  const std::int64_t n = a.num_objects();
  auto rows = [n](const Clustering& c) {
    std::vector<std::vector<bool>> r(c.size(), std::vector<bool>(static_cast<std::size_t>(n)));
    for (std::size_t k = 0; k < c.size(); ++k) {
      for (object_id x : c.cluster(k)) r[k][x] = true;
    }
    return r;
  };
  const auto rows_a = rows(a);
  const auto rows_b = rows(b);
  auto h = [n](std::int64_t count) {
    if (count <= 0) return 0.0;
    const double p = static_cast<double>(count) / static_cast<double>(n);
    return -p * std::log2(p);
  };
  auto cluster_entropy = [&](const std::vector<bool>& row) {
    std::int64_t size = 0;
    for (bool bit : row) size += bit;
    return h(size) + h(n - size);
  };
  auto conditional = [&](const std::vector<bool>& x, const std::vector<bool>& y, bool& ok) {
    std::int64_t c00 = 0, c01 = 0, c10 = 0, c11 = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      const bool in_x = x[static_cast<std::size_t>(i)];
      const bool in_y = y[static_cast<std::size_t>(i)];
      c00 += !in_x && !in_y;
      c01 += !in_x && in_y;
      c10 += in_x && !in_y;
      c11 += in_x && in_y;
    }
    ok = h(c00) + h(c11) >= h(c01) + h(c10);
    std::int64_t sy = c01 + c11;
    return std::max(0.0, h(c00) + h(c01) + h(c10) + h(c11) - h(sy) - h(n - sy));
  };
  auto direction = [&](const std::vector<std::vector<bool>>& xs,
                       const std::vector<std::vector<bool>>& ys) {
    std::vector<double> result;
    for (const auto& x : xs) {
      double best = cluster_entropy(x);
      for (const auto& y : ys) {
        bool ok = false;
        const double value = conditional(x, y, ok);
        if (ok) best = std::min(best, value);
      }
      result.push_back(best);
    }
    return result;
  };
  const auto cond_a = direction(rows_a, rows_b);
  const auto cond_b = direction(rows_b, rows_a);

  NaiveOnmi result;
  double mean_a = 0.0, mean_b = 0.0;
  for (std::size_t k = 0; k < rows_a.size(); ++k) {
    const double hx = cluster_entropy(rows_a[k]);
    if (hx > 0.0) mean_a += cond_a[k] / hx;
  }
  for (std::size_t k = 0; k < rows_b.size(); ++k) {
    const double hy = cluster_entropy(rows_b[k]);
    if (hy > 0.0) mean_b += cond_b[k] / hy;
  }
  mean_a /= static_cast<double>(rows_a.size());
  mean_b /= static_cast<double>(rows_b.size());
  result.lfk = 1.0 - 0.5 * (mean_a + mean_b);

  double ha = 0.0, hb = 0.0, ca = 0.0, cb = 0.0;
  for (std::size_t k = 0; k < rows_a.size(); ++k) {
    ha += cluster_entropy(rows_a[k]);
    ca += cond_a[k];
  }
  for (std::size_t k = 0; k < rows_b.size(); ++k) {
    hb += cluster_entropy(rows_b[k]);
    cb += cond_b[k];
  }
  const double denom = std::max(ha, hb);
  result.mgh = denom == 0.0 ? 1.0 : (0.5 * (ha - ca) + 0.5 * (hb - cb)) / denom;
  return result;
}

}  // namespace oracles
