#include "clustcmp/clustering.hpp"

#include <algorithm>
#include <numeric>

namespace clustcmp {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::empty_cluster: return "EmptyCluster";
    case errc::duplicate_cluster: return "DuplicateCluster";
    case errc::out_of_range_id: return "OutOfRangeId";
    case errc::duplicate_id_in_cluster: return "DuplicateIdInCluster";
    case errc::universe_mismatch: return "UniverseMismatch";
    case errc::empty_universe: return "EmptyUniverse";
    case errc::empty_input: return "EmptyInput";
    case errc::empty_clustering: return "EmptyClustering";
    case errc::bad_index: return "BadIndex";
    case errc::bad_k: return "BadK";
    case errc::bad_eta: return "BadEta";
    case errc::bad_sizes: return "BadSizes";
    case errc::degenerate_adjustment: return "DegenerateAdjustment";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

Clustering Clustering::validate(std::vector<std::vector<object_id>> raw, Universe universe) {
  if (universe.size < 0) {
    throw Error(errc::invalid_argument, "universe size must be non-negative");
  }

  std::int64_t total = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto& members = raw[i];
    if (members.empty()) {
      throw Error(errc::empty_cluster, std::string(errc_name(errc::empty_cluster)) +
                      ": cluster " + std::to_string(i) + " has no members",
                  static_cast<std::int64_t>(i));
    }
    std::sort(members.begin(), members.end());
    for (std::size_t j = 1; j < members.size(); ++j) {
      if (members[j] == members[j - 1]) {
        throw Error(errc::duplicate_id_in_cluster,
                    std::string(errc_name(errc::duplicate_id_in_cluster)) + ": id " +
                        std::to_string(members[j]) + " listed twice in cluster " +
                        std::to_string(i),
                    static_cast<std::int64_t>(i));
      }
    }
    if (static_cast<std::int64_t>(members.back()) >= universe.size) {
      throw Error(errc::out_of_range_id,
                  std::string(errc_name(errc::out_of_range_id)) + ": id " +
                      std::to_string(members.back()) + " in cluster " + std::to_string(i) +
                      " exceeds universe size " + std::to_string(universe.size),
                  static_cast<std::int64_t>(i));
    }
    total += static_cast<std::int64_t>(members.size());
  }

  // Distinctness: compare clusters in lexicographic order of their content,
  // reporting the later of the two positions.
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t lhs, std::size_t rhs) { return raw[lhs] < raw[rhs]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (raw[order[k]] == raw[order[k - 1]]) {
      const std::size_t later = std::max(order[k], order[k - 1]);
      const std::size_t earlier = std::min(order[k], order[k - 1]);
      throw Error(errc::duplicate_cluster,
                  std::string(errc_name(errc::duplicate_cluster)) + ": cluster " +
                      std::to_string(later) + " repeats cluster " + std::to_string(earlier),
                  static_cast<std::int64_t>(later));
    }
  }

  Clustering result;
  result.universe_ = universe;
  result.clusters_ = std::move(raw);
  result.total_membership_ = total;
  return result;
}

bool equal_as_sets(const Clustering& a, const Clustering& b) {
  if (a.universe() != b.universe() || a.size() != b.size()) return false;
  auto sorted_view = [](const Clustering& c) {
    std::vector<const std::vector<object_id>*> view;
    view.reserve(c.size());
    for (const auto& cluster : c.clusters()) view.push_back(&cluster);
    std::sort(view.begin(), view.end(),
              [](const auto* lhs, const auto* rhs) { return *lhs < *rhs; });
    return view;
  };
  const auto va = sorted_view(a);
  const auto vb = sorted_view(b);
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (*va[i] != *vb[i]) return false;
  }
  return true;
}

std::vector<object_id> outliers(const Clustering& c) {
  std::vector<char> covered(static_cast<std::size_t>(c.num_objects()), 0);
  for (const auto& cluster : c.clusters()) {
    for (object_id x : cluster) covered[x] = 1;
  }
  std::vector<object_id> result;
  for (std::size_t x = 0; x < covered.size(); ++x) {
    if (!covered[x]) result.push_back(static_cast<object_id>(x));
  }
  return result;
}

MembershipIndex::MembershipIndex(const Clustering& c) {
  const auto n = static_cast<std::size_t>(c.num_objects());
  num_clusters_ = c.size();
  offsets_.assign(n + 1, 0);
  for (const auto& cluster : c.clusters()) {
    for (object_id x : cluster) ++offsets_[x + 1];
  }
  for (std::size_t x = 0; x < n; ++x) offsets_[x + 1] += offsets_[x];
  entries_.resize(static_cast<std::size_t>(offsets_[n]));
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t ci = 0; ci < c.size(); ++ci) {
    for (object_id x : c.cluster(ci)) {
      entries_[static_cast<std::size_t>(cursor[x]++)] = static_cast<std::uint32_t>(ci);
    }
  }
}

}  // namespace clustcmp
