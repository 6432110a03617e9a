#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace clustcmp {

// Object ids are dense integers in [0, n).
using object_id = std::uint32_t;

enum class errc {
  empty_cluster,
  duplicate_cluster,
  out_of_range_id,
  duplicate_id_in_cluster,
  universe_mismatch,
  empty_universe,
  empty_input,
  empty_clustering,
  bad_index,
  bad_k,
  bad_eta,
  bad_sizes,
  degenerate_adjustment,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc code) noexcept;

// Single exception type for all library errors. `index()` carries the
// offending cluster position (or -1) so file readers can map it back to a
// source line.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message, std::int64_t index = -1)
      : std::runtime_error(std::move(message)), code_(code), index_(index) {}

  errc code() const noexcept { return code_; }
  std::int64_t index() const noexcept { return index_; }

 private:
  errc code_;
  std::int64_t index_;
};

}  // namespace clustcmp
