#pragma once

#include <stdexcept>
#include <string>

namespace arbsample {

/// Typed failure conditions surfaced by the library. The message of an
/// Error names the condition and its arguments, e.g. "IsolatedNode(2)".
enum class errc {
  negative_weight,
  edge_into_root,
  self_loop,
  isolated_node,
  parent_out_of_range,
  bad_graph_json,
  non_square,
  singular,
  singular_update,
  too_large,
  empty_support,
  support_exhausted,
  unreachable,
  no_root_edge,
  retry_cap_exceeded,
  degenerate_column,
  foreign_tree,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace arbsample
