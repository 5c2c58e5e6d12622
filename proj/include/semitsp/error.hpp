#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semitsp {

enum class Errc {
  // instance validation
  asymmetric_weight,
  nonpositive_weight,
  nonzero_diagonal,
  invalid_vertex,
  duplicate_edge,
  self_loop,
  declared_constant_mismatch,
  // preconditions
  too_few_vertices,
  too_large,
  not_a_permutation,
  not_a_traversal,
  root_not_in_tree,
  invalid_constants,
  invalid_params,
  invalid_tour,
  invalid_walk,
  no_edges,
  odd_set_size,
  set_too_large,
  odd_degree_vertex,
  disconnected_multigraph,
  no_matching_edge,
  walk_does_not_start_with_matching_edge,
  // input
  parse_error,
  // runtime certificate checks
  matching_edge_lost,
  guarantee_violation,
  internal_invariant_violation,
};

/// Coarse grouping used by the CLI to choose an exit code.
enum class ErrorCategory { validation, solver, verification };

std::string_view errc_name(Errc code) noexcept;
ErrorCategory category_of(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_of(code_); }

 private:
  Errc code_;
};

}  // namespace semitsp
