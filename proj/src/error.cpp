#include "semitsp/error.hpp"

namespace semitsp {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::asymmetric_weight: return "AsymmetricWeight";
    case Errc::nonpositive_weight: return "NonpositiveWeight";
    case Errc::nonzero_diagonal: return "NonzeroDiagonal";
    case Errc::invalid_vertex: return "InvalidVertex";
    case Errc::duplicate_edge: return "DuplicateEdge";
    case Errc::self_loop: return "SelfLoop";
    case Errc::declared_constant_mismatch: return "DeclaredConstantMismatch";
    case Errc::too_few_vertices: return "TooFewVertices";
    case Errc::too_large: return "TooLarge";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::not_a_traversal: return "NotATraversal";
    case Errc::root_not_in_tree: return "RootNotInTree";
    case Errc::invalid_constants: return "InvalidConstants";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::invalid_tour: return "InvalidTour";
    case Errc::invalid_walk: return "InvalidWalk";
    case Errc::no_edges: return "NoEdges";
    case Errc::odd_set_size: return "OddSetSize";
    case Errc::set_too_large: return "SetTooLarge";
    case Errc::odd_degree_vertex: return "OddDegreeVertex";
    case Errc::disconnected_multigraph: return "DisconnectedMultigraph";
    case Errc::no_matching_edge: return "NoMatchingEdge";
    case Errc::walk_does_not_start_with_matching_edge: return "WalkDoesNotStartWithMatchingEdge";
    case Errc::parse_error: return "ParseError";
    case Errc::matching_edge_lost: return "MatchingEdgeLost";
    case Errc::guarantee_violation: return "GuaranteeViolation";
    case Errc::internal_invariant_violation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

ErrorCategory category_of(Errc code) noexcept {
  switch (code) {
    case Errc::asymmetric_weight:
    case Errc::nonpositive_weight:
    case Errc::nonzero_diagonal:
    case Errc::invalid_vertex:
    case Errc::duplicate_edge:
    case Errc::self_loop:
    case Errc::declared_constant_mismatch:
    case Errc::parse_error:
      return ErrorCategory::validation;
    case Errc::matching_edge_lost:
    case Errc::guarantee_violation:
    case Errc::internal_invariant_violation:
      return ErrorCategory::verification;
    default:
      return ErrorCategory::solver;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

}  // namespace semitsp
