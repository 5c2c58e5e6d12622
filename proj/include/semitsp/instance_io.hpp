#pragma once

// Instance files. JSON (canonical, 0-based vertices):
//   {"name": "...", "n": 3, "matrix": [[0,1,2],[1,0,3],[2,3,0]], "beta": 1, "gamma": 1}
//   {"name": "...", "n": 3, "edges": [[0,1,1.5],[1,2,2]]}
// "name", "beta" and "gamma" are optional; declared constants are only
// accepted on the matrix form and must match recomputation.
// TSPLIB (read-only): TYPE: TSP, EDGE_WEIGHT_TYPE: EXPLICIT,
// EDGE_WEIGHT_FORMAT: FULL_MATRIX. Diagonal entries are ignored.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "semitsp/graph.hpp"

namespace semitsp {

struct DeclaredConstants {
  std::optional<double> beta;
  std::optional<double> gamma;
};

struct InstanceFile {
  std::string name;
  std::variant<CompleteWeightedGraph, WeightedGraph> graph;
  DeclaredConstants declared;

  int size() const;
  bool is_complete() const noexcept { return std::holds_alternative<CompleteWeightedGraph>(graph); }
};

/// Detects JSON (first non-blank byte '{') or TSPLIB. Throws ParseError
/// with a line number, or the validation error of the graph.
InstanceFile parse_instance(std::string_view text);
InstanceFile load_instance(const std::filesystem::path& path);

/// Matrix form, weights printed with 17 significant digits.
std::string serialize_json(const CompleteWeightedGraph& g, std::string_view name = {},
                           const DeclaredConstants& declared = {});
std::string serialize_json(const WeightedGraph& g, std::string_view name = {});

void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Decimal with 17 significant digits; round-trips every double.
std::string format_double(double value);

}  // namespace semitsp
