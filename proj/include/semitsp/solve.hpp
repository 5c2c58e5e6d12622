#pragma once

// Method dispatch, oracle verification and report rendering.

#include <string>
#include <vector>

#include "semitsp/christofides.hpp"
#include "semitsp/mst.hpp"
#include "semitsp/oracle.hpp"
#include "semitsp/solve_report.hpp"

namespace semitsp {

struct SolveOptions {
  Method method = Method::mst2;
  Vertex root = 0;
  ChildOrder child_order = ChildOrder::ascending;
  int matching_limit = kDefaultMatchingLimit;
  int oracle_limit = kHeldKarpLimit;
};

SolveReport solve_exact(const CompleteWeightedGraph& g, const RelaxationProfile& profile,
                        int oracle_limit = kHeldKarpLimit);

SolveReport solve(const CompleteWeightedGraph& g, const SolveOptions& options);
SolveReport solve(const CompleteWeightedGraph& g, const RelaxationProfile& profile, const SolveOptions& options);

struct Verification {
  double optimum = 0.0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
};

/// Checks a report against the exact optimum: the tour is a valid
/// permutation with the stored weight, w(tour) <= factor * w(C*),
/// w(T) <= w(C*) and, for christofides, w(M) <= (gamma/2) w(C*) and full
/// matching preservation. Records the optimum in the report.
Verification verify_against_optimum(const CompleteWeightedGraph& g, SolveReport& report, const Tour& optimum);

/// Runs Held-Karp (n <= oracle_limit) and verifies.
Verification verify_with_oracle(const CompleteWeightedGraph& g, SolveReport& report,
                                int oracle_limit = kHeldKarpLimit);

std::string report_to_text(const SolveReport& report);
std::string report_to_json(const SolveReport& report);

}  // namespace semitsp
