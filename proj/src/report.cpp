#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "semitsp/solve.hpp"
#include "semitsp/tolerance.hpp"

namespace semitsp {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::mst2: return "mst2";
    case Method::christofides: return "christofides";
    case Method::exact: return "exact";
  }
  return "?";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "mst2") return Method::mst2;
  if (name == "christofides") return Method::christofides;
  if (name == "exact") return Method::exact;
  return std::nullopt;
}

SolveReport solve_exact(const CompleteWeightedGraph& g, const RelaxationProfile& profile, int oracle_limit) {
  SolveReport report;
  report.method = Method::exact;
  report.tour = exact_tsp_held_karp(g, oracle_limit);
  report.lower_bound = report.tour.weight;
  report.lower_bound_is_optimum = true;
  report.optimum = report.tour.weight;
  report.beta = profile.beta;
  report.gamma = profile.gamma;
  report.guarantee_factor = 1.0;
  report.achieved_ratio = 1.0;
  return report;
}

SolveReport solve(const CompleteWeightedGraph& g, const SolveOptions& options) {
  if (g.size() < 3) throw Error(Errc::too_few_vertices, "solving needs n >= 3, got " + std::to_string(g.size()));
  return solve(g, classify(g), options);
}

SolveReport solve(const CompleteWeightedGraph& g, const RelaxationProfile& profile, const SolveOptions& options) {
  switch (options.method) {
    case Method::mst2: return solve_mst2(g, profile, options.root, options.child_order);
    case Method::christofides: return solve_christofides(g, profile, options.matching_limit);
    case Method::exact: return solve_exact(g, profile, options.oracle_limit);
  }
  throw Error(Errc::invalid_params, "unknown method");
}

Verification verify_against_optimum(const CompleteWeightedGraph& g, SolveReport& report, const Tour& optimum) {
  Verification v;
  v.optimum = optimum.weight;
  report.optimum = optimum.weight;
  auto fail = [&](std::string what) { v.failures.push_back(std::move(what)); };

  if (!is_permutation_of_range(report.tour.order, g.size())) {
    fail("tour is not a permutation");
    return v;
  }
  const double recomputed = tour_weight(g, report.tour.order);
  if (std::abs(recomputed - report.tour.weight) > kRelativeSlack * recomputed) fail("stored tour weight is stale");
  if (!within_bound(optimum.weight, report.tour.weight)) fail("tour is lighter than the optimum");
  if (!within_bound(report.tour.weight, report.guarantee_factor * optimum.weight)) {
    fail("w(tour) > guarantee factor * w(C*)");
  }
  if (report.method != Method::exact && !within_bound(report.lower_bound, optimum.weight)) {
    fail("w(T) > w(C*)");
  }
  if (report.trace) {
    const auto& t = *report.trace;
    if (!within_bound(t.matching.weight(), report.gamma / 2.0 * optimum.weight)) {
      fail("w(M) > (gamma/2) * w(C*)");
    }
    if (!within_bound(t.non_matching_weight, report.gamma * t.tree.weight())) {
      fail("non-matching tour weight > gamma * w(T)");
    }
    const auto edges = tour_edges(report.tour.order);
    for (auto [a, b] : t.matching.pairs()) {
      if (std::find(edges.begin(), edges.end(), VertexPair{a, b}) == edges.end()) {
        fail("matching edge (" + std::to_string(a) + "," + std::to_string(b) + ") missing from tour");
      }
    }
  }
  return v;
}

Verification verify_with_oracle(const CompleteWeightedGraph& g, SolveReport& report, int oracle_limit) {
  const Tour optimum = exact_tsp_held_karp(g, oracle_limit);
  return verify_against_optimum(g, report, optimum);
}

namespace {

std::string join_order(const std::vector<Vertex>& order) {
  std::ostringstream out;
  for (std::size_t k = 0; k < order.size(); ++k) out << (k ? " " : "") << order[k];
  return out.str();
}

}  // namespace

std::string report_to_text(const SolveReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "method=" << method_name(r.method) << "\n";
  out << "tour=" << join_order(r.tour.order) << "\n";
  out << "tour_weight=" << r.tour.weight << "\n";
  out << (r.lower_bound_is_optimum ? "optimum=" : "mst_weight=") << r.lower_bound << "\n";
  out << "beta=" << r.beta << " gamma=" << r.gamma << "\n";
  out << "guarantee_factor=" << r.guarantee_factor << "\n";
  out << "achieved_ratio=" << r.achieved_ratio << "\n";
  if (r.optimum && !r.lower_bound_is_optimum) {
    out << "verified_optimum=" << *r.optimum << " ratio_to_optimum=" << r.tour.weight / *r.optimum << "\n";
  }
  if (r.trace) {
    out << "odd_vertices=" << join_order(r.trace->odd_vertices) << "\n";
    out << "matching_weight=" << r.trace->matching.weight() << "\n";
    out << "non_matching_weight=" << r.trace->non_matching_weight << "\n";
  }
  return out.str();
}

std::string report_to_json(const SolveReport& r) {
  nlohmann::ordered_json j;
  j["method"] = method_name(r.method);
  j["tour"] = r.tour.order;
  j["tour_weight"] = r.tour.weight;
  j["lower_bound"] = r.lower_bound;
  j["lower_bound_is_optimum"] = r.lower_bound_is_optimum;
  j["beta"] = r.beta;
  j["gamma"] = r.gamma;
  j["guarantee_factor"] = r.guarantee_factor;
  j["achieved_ratio"] = r.achieved_ratio;
  j["optimum"] = r.optimum ? nlohmann::ordered_json(*r.optimum) : nlohmann::ordered_json(nullptr);
  if (r.trace) {
    const auto& t = *r.trace;
    nlohmann::ordered_json trace;
    trace["mst_weight"] = t.tree.weight();
    trace["odd_vertices"] = t.odd_vertices;
    trace["matching"] = t.matching.pairs();
    trace["matching_weight"] = t.matching.weight();
    trace["euler_walk"] = t.euler_walk.vertices;
    trace["non_matching_weight"] = t.non_matching_weight;
    j["trace"] = std::move(trace);
  }
  return j.dump(2);
}

}  // namespace semitsp
