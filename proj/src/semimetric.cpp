#include "semitsp/semimetric.hpp"

#include <algorithm>
#include <string>

namespace semitsp {

BetaResult compute_beta(const CompleteWeightedGraph& g) {
  const int n = g.size();
  BetaResult result;
  if (n == 1) return result;
  const SquareMatrix& d = g.matrix();

  // (x,y,z) and (z,y,x) give the same ratio and x < z is the smaller
  // tuple, so scanning x < z in lexicographic order finds the same
  // witness as the full ordered scan.
  double best = 0.0;
  std::array<Vertex, 3> arg{};
  for (Vertex x = 0; x < n; ++x) {
    const auto dx = d.row(x);
    for (Vertex y = 0; y < n; ++y) {
      const auto dy = d.row(y);
      const double dxy = dx[y];
      for (Vertex z = x + 1; z < n; ++z) {
        const double ratio = dx[z] / (dxy + dy[z]);
        if (ratio > best) {
          best = ratio;
          arg = {x, y, z};
        }
      }
    }
  }
  result.beta = best;
  result.witness = arg;
  return result;
}

SquareMatrix shortest_paths(const CompleteWeightedGraph& g) {
  SquareMatrix dist = g.matrix();
  const int n = dist.size();
  for (int k = 0; k < n; ++k) {
    const auto dk = dist.row(k);
    for (int i = 0; i < n; ++i) {
      auto di = dist.row(i);
      const double dik = di[k];
      for (int j = 0; j < n; ++j) {
        const double via = dik + dk[j];
        if (via < di[j]) di[j] = via;
      }
    }
  }
  return dist;
}

GammaResult compute_gamma(const CompleteWeightedGraph& g) {
  GammaResult result;
  result.shortest_path = shortest_paths(g);
  const int n = g.size();
  if (n == 1) return result;

  double best = 0.0;
  VertexPair arg{0, 1};
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      const double ratio = g.weight(x, y) / result.shortest_path(x, y);
      if (ratio > best) {
        best = ratio;
        arg = {x, y};
      }
    }
  }
  result.gamma = best;
  result.witness = arg;
  return result;
}

int suzuki_exponent(int n) {
  if (n < 2) throw Error(Errc::too_few_vertices, "Suzuki exponent needs n >= 2");
  int e = 0;
  long long reach = 1;
  while (reach < n - 1) {
    reach *= 2;
    ++e;
  }
  return e;
}

double suzuki_bound(double beta, int n) {
  double bound = 1.0;
  for (int e = suzuki_exponent(n); e > 0; --e) bound *= beta;
  return bound;
}

RelaxationProfile classify(const CompleteWeightedGraph& g) {
  BetaResult b = compute_beta(g);
  GammaResult c = compute_gamma(g);
  RelaxationProfile p;
  p.beta = b.beta;
  p.gamma = c.gamma;
  p.kind = b.beta == 1.0 ? MetricClass::metric : MetricClass::beta_metric;
  p.shortest_path = std::move(c.shortest_path);
  p.beta_witness = b.witness;
  p.gamma_witness = c.witness;
  return p;
}

std::string_view metric_class_name(MetricClass kind) noexcept {
  return kind == MetricClass::metric ? "metric" : "beta_metric";
}

std::string_view bound_method_name(BoundMethod m) noexcept {
  switch (m) {
    case BoundMethod::two_gamma: return "2g";
    case BoundMethod::three_halves_gamma: return "3g/2";
    case BoundMethod::four_beta: return "4b";
    case BoundMethod::beta_squared_plus_beta: return "b^2+b";
    case BoundMethod::three_halves_beta_sq: return "3b^2/2";
    case BoundMethod::three_beta_sq_plus_beta: return "(3b^2+b)/2";
  }
  return "?";
}

std::array<BoundValue, 6> bound_values(double beta, double gamma) {
  const double b2 = beta * beta;
  return {{
      {BoundMethod::two_gamma, 2.0 * gamma},
      {BoundMethod::three_halves_gamma, 1.5 * gamma},
      {BoundMethod::four_beta, 4.0 * beta},
      {BoundMethod::beta_squared_plus_beta, b2 + beta},
      {BoundMethod::three_halves_beta_sq, 1.5 * b2},
      {BoundMethod::three_beta_sq_plus_beta, (3.0 * b2 + beta) / 2.0},
  }};
}

std::vector<BoundValue> compare_bounds(double beta, double gamma) {
  if (!(beta >= 1.0) || !(gamma >= beta)) {
    throw Error(Errc::invalid_constants, "need 1 <= beta <= gamma, got beta=" + std::to_string(beta) +
                                             " gamma=" + std::to_string(gamma));
  }
  auto values = bound_values(beta, gamma);
  std::vector<BoundValue> sorted(values.begin(), values.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const BoundValue& a, const BoundValue& b) { return a.value < b.value; });
  return sorted;
}

}  // namespace semitsp
