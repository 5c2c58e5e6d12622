#include <algorithm>
#include <string>
#include <tuple>

#include "semitsp/christofides.hpp"

namespace semitsp {

namespace {

struct Incidence {
  EdgeTag tag;
  Vertex other;
  std::size_t edge;
};

class EulerWalker {
 public:
  explicit EulerWalker(const EulerMultigraph& mg)
      : edges_(mg.multiedges()), used_(edges_.size(), false), incident_(mg.size()), cursor_(mg.size(), 0) {
    for (std::size_t id = 0; id < edges_.size(); ++id) {
      const auto& e = edges_[id];
      incident_[e.u].push_back({e.tag, e.v, id});
      incident_[e.v].push_back({e.tag, e.u, id});
    }
    // Matching multiedges first, then smallest neighbour, then input order.
    for (auto& list : incident_) {
      std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) {
        return std::make_tuple(a.tag != EdgeTag::matching, a.other, a.edge) <
               std::make_tuple(b.tag != EdgeTag::matching, b.other, b.edge);
      });
    }
  }

  bool has_unused(Vertex v) {
    auto& list = incident_[v];
    auto& c = cursor_[v];
    while (c < list.size() && used_[list[c].edge]) ++c;
    return c < list.size();
  }

  std::size_t remaining() const noexcept { return edges_.size() - used_count_; }

  /// Greedy closed walk from `start` until no unused edge is left at the
  /// current vertex. With all degrees even this only stops at `start`.
  Walk walk_from(Vertex start) {
    Walk w;
    w.vertices.push_back(start);
    Vertex current = start;
    while (has_unused(current)) {
      const Incidence& step = incident_[current][cursor_[current]];
      used_[step.edge] = true;
      ++used_count_;
      w.tags.push_back(step.tag);
      w.vertices.push_back(step.other);
      current = step.other;
    }
    if (current != start) {
      throw Error(Errc::internal_invariant_violation, "Hierholzer sub-walk did not close at its start vertex");
    }
    return w;
  }

 private:
  const std::vector<Multiedge>& edges_;
  std::vector<bool> used_;
  std::size_t used_count_ = 0;
  std::vector<std::vector<Incidence>> incident_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

Walk euler_walk_matching_first(const EulerMultigraph& mg, const Matching& matching) {
  if (matching.empty()) throw Error(Errc::no_matching_edge, "matching-first walk needs a nonempty matching");
  for (auto [a, b] : matching.pairs()) {
    const auto& me = mg.multiedges();
    const bool present = std::any_of(me.begin(), me.end(), [&](const Multiedge& e) {
      return e.tag == EdgeTag::matching && std::minmax(e.u, e.v) == std::minmax(a, b);
    });
    if (!present) {
      throw Error(Errc::no_matching_edge, "matching pair (" + std::to_string(a) + "," + std::to_string(b) +
                                              ") has no matching multiedge in the multigraph");
    }
  }
  const auto deg = mg.degrees();
  if (std::find(deg.begin(), deg.end(), 0) != deg.end() && mg.size() > 1) {
    throw Error(Errc::disconnected_multigraph, "multigraph has an isolated vertex");
  }

  Vertex start = mg.size();
  for (auto [a, b] : matching.pairs()) start = std::min({start, a, b});

  EulerWalker walker(mg);
  Walk walk = walker.walk_from(start);
  while (walker.remaining() > 0) {
    // Anchor: smallest vertex on the current walk with an unused edge.
    Vertex anchor = -1;
    for (Vertex v : walk.vertices) {
      if ((anchor == -1 || v < anchor) && walker.has_unused(v)) anchor = v;
    }
    if (anchor == -1) {
      throw Error(Errc::disconnected_multigraph,
                  std::to_string(walker.remaining()) + " multiedges unreachable from vertex " + std::to_string(start));
    }
    Walk sub = walker.walk_from(anchor);
    const auto last = static_cast<std::size_t>(
        std::distance(walk.vertices.begin(), std::find(walk.vertices.rbegin(), walk.vertices.rend(), anchor).base()) - 1);
    walk.vertices.erase(walk.vertices.begin() + static_cast<std::ptrdiff_t>(last));
    walk.vertices.insert(walk.vertices.begin() + static_cast<std::ptrdiff_t>(last), sub.vertices.begin(),
                         sub.vertices.end());
    walk.tags.insert(walk.tags.begin() + static_cast<std::ptrdiff_t>(last), sub.tags.begin(), sub.tags.end());
  }
  // Every vertex must be on the walk (connected and spanning).
  std::vector<bool> on_walk(static_cast<std::size_t>(mg.size()), false);
  for (Vertex v : walk.vertices) on_walk[v] = true;
  if (std::find(on_walk.begin(), on_walk.end(), false) != on_walk.end()) {
    throw Error(Errc::disconnected_multigraph, "walk does not reach every vertex");
  }
  return walk;
}

}  // namespace semitsp
