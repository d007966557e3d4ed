#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace bgr {

/// Path on `vertices` vertices (P_l).
struct PathV {
  int vertices;
  friend bool operator==(const PathV&, const PathV&) = default;
};
/// Even cycle C_{2m}; `vertices` = 2m.
struct EvenCycle {
  int vertices;
  friend bool operator==(const EvenCycle&, const EvenCycle&) = default;
};
/// Star K_{1,t}.
struct Star {
  int leaves;
  friend bool operator==(const Star&, const Star&) = default;
};
/// Complete bipartite K_{s,t}, s <= t.
struct Biclique {
  int s;
  int t;
  friend bool operator==(const Biclique&, const Biclique&) = default;
};

using Component = std::variant<PathV, EvenCycle, Star, Biclique>;

/// Bipartition sizes (x, y) of a connected component; x is the side holding
/// the component's vertex 0.
struct Footprint {
  int x;
  int y;
};

Footprint footprint(const Component& c);
int vertexCount(const Component& c);
std::string toString(const Component& c);

/// Monochromatic target H: a multiset of components, kept in insertion order.
class TargetGraph {
 public:
  TargetGraph() = default;
  explicit TargetGraph(std::vector<Component> components);

  /// r disjoint copies of one component (rG).
  static TargetGraph copies(int r, const Component& c);

  TargetGraph& add(const Component& c);

  const std::vector<Component>& components() const { return components_; }
  bool empty() const { return components_.empty(); }
  int vertexCount() const;

  friend bool operator==(const TargetGraph&, const TargetGraph&) = default;

 private:
  std::vector<Component> components_;
};

/// Grammar form, e.g. "P4+C6+K1,5"; repeated adjacent components collapse to
/// "3xP10".
std::string toString(const TargetGraph& h);

/// Explicit labelled graph of a target. Vertices of component i occupy a
/// contiguous block; `parity` is the bipartition class within the component.
struct PatternGraph {
  int vertexCount = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> parity;
  std::vector<int> component;
  std::vector<std::vector<int>> neighbours;
};

PatternGraph patternGraph(const TargetGraph& h);

}  // namespace bgr
