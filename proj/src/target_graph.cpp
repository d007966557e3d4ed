#include "bgr/target_graph.hpp"

#include "bgr/colored_bigraph.hpp"

namespace bgr {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

void validate(const Component& c) {
  std::visit(Overloaded{
                 [](const PathV& p) {
                   if (p.vertices < 2) throw InputError("paths need at least 2 vertices");
                 },
                 [](const EvenCycle& e) {
                   if (e.vertices < 4 || e.vertices % 2 != 0) {
                     throw InputError("cycles must be even with at least 4 vertices "
                                      "(odd cycles are not bipartite)");
                   }
                 },
                 [](const Star& s) {
                   if (s.leaves < 1) throw InputError("stars need at least one leaf");
                 },
                 [](const Biclique& b) {
                   if (b.s < 1 || b.t < b.s) {
                     throw InputError("bicliques K_{s,t} need 1 <= s <= t");
                   }
                 }},
             c);
}

}  // namespace

Footprint footprint(const Component& c) {
  return std::visit(
      Overloaded{[](const PathV& p) { return Footprint{(p.vertices + 1) / 2, p.vertices / 2}; },
                 [](const EvenCycle& e) { return Footprint{e.vertices / 2, e.vertices / 2}; },
                 [](const Star& s) { return Footprint{1, s.leaves}; },
                 [](const Biclique& b) { return Footprint{b.s, b.t}; }},
      c);
}

int vertexCount(const Component& c) {
  const Footprint f = footprint(c);
  return f.x + f.y;
}

std::string toString(const Component& c) {
  return std::visit(
      Overloaded{[](const PathV& p) { return "P" + std::to_string(p.vertices); },
                 [](const EvenCycle& e) { return "C" + std::to_string(e.vertices); },
                 [](const Star& s) { return "K1," + std::to_string(s.leaves); },
                 [](const Biclique& b) {
                   return "K" + std::to_string(b.s) + "," + std::to_string(b.t);
                 }},
      c);
}

TargetGraph::TargetGraph(std::vector<Component> components)
    : components_(std::move(components)) {
  for (const Component& c : components_) validate(c);
}

TargetGraph TargetGraph::copies(int r, const Component& c) {
  if (r < 1) throw InputError("copy count must be positive");
  return TargetGraph(std::vector<Component>(r, c));
}

TargetGraph& TargetGraph::add(const Component& c) {
  validate(c);
  components_.push_back(c);
  return *this;
}

int TargetGraph::vertexCount() const {
  int n = 0;
  for (const Component& c : components_) n += bgr::vertexCount(c);
  return n;
}

std::string toString(const TargetGraph& h) {
  std::string out;
  const auto& cs = h.components();
  for (std::size_t i = 0; i < cs.size();) {
    std::size_t j = i;
    while (j < cs.size() && cs[j] == cs[i]) ++j;
    if (!out.empty()) out += '+';
    if (j - i > 1) out += std::to_string(j - i) + "x";
    out += toString(cs[i]);
    i = j;
  }
  return out;
}

PatternGraph patternGraph(const TargetGraph& h) {
  PatternGraph g;
  int comp = 0;
  for (const Component& c : h.components()) {
    const int base = g.vertexCount;
    auto addVertex = [&](int parity) {
      g.parity.push_back(parity);
      g.component.push_back(comp);
      ++g.vertexCount;
    };
    auto addEdge = [&](int a, int b) { g.edges.emplace_back(base + a, base + b); };
    std::visit(Overloaded{[&](const PathV& p) {
                            for (int i = 0; i < p.vertices; ++i) addVertex(i % 2);
                            for (int i = 0; i + 1 < p.vertices; ++i) addEdge(i, i + 1);
                          },
                          [&](const EvenCycle& e) {
                            for (int i = 0; i < e.vertices; ++i) addVertex(i % 2);
                            for (int i = 0; i + 1 < e.vertices; ++i) addEdge(i, i + 1);
                            addEdge(e.vertices - 1, 0);
                          },
                          [&](const Star& s) {
                            addVertex(0);
                            for (int i = 1; i <= s.leaves; ++i) {
                              addVertex(1);
                              addEdge(0, i);
                            }
                          },
                          [&](const Biclique& b) {
                            for (int i = 0; i < b.s; ++i) addVertex(0);
                            for (int j = 0; j < b.t; ++j) addVertex(1);
                            for (int i = 0; i < b.s; ++i) {
                              for (int j = 0; j < b.t; ++j) addEdge(i, b.s + j);
                            }
                          }},
               c);
    ++comp;
  }
  g.neighbours.assign(g.vertexCount, {});
  for (auto [a, b] : g.edges) {
    g.neighbours[a].push_back(b);
    g.neighbours[b].push_back(a);
  }
  return g;
}

}  // namespace bgr
