#pragma once

// Brute-force reference implementations used by the tests. None of them call
// the detection, embedding or statistics code under test.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bgr/colored_bigraph.hpp"
#include "bgr/patterns.hpp"
#include "bgr/target_graph.hpp"

namespace oracle {

using bgr::Color;
using bgr::ColorMatrix;
using bgr::ColoredBigraph;

// Alternating vertex sequences of the given length: entries are indices into
// the starting side at even positions and the other side at odd positions.
inline bool hasRainbowPath(const ColorMatrix& m, int vertices) {
  const int a = static_cast<int>(m.rows()), b = static_cast<int>(m.cols());
  for (int startSide = 0; startSide < 2; ++startSide) {
    std::vector<int> seq;
    std::vector<Color> colors;
    std::vector<char> usedA(a, 0), usedB(b, 0);
    bool found = false;
    auto rec = [&](auto&& self) -> void {
      if (found) return;
      if (static_cast<int>(seq.size()) == vertices) {
        found = true;
        return;
      }
      const int pos = static_cast<int>(seq.size());
      const bool onA = (pos % 2 == 0) == (startSide == 0);
      const int limit = onA ? a : b;
      for (int x = 0; x < limit && !found; ++x) {
        std::vector<char>& used = onA ? usedA : usedB;
        if (used[x]) continue;
        Color c = 0;
        if (pos > 0) {
          const int prev = seq.back();
          c = onA ? m(x, prev) : m(prev, x);
          if (std::find(colors.begin(), colors.end(), c) != colors.end()) continue;
        }
        used[x] = 1;
        seq.push_back(x);
        if (pos > 0) colors.push_back(c);
        self(self);
        if (pos > 0) colors.pop_back();
        seq.pop_back();
        used[x] = 0;
      }
    };
    rec(rec);
    if (found) return true;
  }
  return false;
}

inline bool hasRainbowStar(const ColorMatrix& m) {
  for (int u = 0; u < m.rows(); ++u) {
    std::set<Color> seen(m.row(u).data(), m.row(u).data() + m.cols());
    if (seen.size() >= 3) return true;
  }
  for (int v = 0; v < m.cols(); ++v) {
    std::set<Color> seen;
    for (int u = 0; u < m.rows(); ++u) seen.insert(m(u, v));
    if (seen.size() >= 3) return true;
  }
  return false;
}

inline bool hasRainbow(const ColorMatrix& m, bgr::RainbowPattern p) {
  switch (p) {
    case bgr::RainbowPattern::P4: return hasRainbowPath(m, 4);
    case bgr::RainbowPattern::P5: return hasRainbowPath(m, 5);
    case bgr::RainbowPattern::K13: return hasRainbowStar(m);
  }
  return false;
}

// Own edge list of a target: vertices numbered per component, side 0 / 1.
struct Pattern {
  std::vector<int> side;
  std::vector<int> comp;
  std::vector<std::pair<int, int>> edges;
};

inline Pattern buildPattern(const bgr::TargetGraph& h) {
  Pattern p;
  int ci = 0;
  for (const bgr::Component& c : h.components()) {
    const int base = static_cast<int>(p.side.size());
    auto addVertex = [&](int s) {
      p.side.push_back(s);
      p.comp.push_back(ci);
    };
    if (const auto* path = std::get_if<bgr::PathV>(&c)) {
      for (int i = 0; i < path->vertices; ++i) addVertex(i % 2);
      for (int i = 0; i + 1 < path->vertices; ++i) p.edges.emplace_back(base + i, base + i + 1);
    } else if (const auto* cyc = std::get_if<bgr::EvenCycle>(&c)) {
      for (int i = 0; i < cyc->vertices; ++i) addVertex(i % 2);
      for (int i = 0; i < cyc->vertices; ++i) {
        p.edges.emplace_back(base + i, base + (i + 1) % cyc->vertices);
      }
    } else if (const auto* star = std::get_if<bgr::Star>(&c)) {
      addVertex(0);
      for (int i = 0; i < star->leaves; ++i) {
        addVertex(1);
        p.edges.emplace_back(base, base + 1 + i);
      }
    } else {
      const auto& bc = std::get<bgr::Biclique>(c);
      for (int i = 0; i < bc.s; ++i) addVertex(0);
      for (int j = 0; j < bc.t; ++j) addVertex(1);
      for (int i = 0; i < bc.s; ++i) {
        for (int j = 0; j < bc.t; ++j) p.edges.emplace_back(base + i, base + bc.s + j);
      }
    }
    ++ci;
  }
  return p;
}

// Does the pattern embed into the host graph `adj` (rows = side A)? Tries
// every orientation of every component and every injective placement.
inline bool embeds(const bgr::TargetGraph& h, const bgr::RowMajorMatrix<bool>& adj) {
  const Pattern p = buildPattern(h);
  const int nv = static_cast<int>(p.side.size());
  const int comps = static_cast<int>(h.components().size());
  const int a = static_cast<int>(adj.rows()), b = static_cast<int>(adj.cols());
  for (std::uint32_t mask = 0; mask < (1u << comps); ++mask) {
    std::vector<int> onA(nv);
    int needA = 0;
    for (int v = 0; v < nv; ++v) {
      onA[v] = p.side[v] == static_cast<int>((mask >> p.comp[v]) & 1u);
      needA += onA[v];
    }
    if (needA > a || nv - needA > b) continue;
    std::vector<int> image(nv, -1);
    std::vector<char> usedA(a, 0), usedB(b, 0);
    auto ok = [&](int v) {
      for (const auto& [x, y] : p.edges) {
        const int other = x == v ? y : y == v ? x : -1;
        if (other < 0 || image[other] < 0) continue;
        const int r = onA[v] ? image[v] : image[other];
        const int c = onA[v] ? image[other] : image[v];
        if (!adj(r, c)) return false;
      }
      return true;
    };
    auto rec = [&](auto&& self, int v) -> bool {
      if (v == nv) return true;
      const int limit = onA[v] ? a : b;
      std::vector<char>& used = onA[v] ? usedA : usedB;
      for (int x = 0; x < limit; ++x) {
        if (used[x]) continue;
        image[v] = x;
        if (ok(v)) {
          used[x] = 1;
          if (self(self, v + 1)) return true;
          used[x] = 0;
        }
        image[v] = -1;
      }
      return false;
    };
    if (rec(rec, 0)) return true;
  }
  return false;
}

inline bool hasMonochromatic(const ColoredBigraph& g, const bgr::TargetGraph& h) {
  for (int c = 1; c <= g.k(); ++c) {
    if (embeds(h, (g.matrix().array() == static_cast<Color>(c)).matrix())) return true;
  }
  return false;
}

struct Stats {
  int s, t, sStar, tStar;
};

// Enumerates all 2^components orientations.
inline Stats bipartition(const bgr::TargetGraph& h) {
  const auto& cs = h.components();
  Stats out{1 << 30, -1, -1, 1 << 30};
  for (std::uint32_t mask = 0; mask < (1u << cs.size()); ++mask) {
    int x = 0, y = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const bgr::Footprint f = bgr::footprint(cs[i]);
      if ((mask >> i) & 1u) {
        x += f.y;
        y += f.x;
      } else {
        x += f.x;
        y += f.y;
      }
    }
    const int small = std::min(x, y), large = std::max(x, y);
    out.s = std::min(out.s, small);
    out.t = std::max(out.t, large);
    out.sStar = std::max(out.sStar, small);
    out.tStar = std::min(out.tStar, large);
  }
  return out;
}

inline ColoredBigraph randomColoring(int a, int b, int k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, k);
  ColorMatrix m(a, b);
  for (int i = 0; i < a * b; ++i) m.data()[i] = static_cast<Color>(d(rng));
  return ColoredBigraph(std::move(m), k);
}

// Applies a random group element: row/column permutations, color relabeling
// and (for square matrices) an optional transpose.
inline ColoredBigraph randomImage(const ColoredBigraph& g, std::mt19937_64& rng) {
  std::vector<int> rows(g.rows()), cols(g.cols());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::vector<Color> relabel(g.k() + 1);
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin() + 1, relabel.end(), rng);
  ColorMatrix m(g.rows(), g.cols());
  for (int u = 0; u < g.rows(); ++u) {
    for (int v = 0; v < g.cols(); ++v) m(u, v) = relabel[g(rows[u], cols[v])];
  }
  if (g.square() && (rng() & 1u)) m = ColorMatrix(m.transpose());
  return ColoredBigraph(std::move(m), g.k());
}

// Every k-coloring of K_{n,n} in lexicographic order of the cell vector.
template <class F>
void forEachColoring(int n, int k, F&& f) {
  ColorMatrix m = ColorMatrix::Constant(n, n, 1);
  for (;;) {
    f(m);
    int i = 0;
    while (i < n * n && m.data()[i] == k) m.data()[i++] = 1;
    if (i == n * n) return;
    ++m.data()[i];
  }
}

// Size of the orbit of m under row perms x column perms x color perms
// (x transpose), counted by applying every group element.
inline std::size_t orbitSize(const ColorMatrix& m, int k) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> rows(n), cols(n), colors(k);
  std::iota(colors.begin(), colors.end(), 1);
  std::set<std::vector<Color>> images;
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      std::vector<int> relabel = colors;
      do {
        for (int t = 0; t < 2; ++t) {
          std::vector<Color> img(n * n);
          for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
              const Color c = t ? m(cols[v], rows[u]) : m(rows[u], cols[v]);
              img[u * n + v] = static_cast<Color>(relabel[c - 1]);
            }
          }
          images.insert(std::move(img));
        }
      } while (std::next_permutation(relabel.begin(), relabel.end()));
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return images.size();
}

}  // namespace oracle
