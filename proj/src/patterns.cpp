#include "bgr/patterns.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>

namespace bgr {

std::string toString(RainbowPattern p) {
  switch (p) {
    case RainbowPattern::P4: return "P4";
    case RainbowPattern::P5: return "P5";
    case RainbowPattern::K13: return "K13";
  }
  return "?";
}

RainbowPattern parseRainbowPattern(const std::string& s) {
  if (s == "P4") return RainbowPattern::P4;
  if (s == "P5") return RainbowPattern::P5;
  if (s == "K13" || s == "K1,3") return RainbowPattern::K13;
  throw InputError("unknown rainbow pattern '" + s + "' (expected P4, P5 or K13)");
}

TargetGraph asTarget(RainbowPattern p) {
  switch (p) {
    case RainbowPattern::P4: return TargetGraph({PathV{4}});
    case RainbowPattern::P5: return TargetGraph({PathV{5}});
    case RainbowPattern::K13: return TargetGraph({Star{3}});
  }
  return {};
}

// ---------------------------------------------------------------------------
// certificates

bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert,
                       const PatternGraph& pattern) {
  if (static_cast<int>(cert.vertexMap.size()) != pattern.vertexCount) return false;
  if (cert.edges.size() != pattern.edges.size()) return false;
  std::vector<char> usedU(g.rows(), 0), usedV(g.cols(), 0);
  for (const Vertex& x : cert.vertexMap) {
    if (x.index < 0 || x.index >= g.sideSize(x.side)) return false;
    char& slot = x.side == Side::U ? usedU[x.index] : usedV[x.index];
    if (slot) return false;
    slot = 1;
  }
  std::array<bool, kMaxColors + 1> seen{};
  for (std::size_t i = 0; i < pattern.edges.size(); ++i) {
    const Vertex a = cert.vertexMap[pattern.edges[i].first];
    const Vertex b = cert.vertexMap[pattern.edges[i].second];
    if (a.side == b.side) return false;
    const int u = a.side == Side::U ? a.index : b.index;
    const int v = a.side == Side::U ? b.index : a.index;
    if (cert.edges[i] != std::pair{u, v}) return false;
    const Color c = g(u, v);
    if (cert.kind == CertificateKind::Rainbow) {
      if (seen[c]) return false;
      seen[c] = true;
    } else if (c != cert.color) {
      return false;
    }
  }
  return true;
}

bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert, RainbowPattern p) {
  return cert.kind == CertificateKind::Rainbow &&
         verifyCertificate(g, cert, patternGraph(asTarget(p)));
}

bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert,
                       const TargetGraph& h) {
  return cert.kind == CertificateKind::Monochromatic &&
         verifyCertificate(g, cert, patternGraph(h));
}

namespace {

Certificate makeCertificate(CertificateKind kind, Color color, std::vector<Vertex> map,
                            const PatternGraph& pattern) {
  Certificate cert;
  cert.kind = kind;
  cert.color = color;
  for (auto [a, b] : pattern.edges) {
    const Vertex x = map[a], y = map[b];
    cert.edges.emplace_back(x.side == Side::U ? x.index : y.index,
                            x.side == Side::U ? y.index : x.index);
  }
  cert.vertexMap = std::move(map);
  return cert;
}

Vertex flip(Vertex x) { return {opposite(x.side), x.index}; }

// ---------------------------------------------------------------------------
// rainbow detection on (partial) matrices

// Middle edge (u, v) of the path u' - v - u - v'.
std::optional<std::vector<Vertex>> rainbowP4(const ColorMatrix& m) {
  const int a = static_cast<int>(m.rows()), b = static_cast<int>(m.cols());
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) {
      const Color x = m(u, v);
      if (!x) continue;
      // up to two differently coloured representatives on each end
      int ends[2][2] = {{-1, -1}, {-1, -1}};
      for (int w = 0; w < a; ++w) {
        const Color c = m(w, v);
        if (w == u || !c || c == x) continue;
        if (ends[0][0] < 0) ends[0][0] = w;
        else if (ends[0][1] < 0 && m(ends[0][0], v) != c) ends[0][1] = w;
      }
      if (ends[0][0] < 0) continue;
      for (int w = 0; w < b; ++w) {
        const Color c = m(u, w);
        if (w == v || !c || c == x) continue;
        if (ends[1][0] < 0) ends[1][0] = w;
        else if (ends[1][1] < 0 && m(u, ends[1][0]) != c) ends[1][1] = w;
      }
      if (ends[1][0] < 0) continue;
      for (int i : ends[0]) {
        if (i < 0) continue;
        for (int j : ends[1]) {
          if (j < 0) continue;
          if (m(i, v) != m(u, j)) {
            return std::vector<Vertex>{{Side::U, i}, {Side::V, v}, {Side::U, u}, {Side::V, j}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

// Paths u1 - v1 - u2 - v2 - u3 centred in U.
std::optional<std::vector<Vertex>> rainbowP5CentredU(const ColorMatrix& m) {
  const int a = static_cast<int>(m.rows()), b = static_cast<int>(m.cols());
  std::vector<int> left;
  std::vector<int> reps;
  for (int u2 = 0; u2 < a; ++u2) {
    for (int v1 = 0; v1 < b; ++v1) {
      const Color c2 = m(u2, v1);
      if (!c2) continue;
      for (int v2 = 0; v2 < b; ++v2) {
        const Color c3 = m(u2, v2);
        if (v2 == v1 || !c3 || c3 == c2) continue;
        auto ok = [&](Color c) { return c && c != c2 && c != c3; };
        left.clear();
        for (int u = 0; u < a; ++u) {
          if (u != u2 && ok(m(u, v1))) left.push_back(u);
        }
        if (left.empty()) continue;
        // Representatives of the right end: enough to survive excluding one
        // row and one colour.
        reps.clear();
        std::array<int, kMaxColors + 1> perColour{};
        int distinct = 0;
        for (int u = 0; u < a && reps.size() < 4; ++u) {
          const Color c = m(u, v2);
          if (u == u2 || !ok(c)) continue;
          if (perColour[c] == 0) {
            if (distinct == 3) continue;
            ++distinct;
          } else if (perColour[c] >= 2) {
            continue;
          }
          ++perColour[c];
          reps.push_back(u);
        }
        for (int u1 : left) {
          for (int u3 : reps) {
            if (u3 != u1 && m(u3, v2) != m(u1, v1)) {
              return std::vector<Vertex>{{Side::U, u1}, {Side::V, v1}, {Side::U, u2},
                                         {Side::V, v2}, {Side::U, u3}};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> rainbowP5(const ColorMatrix& m) {
  if (auto path = rainbowP5CentredU(m)) return path;
  const ColorMatrix t = m.transpose();
  if (auto path = rainbowP5CentredU(t)) {
    for (Vertex& x : *path) x = flip(x);
    return path;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> rainbowStarAt(const ColorMatrix& m, Vertex centre) {
  const int other = static_cast<int>(centre.side == Side::U ? m.cols() : m.rows());
  std::vector<Vertex> star{centre};
  std::array<bool, kMaxColors + 1> seen{};
  for (int w = 0; w < other && star.size() < 4; ++w) {
    const Color c = centre.side == Side::U ? m(centre.index, w) : m(w, centre.index);
    if (!c || seen[c]) continue;
    seen[c] = true;
    star.push_back({opposite(centre.side), w});
  }
  if (star.size() < 4) return std::nullopt;
  return star;
}

std::optional<std::vector<Vertex>> rainbowK13(const ColorMatrix& m) {
  for (Side s : {Side::U, Side::V}) {
    const int n = static_cast<int>(s == Side::U ? m.rows() : m.cols());
    for (int i = 0; i < n; ++i) {
      if (auto star = rainbowStarAt(m, {s, i})) return star;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> rainbowMap(const ColorMatrix& m, RainbowPattern p) {
  switch (p) {
    case RainbowPattern::P4: return rainbowP4(m);
    case RainbowPattern::P5: return rainbowP5(m);
    case RainbowPattern::K13: return rainbowK13(m);
  }
  return std::nullopt;
}

// Rainbow path with `length` edges through the edge (row, col): extend from
// the U end by i edges and from the V end by the remainder.
class PathThrough {
 public:
  PathThrough(const ColorMatrix& m, int length)
      : m_(m), length_(length), usedU_(m.rows(), 0), usedV_(m.cols(), 0) {}

  bool through(int row, int col) {
    const Color c = m_(row, col);
    if (!c) return false;
    usedU_[row] = usedV_[col] = 1;
    usedColour_[c] = true;
    bool found = false;
    for (int i = 0; i < length_ && !found; ++i) {
      found = extend({Side::U, row}, i, [&] {
        return extend({Side::V, col}, length_ - 1 - i, [] { return true; });
      });
    }
    usedU_[row] = usedV_[col] = 0;
    usedColour_[c] = false;
    return found;
  }

 private:
  bool extend(Vertex end, int remaining, const std::function<bool()>& next) {
    if (remaining == 0) return next();
    const bool fromU = end.side == Side::U;
    const int n = static_cast<int>(fromU ? m_.cols() : m_.rows());
    auto& used = fromU ? usedV_ : usedU_;
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      const Color c = fromU ? m_(end.index, w) : m_(w, end.index);
      if (!c || usedColour_[c]) continue;
      used[w] = 1;
      usedColour_[c] = true;
      const bool ok = extend({opposite(end.side), w}, remaining - 1, next);
      used[w] = 0;
      usedColour_[c] = false;
      if (ok) return true;
    }
    return false;
  }

  const ColorMatrix& m_;
  int length_;
  std::vector<char> usedU_, usedV_;
  std::array<bool, kMaxColors + 1> usedColour_{};
};

int distinctNonzero(const auto& line, int limit) {
  std::array<bool, kMaxColors + 1> seen{};
  int count = 0;
  for (Eigen::Index i = 0; i < line.size() && count < limit; ++i) {
    const Color c = line(i);
    if (c && !seen[c]) {
      seen[c] = true;
      ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------
// embedding

class Embedder {
 public:
  Embedder(const TargetGraph& h, const BipartiteHost& host)
      : pattern_(patternGraph(h)), adj_(host.adjacency) {
    nA_ = static_cast<int>(adj_.rows());
    nB_ = static_cast<int>(adj_.cols());
    degA_.resize(nA_);
    degB_.resize(nB_);
    for (int i = 0; i < nA_; ++i) degA_[i] = static_cast<int>(adj_.row(i).count());
    for (int j = 0; j < nB_; ++j) degB_[j] = static_cast<int>(adj_.col(j).count());
    twinA_ = twinClasses(adj_);
    RowMajorMatrix<bool> t = adj_.transpose();
    twinB_ = twinClasses(t);
    usedA_.assign(nA_, 0);
    usedB_.assign(nB_, 0);
    plan(h);
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.vertexCount > nA_ + nB_) return std::nullopt;
    image_.assign(pattern_.vertexCount, -1);
    if (!dfs(0)) return std::nullopt;
    std::vector<Vertex> map(pattern_.vertexCount);
    for (int p = 0; p < pattern_.vertexCount; ++p) map[p] = {sideOf(p), image_[p]};
    return map;
  }

 private:
  static std::vector<int> twinClasses(const RowMajorMatrix<bool>& m) {
    std::map<std::vector<bool>, int> ids;
    std::vector<int> out(m.rows());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      std::vector<bool> key(m.cols());
      for (Eigen::Index j = 0; j < m.cols(); ++j) key[j] = m(i, j);
      out[i] = ids.emplace(std::move(key), static_cast<int>(ids.size())).first->second;
    }
    return out;
  }

  // Components largest first; paths end-to-end, stars centre first, bicliques
  // one small-side vertex, then the large side, then the rest.
  void plan(const TargetGraph& h) {
    const auto& comps = h.components();
    std::vector<int> byComp(comps.size());
    std::iota(byComp.begin(), byComp.end(), 0);
    std::stable_sort(byComp.begin(), byComp.end(), [&](int x, int y) {
      return vertexCount(comps[x]) > vertexCount(comps[y]);
    });
    std::vector<int> start(comps.size() + 1, 0);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      start[c + 1] = start[c] + vertexCount(comps[c]);
    }
    orient_.assign(comps.size(), 0);
    for (int c : byComp) {
      const Component& comp = comps[c];
      std::vector<int> local;
      if (const auto* b = std::get_if<Biclique>(&comp)) {
        local.push_back(0);
        for (int j = 0; j < b->t; ++j) local.push_back(b->s + j);
        for (int i = 1; i < b->s; ++i) local.push_back(i);
      } else {
        for (int i = 0; i < vertexCount(comp); ++i) local.push_back(i);
      }
      const Footprint f = footprint(comp);
      bool symmetric = f.x == f.y;
      if (const auto* p = std::get_if<PathV>(&comp)) symmetric = p->vertices % 2 == 0;
      for (std::size_t i = 0; i < local.size(); ++i) {
        order_.push_back(start[c] + local[i]);
        firstOfComponent_.push_back(i == 0);
        symmetricComponent_.push_back(symmetric);
      }
      compOrder_.push_back(c);
    }
    // capacity suffix sums, indexed by position in order_
    const int n = pattern_.vertexCount;
    remTotal_.assign(n + 1, 0);
    remMinSide_.assign(n + 1, 0);
    for (int pos = n - 1; pos >= 0; --pos) {
      remTotal_[pos] = remTotal_[pos + 1] + 1;
      remMinSide_[pos] = remMinSide_[pos + 1];
      if (firstOfComponent_[pos]) {
        const Footprint f = footprint(comps[pattern_.component[order_[pos]]]);
        remMinSide_[pos] += std::min(f.x, f.y);
      }
    }
    std::vector<int> position(n);
    for (int pos = 0; pos < n; ++pos) position[order_[pos]] = pos;
    earlier_.assign(n, {});
    for (int p = 0; p < n; ++p) {
      for (int q : pattern_.neighbours[p]) {
        if (position[q] < position[p]) earlier_[p].push_back(q);
      }
    }
    tried_.assign(n, {});
  }

  Side sideOf(int p) const {
    return (pattern_.parity[p] ^ orient_[pattern_.component[p]]) == 0 ? Side::U : Side::V;
  }

  bool adjacent(Side side, int x, int other) const {
    return side == Side::U ? adj_(x, other) : adj_(other, x);
  }

  bool capacityOk(int pos) const {
    int freeA = 0, freeB = 0;
    for (int i = 0; i < nA_; ++i) freeA += !usedA_[i] && degA_[i] > 0;
    for (int j = 0; j < nB_; ++j) freeB += !usedB_[j] && degB_[j] > 0;
    return remTotal_[pos] <= freeA + freeB && remMinSide_[pos] <= std::min(freeA, freeB);
  }

  bool dfs(int pos) {
    if (pos == pattern_.vertexCount) return true;
    const int p = order_[pos];
    if (firstOfComponent_[pos]) {
      if (!capacityOk(pos)) return false;
      const int comp = pattern_.component[p];
      for (int o = 0; o < (symmetricComponent_[pos] ? 1 : 2); ++o) {
        orient_[comp] = o;
        if (place(pos, p)) return true;
      }
      orient_[comp] = 0;
      return false;
    }
    return place(pos, p);
  }

  bool place(int pos, int p) {
    const Side side = sideOf(p);
    const int n = side == Side::U ? nA_ : nB_;
    auto& used = side == Side::U ? usedA_ : usedB_;
    const auto& deg = side == Side::U ? degA_ : degB_;
    const auto& twin = side == Side::U ? twinA_ : twinB_;
    const int need = static_cast<int>(pattern_.neighbours[p].size());
    auto& tried = tried_[pos];
    tried.clear();
    for (int x = 0; x < n; ++x) {
      if (used[x] || deg[x] < need) continue;
      bool ok = true;
      for (int q : earlier_[p]) {
        if (!adjacent(side, x, image_[q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (std::find(tried.begin(), tried.end(), twin[x]) != tried.end()) continue;
      tried.push_back(twin[x]);
      used[x] = 1;
      image_[p] = x;
      if (dfs(pos + 1)) return true;
      used[x] = 0;
      image_[p] = -1;
    }
    return false;
  }

  PatternGraph pattern_;
  const RowMajorMatrix<bool>& adj_;
  int nA_ = 0, nB_ = 0;
  std::vector<int> degA_, degB_, twinA_, twinB_;
  std::vector<char> usedA_, usedB_;
  std::vector<int> order_, compOrder_, orient_, image_;
  std::vector<char> firstOfComponent_, symmetricComponent_;
  std::vector<int> remTotal_, remMinSide_;
  std::vector<std::vector<int>> earlier_, tried_;
};

}  // namespace

BipartiteHost completeBipartite(int a, int b) {
  return {RowMajorMatrix<bool>::Constant(a, b, true)};
}

BipartiteHost colorClass(const ColorMatrix& m, Color c) {
  return {(m.array() == c).matrix()};
}

std::optional<std::vector<Vertex>> embed(const TargetGraph& h, const BipartiteHost& host) {
  if (h.empty()) return std::vector<Vertex>{};
  return Embedder(h, host).run();
}

std::optional<Certificate> findRainbow(const ColoredBigraph& g, RainbowPattern p) {
  auto map = rainbowMap(g.matrix(), p);
  if (!map) return std::nullopt;
  return makeCertificate(CertificateKind::Rainbow, 0, std::move(*map),
                         patternGraph(asTarget(p)));
}

std::optional<Certificate> findMonochromatic(const ColoredBigraph& g, const TargetGraph& h) {
  const PatternGraph pattern = patternGraph(h);
  for (int c = 1; c <= g.k(); ++c) {
    const BipartiteHost host = colorClass(g.matrix(), static_cast<Color>(c));
    if (static_cast<std::size_t>(host.adjacency.count()) < pattern.edges.size()) continue;
    if (auto map = embed(h, host)) {
      return makeCertificate(CertificateKind::Monochromatic, static_cast<Color>(c),
                             std::move(*map), pattern);
    }
  }
  return std::nullopt;
}

bool bicliqueContains(int a, int b, const TargetGraph& h) {
  if (a < 0 || b < 0) return false;
  const int total = h.vertexCount();
  // reachable[x]: some orientation puts exactly x vertices on the a-side
  std::vector<char> reachable(total + 1, 0);
  reachable[0] = 1;
  for (const Component& c : h.components()) {
    const Footprint f = footprint(c);
    std::vector<char> next(total + 1, 0);
    for (int x = 0; x <= total; ++x) {
      if (!reachable[x]) continue;
      if (x + f.x <= total) next[x + f.x] = 1;
      if (x + f.y <= total) next[x + f.y] = 1;
    }
    reachable.swap(next);
  }
  for (int x = std::max(0, total - b); x <= std::min(a, total); ++x) {
    if (reachable[x]) return true;
  }
  return false;
}

bool hasRainbow(const ColorMatrix& m, RainbowPattern p) {
  return rainbowMap(m, p).has_value();
}

bool hasRainbowThrough(const ColorMatrix& m, RainbowPattern p, int row, int col) {
  switch (p) {
    case RainbowPattern::K13:
      return distinctNonzero(m.row(row), 3) >= 3 || distinctNonzero(m.col(col), 3) >= 3;
    case RainbowPattern::P4: return PathThrough(m, 3).through(row, col);
    case RainbowPattern::P5: return PathThrough(m, 4).through(row, col);
  }
  return false;
}

bool hasMonochromatic(const ColorMatrix& m, const TargetGraph& h) {
  const Color top = m.size() ? m.maxCoeff() : 0;
  for (int c = 1; c <= top; ++c) {
    if (embed(h, colorClass(m, static_cast<Color>(c)))) return true;
  }
  return false;
}

bool hasMonochromaticThrough(const ColorMatrix& m, const TargetGraph& h, int row, int col) {
  const Color c = m(row, col);
  if (!c) return false;
  return embed(h, colorClass(m, c)).has_value();
}

}  // namespace bgr
