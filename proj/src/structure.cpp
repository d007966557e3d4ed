#include "bgr/structure.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <map>
#include <numeric>

#include "bgr/canonical.hpp"
#include "bgr/constructions.hpp"

namespace bgr {

namespace {

using ColorSet = std::bitset<kMaxColors + 1>;

ColorSet rowPalette(const ColorMatrix& m, int r) {
  ColorSet s;
  for (Eigen::Index j = 0; j < m.cols(); ++j) s.set(m(r, j));
  return s;
}

ColorSet colPalette(const ColorMatrix& m, int c) {
  ColorSet s;
  for (Eigen::Index i = 0; i < m.rows(); ++i) s.set(m(i, c));
  return s;
}

ColorSet setOf(std::initializer_list<Color> cs) {
  ColorSet s;
  for (Color c : cs) s.set(c);
  return s;
}

std::vector<Color> sortedUsed(const ColorMatrix& m) {
  ColorSet s;
  for (Eigen::Index i = 0; i < m.size(); ++i) s.set(m.data()[i]);
  std::vector<Color> out;
  for (int c = 1; c <= kMaxColors; ++c) {
    if (s.test(c)) out.push_back(static_cast<Color>(c));
  }
  return out;
}

void requireInput(const ColoredBigraph& g, Theorem t) {
  if (!g.square()) throw InputError("structure theorems apply to K_{n,n} only");
  if (g.rows() < minimumOrder(t)) {
    throw InputError(toString(t) + " requires n >= " + std::to_string(minimumOrder(t)));
  }
  if (!isExact(g)) throw InputError("coloring is not exact: some of the k colors are unused");
}

StructureWitness caseA(Theorem t, const ColorMatrix& m) {
  StructureWitness w;
  w.theorem = t;
  w.caseLabel = 'a';
  w.colorAssignment = sortedUsed(m);
  return w;
}

// ----- T13(b): every row monochromatic --------------------------------------

std::optional<StructureWitness> tryRowBlocks(const ColorMatrix& m, bool swapped) {
  const std::vector<Color> used = sortedUsed(m);
  std::map<Color, int> part;
  for (std::size_t i = 0; i < used.size(); ++i) part[used[i]] = static_cast<int>(i);
  StructureWitness w;
  w.theorem = Theorem::T13;
  w.caseLabel = 'b';
  w.swapped = swapped;
  w.uPartition.assign(used.size(), {});
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if ((m.row(r).array() != m(r, 0)).any()) return std::nullopt;
    w.uPartition[part[m(r, 0)]].push_back(static_cast<int>(r));
  }
  w.colorAssignment = used;
  return w;
}

// ----- T14(b): rows of U1 share one pattern, rows of U2 are base-colored ----

std::optional<StructureWitness> tryT14b(const ColorMatrix& m, bool swapped) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> rowClass(n, -1);
  std::vector<int> reps;
  for (int r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (m.row(r) == m.row(reps[c])) {
        rowClass[r] = static_cast<int>(c);
        break;
      }
    }
    if (rowClass[r] < 0) {
      if (reps.size() == 2) return std::nullopt;
      rowClass[r] = static_cast<int>(reps.size());
      reps.push_back(r);
    }
  }
  auto constant = [&](int r) { return (m.row(r).array() == m(r, 0)).all(); };
  auto build = [&](int patternClass, std::optional<Color> base) -> StructureWitness {
    const int f = reps[patternClass];
    const Color b = base ? *base : m.row(f).minCoeff();
    std::vector<Color> sigma{b};
    for (Color c : sortedUsed(m.row(f))) {
      if (c != b) sigma.push_back(c);
    }
    StructureWitness w;
    w.theorem = Theorem::T14;
    w.caseLabel = 'b';
    w.swapped = swapped;
    w.uPartition.assign(2, {});
    for (int r = 0; r < n; ++r) w.uPartition[rowClass[r] == patternClass ? 0 : 1].push_back(r);
    w.vPartition = Partition(sigma.size());
    for (int v = 0; v < m.cols(); ++v) {
      const auto it = std::find(sigma.begin(), sigma.end(), m(f, v));
      (*w.vPartition)[it - sigma.begin()].push_back(v);
    }
    w.baseColor = b;
    w.colorAssignment = sigma;
    return w;
  };
  if (reps.size() == 1) return build(0, std::nullopt);
  for (int c = 0; c < 2; ++c) {
    if (constant(reps[c])) return build(1 - c, m(reps[c], 0));
  }
  return std::nullopt;
}

// ----- T14(c) / T21(b): non-base colors confined to disjoint blocks --------

std::optional<StructureWitness> tryDiagonalBlocks(const ColorMatrix& m, Theorem t, char label) {
  const std::vector<Color> used = sortedUsed(m);
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  for (Color base : used) {
    std::vector<Color> sigma{base};
    for (Color c : used) {
      if (c != base) sigma.push_back(c);
    }
    std::vector<int> index(kMaxColors + 1, 0);
    for (std::size_t i = 0; i < sigma.size(); ++i) index[sigma[i]] = static_cast<int>(i);
    std::vector<int> rowPart(rows, 0), colPart(cols, 0);
    bool ok = true;
    for (int u = 0; u < rows && ok; ++u) {
      for (int v = 0; v < cols && ok; ++v) {
        const int p = index[m(u, v)];
        if (p == 0) continue;
        if ((rowPart[u] && rowPart[u] != p) || (colPart[v] && colPart[v] != p)) ok = false;
        rowPart[u] = colPart[v] = p;
      }
    }
    if (!ok) continue;
    StructureWitness w;
    w.theorem = t;
    w.caseLabel = label;
    w.uPartition.assign(sigma.size(), {});
    w.vPartition = Partition(sigma.size());
    for (int u = 0; u < rows; ++u) w.uPartition[rowPart[u]].push_back(u);
    for (int v = 0; v < cols; ++v) (*w.vPartition)[colPart[v]].push_back(v);
    w.baseColor = base;
    w.colorAssignment = sigma;
    return w;
  }
  return std::nullopt;
}

// ----- T14(d)/(e): explicit isomorphism onto a stored sporadic coloring ----

std::optional<StructureWitness> matchSporadic(const ColoredBigraph& g, SporadicCase which,
                                              char label) {
  const ColoredBigraph target = sporadicP5(which);
  if (g.rows() != target.rows() || usedColors(g).size() != 4) return std::nullopt;
  if (canonicalForm(g) != canonicalForm(target)) return std::nullopt;
  const int n = g.rows();
  for (bool swapped : {false, true}) {
    const ColorMatrix m = swapped ? ColorMatrix(g.matrix().transpose()) : g.matrix();
    std::vector<int> rows(n), cols(n);
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::iota(cols.begin(), cols.end(), 0);
      do {
        std::array<Color, 5> sigma{};
        std::array<bool, kMaxColors + 1> taken{};
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
          for (int j = 0; j < n && ok; ++j) {
            const Color want = target(i, j);
            const Color have = m(rows[i], cols[j]);
            if (!sigma[want]) {
              if (taken[have]) ok = false;
              sigma[want] = have;
              taken[have] = true;
            } else if (sigma[want] != have) {
              ok = false;
            }
          }
        }
        if (!ok) continue;
        StructureWitness w;
        w.theorem = Theorem::T14;
        w.caseLabel = label;
        w.swapped = swapped;
        w.vPartition = Partition{};
        for (int i = 0; i < n; ++i) {
          w.uPartition.push_back({rows[i]});
          w.vPartition->push_back({cols[i]});
        }
        w.colorAssignment.assign(sigma.begin() + 1, sigma.end());
        return w;
      } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
  }
  return std::nullopt;
}

// ----- T21(c)/(d): parts defined by palette pairs ---------------------------

using PairList = std::vector<std::array<int, 2>>;  // case colors, 1-based

std::optional<std::vector<int>> assignByPairs(const std::vector<ColorSet>& palettes,
                                              const PairList& pairs,
                                              const std::vector<Color>& sigma) {
  std::vector<int> part(palettes.size());
  for (std::size_t x = 0; x < palettes.size(); ++x) {
    int found = -1;
    for (std::size_t p = 0; p < pairs.size() && found < 0; ++p) {
      const ColorSet allowed = setOf({sigma[pairs[p][0] - 1], sigma[pairs[p][1] - 1]});
      if ((palettes[x] & ~allowed).none()) found = static_cast<int>(p);
    }
    if (found < 0) return std::nullopt;
    part[x] = found;
  }
  return part;
}

const PairList kT21cPairs{{1, 2}, {1, 3}, {2, 3}};
const PairList kT21dUPairs{{1, 2}, {2, 3}, {1, 4}};
const PairList kT21dVPairs{{1, 2}, {1, 3}, {2, 4}};

std::optional<StructureWitness> tryPalettePairs(const ColorMatrix& m, const std::vector<Color>& sigma,
                                                const PairList& uPairs, const PairList& vPairs,
                                                char label, bool swapped) {
  const int n = static_cast<int>(m.rows());
  std::vector<ColorSet> rowsP(n), colsP(m.cols());
  for (int i = 0; i < n; ++i) rowsP[i] = rowPalette(m, i);
  for (int j = 0; j < m.cols(); ++j) colsP[j] = colPalette(m, j);
  const auto up = assignByPairs(rowsP, uPairs, sigma);
  if (!up) return std::nullopt;
  const auto vp = assignByPairs(colsP, vPairs, sigma);
  if (!vp) return std::nullopt;
  StructureWitness w;
  w.theorem = Theorem::T21;
  w.caseLabel = label;
  w.swapped = swapped;
  w.uPartition.assign(uPairs.size(), {});
  w.vPartition = Partition(vPairs.size());
  for (int i = 0; i < n; ++i) w.uPartition[(*up)[i]].push_back(i);
  for (int j = 0; j < m.cols(); ++j) (*w.vPartition)[(*vp)[j]].push_back(j);
  w.colorAssignment = sigma;
  return w;
}

// ----- T21(e): two row types, four column types -----------------------------

std::optional<StructureWitness> tryT21e(const ColorMatrix& m, const std::vector<Color>& s,
                                        bool swapped) {
  const ColorSet first = setOf({s[0], s[3]}), second = setOf({s[1], s[2]});
  StructureWitness w;
  w.theorem = Theorem::T21;
  w.caseLabel = 'e';
  w.swapped = swapped;
  w.uPartition.assign(2, {});
  for (int r = 0; r < m.rows(); ++r) {
    const ColorSet p = rowPalette(m, r);
    if ((p & ~first).none()) w.uPartition[0].push_back(r);
    else if ((p & ~second).none()) w.uPartition[1].push_back(r);
    else return std::nullopt;
  }
  w.vPartition = Partition(4);
  for (int v = 0; v < m.cols(); ++v) {
    Color a = s[0], b = s[1];
    if (!w.uPartition[0].empty()) a = m(w.uPartition[0].front(), v);
    if (!w.uPartition[1].empty()) b = m(w.uPartition[1].front(), v);
    const int part = (a == s[0] ? 0 : 2) + (b == s[1] ? 0 : 1);
    (*w.vPartition)[part].push_back(v);
  }
  w.colorAssignment = s;
  return w;
}

// ----- verification helpers -------------------------------------------------

void checkPartition(const Partition& parts, std::size_t count, int sideSize,
                    const char* what) {
  if (parts.size() != count) {
    throw InputError(std::string(what) + " must have " + std::to_string(count) + " parts, got " +
                     std::to_string(parts.size()));
  }
  std::vector<char> seen(sideSize, 0);
  for (const auto& part : parts) {
    for (int x : part) {
      if (x < 0 || x >= sideSize) throw InputError(std::string(what) + " index out of range");
      if (seen[x]) throw InputError(std::string(what) + " parts are not disjoint");
      seen[x] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw InputError(std::string(what) + " does not cover its side");
  }
}

std::vector<int> partIndex(const Partition& parts, int sideSize) {
  std::vector<int> out(sideSize, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int x : parts[p]) out[x] = static_cast<int>(p);
  }
  return out;
}

bool nonemptyFrom(const Partition& parts, std::size_t first) {
  for (std::size_t p = first; p < parts.size(); ++p) {
    if (parts[p].empty()) return false;
  }
  return true;
}

ColorSet unionPalette(const ColorMatrix& m, const std::vector<int>& part, bool rows) {
  ColorSet s;
  for (int x : part) s |= rows ? rowPalette(m, x) : colPalette(m, x);
  return s;
}

}  // namespace

std::string toString(Theorem t) {
  switch (t) {
    case Theorem::T13: return "T13";
    case Theorem::T14: return "T14";
    case Theorem::T21: return "T21";
  }
  return "?";
}

Theorem parseTheorem(const std::string& s) {
  if (s == "T13") return Theorem::T13;
  if (s == "T14") return Theorem::T14;
  if (s == "T21") return Theorem::T21;
  throw InputError("unknown structure theorem '" + s + "' (expected T13, T14 or T21)");
}

RainbowPattern forbiddenPattern(Theorem t) {
  switch (t) {
    case Theorem::T13: return RainbowPattern::P4;
    case Theorem::T14: return RainbowPattern::P5;
    case Theorem::T21: return RainbowPattern::K13;
  }
  return RainbowPattern::P4;
}

int minimumOrder(Theorem t) { return t == Theorem::T13 ? 2 : 3; }

char label(const Classification& c) {
  if (std::holds_alternative<NotApplicable>(c)) return 'N';
  if (std::holds_alternative<Unclassified>(c)) return 'U';
  return std::get<StructureWitness>(c).caseLabel;
}

Classification classifyP4Free(const ColoredBigraph& g) {
  requireInput(g, Theorem::T13);
  if (auto cert = findRainbow(g, RainbowPattern::P4)) return NotApplicable{*cert};
  if (usedColors(g).size() <= 2) return caseA(Theorem::T13, g.matrix());
  if (auto w = tryRowBlocks(g.matrix(), false)) return *w;
  if (auto w = tryRowBlocks(g.matrix().transpose(), true)) return *w;
  return Unclassified{};
}

Classification classifyP5Free(const ColoredBigraph& g) {
  requireInput(g, Theorem::T14);
  if (auto cert = findRainbow(g, RainbowPattern::P5)) return NotApplicable{*cert};
  if (usedColors(g).size() <= 3) return caseA(Theorem::T14, g.matrix());
  if (auto w = tryT14b(g.matrix(), false)) return *w;
  if (auto w = tryT14b(g.matrix().transpose(), true)) return *w;
  if (auto w = tryDiagonalBlocks(g.matrix(), Theorem::T14, 'c')) return *w;
  if (auto w = matchSporadic(g, SporadicCase::N3, 'd')) return *w;
  if (auto w = matchSporadic(g, SporadicCase::N4, 'e')) return *w;
  return Unclassified{};
}

Classification classifyK13Free(const ColoredBigraph& g) {
  requireInput(g, Theorem::T21);
  if (auto cert = findRainbow(g, RainbowPattern::K13)) return NotApplicable{*cert};
  const std::vector<Color> used = sortedUsed(g.matrix());
  if (used.size() <= 2) return caseA(Theorem::T21, g.matrix());
  if (auto w = tryDiagonalBlocks(g.matrix(), Theorem::T21, 'b')) return *w;
  if (used.size() == 3) {
    if (auto w = tryPalettePairs(g.matrix(), used, kT21cPairs, kT21cPairs, 'c', false)) return *w;
  }
  if (used.size() != 4) return Unclassified{};
  for (char label : {'d', 'e'}) {
    for (bool swapped : {false, true}) {
      const ColorMatrix m = swapped ? ColorMatrix(g.matrix().transpose()) : g.matrix();
      std::vector<Color> sigma = used;
      do {
        auto w = label == 'd' ? tryPalettePairs(m, sigma, kT21dUPairs, kT21dVPairs, 'd', swapped)
                              : tryT21e(m, sigma, swapped);
        if (w && verifyWitness(g, *w)) return *w;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  }
  return Unclassified{};
}

Classification classify(Theorem t, const ColoredBigraph& g) {
  switch (t) {
    case Theorem::T13: return classifyP4Free(g);
    case Theorem::T14: return classifyP5Free(g);
    case Theorem::T21: return classifyK13Free(g);
  }
  return Unclassified{};
}

bool verifyWitness(const ColoredBigraph& g, const StructureWitness& w) {
  if (!g.square()) throw InputError("witnesses are stated for K_{n,n}");
  const ColorMatrix m = w.swapped ? ColorMatrix(g.matrix().transpose()) : g.matrix();
  const int n = static_cast<int>(m.rows());
  const std::vector<Color>& sigma = w.colorAssignment;
  {
    std::array<bool, kMaxColors + 1> seen{};
    for (Color c : sigma) {
      if (c < 1 || c > g.k()) throw InputError("color assignment out of range");
      if (seen[c]) throw InputError("color assignment is not injective");
      seen[c] = true;
    }
  }
  const std::vector<Color> used = sortedUsed(m);
  std::vector<Color> sortedSigma = sigma;
  std::sort(sortedSigma.begin(), sortedSigma.end());
  const bool sameColors = sortedSigma == used;
  const std::size_t k = sigma.size();
  if (w.baseColor && (k == 0 || *w.baseColor != sigma[0])) return false;
  auto needV = [&]() -> const Partition& {
    if (!w.vPartition) throw InputError("case requires a V partition");
    return *w.vPartition;
  };

  const char c = w.caseLabel;
  if (c == 'a') {
    const std::size_t limit = w.theorem == Theorem::T14 ? 3 : 2;
    if (k > limit) throw InputError("case (a) allows at most " + std::to_string(limit) + " colors");
    return sameColors;
  }
  if (!sameColors) return false;

  switch (w.theorem) {
    case Theorem::T13: {
      if (c != 'b') throw InputError("T13 has cases a and b");
      checkPartition(w.uPartition, k, n, "uPartition");
      if (!nonemptyFrom(w.uPartition, 0)) return false;
      for (std::size_t i = 0; i < k; ++i) {
        for (int u : w.uPartition[i]) {
          if ((m.row(u).array() != sigma[i]).any()) return false;
        }
      }
      return true;
    }
    case Theorem::T14: {
      if (c == 'b') {
        checkPartition(w.uPartition, 2, n, "uPartition");
        checkPartition(needV(), k, n, "vPartition");
        if (w.uPartition[0].empty() || !nonemptyFrom(*w.vPartition, 1)) return false;
        const std::vector<int> vp = partIndex(*w.vPartition, n);
        for (int u : w.uPartition[0]) {
          for (int v = 0; v < n; ++v) {
            if (m(u, v) != sigma[vp[v]]) return false;
          }
        }
        for (int u : w.uPartition[1]) {
          if ((m.row(u).array() != sigma[0]).any()) return false;
        }
        return true;
      }
      if (c == 'd' || c == 'e') {
        const int order = c == 'd' ? 3 : 4;
        if (n != order) return false;
        checkPartition(w.uPartition, order, n, "uPartition");
        checkPartition(needV(), order, n, "vPartition");
        if (k != 4) throw InputError("sporadic cases use four colors");
        const ColoredBigraph target = sporadicP5(c == 'd' ? SporadicCase::N3 : SporadicCase::N4);
        for (int i = 0; i < n; ++i) {
          if (w.uPartition[i].size() != 1 || (*w.vPartition)[i].size() != 1) {
            throw InputError("sporadic witnesses list singleton parts");
          }
        }
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            if (m(w.uPartition[i][0], (*w.vPartition)[j][0]) != sigma[target(i, j) - 1]) {
              return false;
            }
          }
        }
        return true;
      }
      if (c != 'c') throw InputError("T14 has cases a to e");
      [[fallthrough]];
    }
    case Theorem::T21: {
      if (c == 'b' || (w.theorem == Theorem::T14 && c == 'c')) {
        checkPartition(w.uPartition, k, n, "uPartition");
        checkPartition(needV(), k, n, "vPartition");
        if (!nonemptyFrom(w.uPartition, 1) || !nonemptyFrom(*w.vPartition, 1)) return false;
        const std::vector<int> up = partIndex(w.uPartition, n);
        const std::vector<int> vp = partIndex(*w.vPartition, n);
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            const Color col = m(u, v);
            if (col == sigma[0]) continue;
            if (up[u] != vp[v] || col != sigma[up[u]]) return false;
          }
        }
        return true;
      }
      if (c == 'c' || c == 'd') {
        const std::size_t colors = c == 'c' ? 3 : 4;
        if (k != colors) throw InputError("case needs " + std::to_string(colors) + " colors");
        checkPartition(w.uPartition, 3, n, "uPartition");
        checkPartition(needV(), 3, n, "vPartition");
        const PairList& uPairs = c == 'c' ? kT21cPairs : kT21dUPairs;
        const PairList& vPairs = c == 'c' ? kT21cPairs : kT21dVPairs;
        for (int side = 0; side < 2; ++side) {
          const Partition& parts = side == 0 ? w.uPartition : *w.vPartition;
          const PairList& pairs = side == 0 ? uPairs : vPairs;
          for (std::size_t p = 0; p < 3; ++p) {
            const ColorSet allowed =
                setOf({sigma[pairs[p][0] - 1], sigma[pairs[p][1] - 1]});
            if ((unionPalette(m, parts[p], side == 0) & ~allowed).any()) return false;
          }
        }
        return true;
      }
      if (c == 'e') {
        if (k != 4) throw InputError("case (e) uses four colors");
        checkPartition(w.uPartition, 2, n, "uPartition");
        checkPartition(needV(), 4, n, "vPartition");
        const std::vector<int> vp = partIndex(*w.vPartition, n);
        // row type 0 sees sigma1 on V1,V2 and sigma4 on V3,V4;
        // row type 1 sees sigma2 on V1,V3 and sigma3 on V2,V4
        for (int type = 0; type < 2; ++type) {
          for (int u : w.uPartition[type]) {
            for (int v = 0; v < n; ++v) {
              const int part = vp[v];
              const Color want = type == 0 ? (part < 2 ? sigma[0] : sigma[3])
                                           : (part % 2 == 0 ? sigma[1] : sigma[2]);
              if (m(u, v) != want) return false;
            }
          }
        }
        return true;
      }
      throw InputError("T21 has cases a to e");
    }
  }
  return false;
}

}  // namespace bgr
