#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bgr/colored_bigraph.hpp"
#include "bgr/target_graph.hpp"

namespace bgr {

/// The forbidden rainbow graphs: P4, P5 and the 3-star K_{1,3}.
enum class RainbowPattern { P4, P5, K13 };

std::string toString(RainbowPattern p);
RainbowPattern parseRainbowPattern(const std::string& s);
/// P4 -> PathV(4), P5 -> PathV(5), K13 -> Star(3).
TargetGraph asTarget(RainbowPattern p);

enum class CertificateKind { Rainbow, Monochromatic };

/// An explicit embedding. vertexMap[i] is the host vertex playing pattern
/// vertex i (numbering from patternGraph); edges lists the image edges as
/// (u, v) = (row, column) in pattern-edge order.
struct Certificate {
  CertificateKind kind = CertificateKind::Rainbow;
  Color color = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<Vertex> vertexMap;
};

/// Re-checks a certificate against its host in O(|pattern| + |edges|).
bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert,
                       const PatternGraph& pattern);
bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert,
                       RainbowPattern p);
bool verifyCertificate(const ColoredBigraph& g, const Certificate& cert,
                       const TargetGraph& h);

/// Bipartite host for embedding: adjacency(i, j) is the edge between A-vertex
/// i (side U) and B-vertex j (side V).
struct BipartiteHost {
  RowMajorMatrix<bool> adjacency;
};

BipartiteHost completeBipartite(int a, int b);
/// Edges of color c in a (possibly partial, 0 = unassigned) color matrix.
BipartiteHost colorClass(const ColorMatrix& m, Color c);

/// Backtracking embedding of H into the host. Complete: returns a vertex map
/// whenever one exists.
std::optional<std::vector<Vertex>> embed(const TargetGraph& h, const BipartiteHost& host);

std::optional<Certificate> findRainbow(const ColoredBigraph& g, RainbowPattern p);
std::optional<Certificate> findMonochromatic(const ColoredBigraph& g, const TargetGraph& h);

/// Analytic containment test for K_{a,b} via component footprints.
bool bicliqueContains(int a, int b, const TargetGraph& h);

// Partial-matrix variants used by the search. Cells equal to 0 are absent.
bool hasRainbow(const ColorMatrix& m, RainbowPattern p);
bool hasRainbowThrough(const ColorMatrix& m, RainbowPattern p, int row, int col);
bool hasMonochromatic(const ColorMatrix& m, const TargetGraph& h);
bool hasMonochromaticThrough(const ColorMatrix& m, const TargetGraph& h, int row, int col);

}  // namespace bgr
