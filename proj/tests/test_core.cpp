#include <doctest.h>

#include <random>

#include "bgr/colored_bigraph.hpp"
#include "bgr/constructions.hpp"
#include "bgr/json_io.hpp"
#include "bgr/target_graph.hpp"
#include "oracles.hpp"
#include "target_parser.hpp"

using namespace bgr;

namespace {

ColoredBigraph allOnes(int n) { return ColoredBigraph(ColorMatrix::Constant(n, n, 1), 1); }

// T21(e)-shaped: U1 = {u0}, U2 = {u1}, V1..V4 = {v0}..{v3}.
ColoredBigraph t21eShape() {
  ColorMatrix m(2, 4);
  m << 1, 1, 4, 4,
       2, 3, 2, 3;
  return ColoredBigraph(std::move(m), 4);
}

}  // namespace

TEST_CASE("colorOf") {
  CHECK(colorOf(allOnes(2), 0, 0) == 1);
  const ColoredBigraph d = sporadicP5(SporadicCase::N3);
  CHECK(colorOf(d, 0, 2) == 2);
  CHECK(colorOf(d, 1, 0) == 2);
  const ColoredBigraph diag = diagonal(6, 4, {2, 2, 2}, {1, 2, 3}, 1);
  CHECK(colorOf(diag, 2, 1) == 3);
  CHECK_THROWS_AS(colorOf(d, 3, 0), InputError);
  CHECK_THROWS_AS(colorOf(d, 0, -1), InputError);
}

TEST_CASE("palette") {
  CHECK(palette(allOnes(3), {Side::V, 2}) == std::set<Color>{1});
  CHECK(palette(sporadicP5(SporadicCase::N3), {Side::U, 0}) == std::set<Color>{1, 2, 3});
  CHECK(palette(t21eShape(), {Side::U, 0}) == std::set<Color>{1, 4});
  CHECK(palette(t21eShape(), {Side::V, 1}) == std::set<Color>{1, 3});
}

TEST_CASE("colorDegreeOfSet") {
  const std::vector<Vertex> u3{{Side::U, 0}, {Side::U, 1}, {Side::U, 2}};
  CHECK(colorDegreeOfSet(allOnes(3), u3) == 1);
  const ColoredBigraph rb = rowBlocks(3, 3, {1, 1, 1});
  const std::vector<Vertex> u01{{Side::U, 0}, {Side::U, 1}};
  CHECK(colorDegreeOfSet(rb, u01) == 2);
  const std::vector<Vertex> u12{{Side::U, 1}, {Side::U, 2}};
  CHECK(colorDegreeOfSet(sporadicP5(SporadicCase::N3), u12) == 4);
  const std::vector<Vertex> mixed{{Side::U, 0}, {Side::V, 0}};
  CHECK_THROWS_AS(colorDegreeOfSet(rb, mixed), InputError);
  CHECK_THROWS_AS(colorDegreeOfSet(rb, std::vector<Vertex>{}), InputError);
}

TEST_CASE("minMaxColorDegree") {
  auto r = minMaxColorDegree(allOnes(3));
  CHECK(r.minDegree == 1);
  CHECK(r.maxDegree == 1);
  r = minMaxColorDegree(sporadicP5(SporadicCase::N3));
  CHECK(r.minDegree == 3);
  CHECK(r.maxDegree == 3);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto g = oracle::randomColoring(3, 4, 4, rng);
    const auto d = minMaxColorDegree(g);
    CHECK(d.minDegree <= d.maxDegree);
  }
}

TEST_CASE("readColoring and exactness") {
  const ColoredBigraph g = readColoring("2 1\n1 1\n1 1\n");
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 2);
  CHECK(isExact(g));
  CHECK_FALSE(isExact(readColoring("2 3\n1 2\n2 1\n")));
  const ColoredBigraph e = readColoring(
      "# the n = 4 sporadic coloring\n4 4\n1 3 2 4\n2 4 1 3\n3 1 4 2\n4 2 3 1\n");
  CHECK(e == sporadicP5(SporadicCase::N4));
  std::vector<std::pair<int, int>> ones;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      if (e(u, v) == 1) ones.emplace_back(u, v);
    }
  }
  CHECK(ones == std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {2, 1}, {3, 3}});
  CHECK(readColoring("2 3 2\n\n1 2 1\n# comment\n2 2 2\n").cols() == 3);
}

TEST_CASE("readColoring rejects malformed input") {
  CHECK_THROWS_AS(readColoring(""), InputError);
  CHECK_THROWS_AS(readColoring("2 2\n1 1\n"), InputError);
  CHECK_THROWS_AS(readColoring("2 2\n1 1\n1\n"), InputError);
  CHECK_THROWS_AS(readColoring("2 2\n1 3\n1 1\n"), InputError);
  CHECK_THROWS_AS(readColoring("2 2\n1 0\n1 1\n"), InputError);
  CHECK_THROWS_AS(readColoring("2 2\n1 x\n1 1\n"), InputError);
  CHECK_THROWS_AS(readColoring("1 2 3 4\n1\n"), InputError);
  CHECK_THROWS_AS(readColoring("0 2\n"), InputError);
  CHECK_THROWS_AS(readColoring("2 256\n1 1\n1 1\n"), InputError);
}

TEST_CASE("round trip and palette consistency on random colorings") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + static_cast<int>(rng() % 6), b = 1 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 6);
    const ColoredBigraph g = oracle::randomColoring(a, b, k, rng);
    CHECK(readColoring(writeColoring(g)) == g);
    CHECK(coloringFromJson(Json(g)) == g);

    std::set<Color> unionU;
    for (int u = 0; u < a; ++u) {
      const auto p = palette(g, {Side::U, u});
      CHECK(static_cast<int>(p.size()) <= std::min(k, b));
      const Vertex x{Side::U, u};
      CHECK(colorDegreeOfSet(g, std::span<const Vertex>(&x, 1)) == static_cast<int>(p.size()));
      unionU.insert(p.begin(), p.end());
    }
    std::set<Color> unionV;
    for (int v = 0; v < b; ++v) {
      const auto p = palette(g, {Side::V, v});
      CHECK(static_cast<int>(p.size()) <= std::min(k, a));
      unionV.insert(p.begin(), p.end());
    }
    CHECK(unionU == usedColors(g));
    CHECK(unionV == usedColors(g));
    CHECK(isExact(g) == (static_cast<int>(usedColors(g).size()) == k));
  }
}

TEST_CASE("transpose, permute, recolor, compactColors") {
  const ColoredBigraph d = sporadicP5(SporadicCase::N3);
  CHECK(transpose(transpose(d)) == d);
  CHECK(transpose(d)(2, 0) == d(0, 2));
  const std::vector<int> rows{2, 0, 1}, cols{1, 2, 0};
  const ColoredBigraph p = permute(d, rows, cols);
  CHECK(p(0, 0) == d(2, 1));
  const std::vector<Color> swap12{2, 1, 3, 4};
  CHECK(recolor(d, swap12)(0, 0) == 2);
  ColorMatrix m(1, 3);
  m << 2, 5, 2;
  const ColoredBigraph c = compactColors(ColoredBigraph(m, 6));
  CHECK(c.k() == 2);
  CHECK(c(0, 1) == 2);
  CHECK(c(0, 0) == 1);
  CHECK_THROWS_AS(ColoredBigraph(m, 4), InputError);
}

TEST_CASE("target grammar") {
  using bgr::cli::parseTarget;
  CHECK(toString(parseTarget("P4+C6+K1,5+K2,3")) == "P4+C6+K1,5+K2,3");
  CHECK(toString(parseTarget("3xP10")) == "3xP10");
  CHECK(parseTarget("3xP10").components().size() == 3);
  CHECK(parseTarget("K1,5").components().front() == Component{Star{5}});
  CHECK(parseTarget("K5,1").components().front() == Component{Star{5}});
  CHECK(parseTarget("K3,2").components().front() == Component{Biclique{2, 3}});
  CHECK(parseTarget("P_2 + P_4") == TargetGraph({PathV{2}, PathV{4}}));
  CHECK(parseTarget("K_{3,3}") == TargetGraph({Biclique{3, 3}}));
  CHECK(parseTarget("2xK1,2").vertexCount() == 6);
  try {
    parseTarget("C5");
    FAIL("odd cycle accepted");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("bipartite") != std::string::npos);
  }
  CHECK_THROWS_AS(parseTarget(""), InputError);
  CHECK_THROWS_AS(parseTarget("P"), InputError);
  CHECK_THROWS_AS(parseTarget("P4+"), InputError);
  CHECK_THROWS_AS(parseTarget("Q4"), InputError);
  CHECK_THROWS_AS(parseTarget("P1"), InputError);
  CHECK_THROWS_AS(parseTarget("C2"), InputError);
  CHECK_THROWS_AS(parseTarget("0xP4"), InputError);
  CHECK_THROWS_AS(parseTarget("K2"), InputError);
}

TEST_CASE("pattern graph shapes") {
  const PatternGraph p = patternGraph(TargetGraph({PathV{4}, EvenCycle{6}, Star{3}, Biclique{2, 3}}));
  CHECK(p.vertexCount == 4 + 6 + 4 + 5);
  CHECK(p.edges.size() == 3 + 6 + 3 + 6);
  for (const auto& [x, y] : p.edges) {
    CHECK(p.parity[x] != p.parity[y]);
    CHECK(p.component[x] == p.component[y]);
  }
  CHECK_THROWS_AS(TargetGraph({EvenCycle{5}}), InputError);
  CHECK_THROWS_AS(TargetGraph({Biclique{3, 2}}), InputError);
}

TEST_CASE("witness JSON fields") {
  StructureWitness w;
  w.theorem = Theorem::T21;
  w.caseLabel = 'b';
  w.uPartition = {{0}, {1, 2}};
  w.vPartition = Partition{{2}, {0, 1}};
  w.baseColor = 3;
  w.colorAssignment = {3, 1};
  const Json j = w;
  for (const char* key :
       {"theorem", "case", "uPartition", "vPartition", "baseColor", "colorAssignment"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["case"] == "b");
  CHECK(j["baseColor"] == 3);
  CHECK(j["colorAssignment"] == Json::array({3, 1}));
}
