#include <doctest.h>

#include <random>

#include "bgr/constructions.hpp"
#include "bgr/patterns.hpp"
#include "oracles.hpp"

using namespace bgr;

namespace {

const RainbowPattern kPatterns[] = {RainbowPattern::P4, RainbowPattern::P5, RainbowPattern::K13};

std::vector<TargetGraph> smallTargets() {
  return {TargetGraph({PathV{2}}),        TargetGraph({PathV{3}}),
          TargetGraph({PathV{4}}),        TargetGraph({PathV{5}}),
          TargetGraph({EvenCycle{4}}),    TargetGraph({Star{2}}),
          TargetGraph({Star{3}}),         TargetGraph({Biclique{2, 2}}),
          TargetGraph({PathV{2}, PathV{4}}), TargetGraph({PathV{2}, PathV{2}}),
          TargetGraph({Star{2}, PathV{3}}), TargetGraph({EvenCycle{6}}),
          TargetGraph({Biclique{2, 3}})};
}

}  // namespace

TEST_CASE("findRainbow examples") {
  const ColoredBigraph ones(ColorMatrix::Constant(3, 3, 1), 1);
  for (RainbowPattern p : kPatterns) CHECK_FALSE(findRainbow(ones, p));
  CHECK_FALSE(findRainbow(sporadicP5(SporadicCase::N3), RainbowPattern::P5));
  CHECK_FALSE(findRainbow(sporadicP5(SporadicCase::N4), RainbowPattern::P5));

  ColorMatrix m = ColorMatrix::Constant(3, 3, 1);
  m.row(0) << 1, 2, 3;
  const ColoredBigraph star(m, 3);
  const auto c = findRainbow(star, RainbowPattern::K13);
  REQUIRE(c);
  CHECK(c->vertexMap.front() == Vertex{Side::U, 0});
  CHECK(verifyCertificate(star, *c, RainbowPattern::K13));
}

TEST_CASE("parseRainbowPattern") {
  CHECK(parseRainbowPattern("P4") == RainbowPattern::P4);
  CHECK(parseRainbowPattern("K1,3") == RainbowPattern::K13);
  CHECK(parseRainbowPattern("K13") == RainbowPattern::K13);
  CHECK_THROWS_AS(parseRainbowPattern("P6"), InputError);
}

TEST_CASE("findRainbow agrees with tuple enumeration") {
  std::mt19937_64 rng(11);
  int positives = 0;
  for (int i = 0; i < 600; ++i) {
    const int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 5);
    const ColoredBigraph g = oracle::randomColoring(a, b, k, rng);
    for (RainbowPattern p : kPatterns) {
      const auto c = findRainbow(g, p);
      const bool expected = oracle::hasRainbow(g.matrix(), p);
      CHECK(c.has_value() == expected);
      CHECK(hasRainbow(g.matrix(), p) == expected);
      if (c) {
        ++positives;
        CHECK(c->kind == CertificateKind::Rainbow);
        CHECK(verifyCertificate(g, *c, p));
      }
    }
  }
  CHECK(positives > 100);
}

TEST_CASE("findMonochromatic examples") {
  const ColoredBigraph ones(ColorMatrix::Constant(3, 3, 1), 1);
  const TargetGraph c6({EvenCycle{6}});
  const auto c = findMonochromatic(ones, c6);
  REQUIRE(c);
  CHECK(c->color == 1);
  CHECK(verifyCertificate(ones, *c, c6));

  const TargetGraph h({PathV{2}, PathV{4}});
  const ColoredBigraph big = rowBlocks(7, 3, {3, 2, 2});
  const auto found = findMonochromatic(big, h);
  REQUIRE(found);
  CHECK(found->color == 1);
  CHECK(oracle::hasMonochromatic(big, h));

  const ColoredBigraph small = rowBlocks(6, 3, {2, 2, 2});
  CHECK_FALSE(findMonochromatic(small, h));
  CHECK_FALSE(oracle::hasMonochromatic(small, h));
}

TEST_CASE("findMonochromatic agrees with brute-force embedding") {
  std::mt19937_64 rng(5);
  const auto targets = smallTargets();
  for (int i = 0; i < 150; ++i) {
    const int a = 2 + static_cast<int>(rng() % 4), b = 2 + static_cast<int>(rng() % 4);
    const int k = 1 + static_cast<int>(rng() % 3);
    const ColoredBigraph g = oracle::randomColoring(a, b, k, rng);
    for (const TargetGraph& h : targets) {
      const auto c = findMonochromatic(g, h);
      CHECK(c.has_value() == oracle::hasMonochromatic(g, h));
      CHECK(hasMonochromatic(g.matrix(), h) == c.has_value());
      if (c) {
        CHECK(c->kind == CertificateKind::Monochromatic);
        CHECK(verifyCertificate(g, *c, h));
      }
    }
  }
}

TEST_CASE("embed examples") {
  CHECK_FALSE(embed(TargetGraph({PathV{3}}), completeBipartite(1, 1)));
  const auto c4 = embed(TargetGraph({EvenCycle{4}}), completeBipartite(2, 2));
  REQUIRE(c4);
  CHECK(c4->size() == 4);
  const auto p5 = embed(TargetGraph({PathV{5}}), completeBipartite(2, 3));
  REQUIRE(p5);
  // the endpoints and the middle vertex sit on the larger side
  CHECK((*p5)[0].side == Side::V);
  CHECK((*p5)[2].side == Side::V);
  CHECK((*p5)[4].side == Side::V);
}

TEST_CASE("embed agrees with brute force on random hosts") {
  std::mt19937_64 rng(9);
  const auto targets = smallTargets();
  for (int i = 0; i < 200; ++i) {
    const int a = 1 + static_cast<int>(rng() % 5), b = 1 + static_cast<int>(rng() % 5);
    RowMajorMatrix<bool> adj(a, b);
    const double density = 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0;
    std::bernoulli_distribution edge(density);
    for (int x = 0; x < a * b; ++x) adj.data()[x] = edge(rng);
    for (const TargetGraph& h : targets) {
      const auto e = embed(h, BipartiteHost{adj});
      CHECK(e.has_value() == oracle::embeds(h, adj));
      if (e) {
        const PatternGraph p = patternGraph(h);
        for (const auto& [x, y] : p.edges) {
          const Vertex vx = (*e)[x], vy = (*e)[y];
          REQUIRE(vx.side != vy.side);
          const int r = vx.side == Side::U ? vx.index : vy.index;
          const int c = vx.side == Side::U ? vy.index : vx.index;
          CHECK(adj(r, c));
        }
      }
    }
  }
}

TEST_CASE("bicliqueContains examples and properties") {
  CHECK(bicliqueContains(3, 3, TargetGraph({EvenCycle{6}})));
  CHECK_FALSE(bicliqueContains(2, 2, TargetGraph({PathV{5}})));
  const TargetGraph h({PathV{4}, EvenCycle{6}});
  CHECK(bicliqueContains(5, 5, h));
  CHECK_FALSE(bicliqueContains(4, 5, h));
  CHECK(embed(h, completeBipartite(5, 5)));
  CHECK_FALSE(embed(h, completeBipartite(4, 5)));

  for (const TargetGraph& t : smallTargets()) {
    for (int a = 0; a <= 6; ++a) {
      for (int b = 0; b <= 6; ++b) {
        const bool here = bicliqueContains(a, b, t);
        CHECK(here == bicliqueContains(b, a, t));
        if (here) {
          CHECK(bicliqueContains(a + 1, b, t));
          CHECK(bicliqueContains(a, b + 1, t));
        }
        CHECK(here == oracle::embeds(t, RowMajorMatrix<bool>::Constant(a, b, true)));
      }
    }
  }
}

TEST_CASE("certificates are rejected after tampering") {
  const ColoredBigraph d = sporadicP5(SporadicCase::N3);
  const auto c = findRainbow(d, RainbowPattern::P4);
  REQUIRE(c);
  Certificate bad = *c;
  bad.edges[1] = bad.edges[0];
  CHECK_FALSE(verifyCertificate(d, bad, RainbowPattern::P4));

  const ColoredBigraph ones(ColorMatrix::Constant(3, 3, 1), 2);
  const TargetGraph p4({PathV{4}});
  auto m = findMonochromatic(ones, p4);
  REQUIRE(m);
  m->color = 2;
  CHECK_FALSE(verifyCertificate(ones, *m, p4));
}

TEST_CASE("partial-matrix detection treats zero as unassigned") {
  ColorMatrix m = ColorMatrix::Zero(3, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  CHECK_FALSE(hasRainbow(m, RainbowPattern::K13));
  m(0, 2) = 3;
  CHECK(hasRainbow(m, RainbowPattern::K13));
  CHECK(hasRainbowThrough(m, RainbowPattern::K13, 0, 2));

  ColorMatrix p = ColorMatrix::Zero(3, 3);
  p(0, 0) = 1;
  p(1, 0) = 2;
  p(1, 1) = 3;
  CHECK(hasRainbow(p, RainbowPattern::P4));
  CHECK(hasRainbowThrough(p, RainbowPattern::P4, 1, 1));
  CHECK_FALSE(hasRainbow(p, RainbowPattern::P5));

  ColorMatrix q = ColorMatrix::Zero(2, 2);
  q(0, 0) = q(0, 1) = q(1, 0) = 1;
  CHECK(hasMonochromatic(q, TargetGraph({PathV{4}})));
  CHECK(hasMonochromaticThrough(q, TargetGraph({PathV{4}}), 1, 0));
  CHECK_FALSE(hasMonochromatic(q, TargetGraph({EvenCycle{4}})));
}

TEST_CASE("incremental detection matches full detection on random partial fills") {
  std::mt19937_64 rng(21);
  const TargetGraph h({PathV{2}, PathV{3}});
  for (int i = 0; i < 300; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    ColorMatrix m = ColorMatrix::Zero(n, n);
    std::uniform_int_distribution<int> color(1, 4);
    for (int cell = 0; cell < n * n; ++cell) {
      const int r = cell / n, c = cell % n;
      const bool before[3] = {hasRainbow(m, RainbowPattern::P4), hasRainbow(m, RainbowPattern::P5),
                              hasRainbow(m, RainbowPattern::K13)};
      const bool monoBefore = hasMonochromatic(m, h);
      m(r, c) = static_cast<Color>(color(rng));
      for (int p = 0; p < 3; ++p) {
        const auto pat = kPatterns[p];
        const bool after = hasRainbow(m, pat);
        if (!before[p]) CHECK(hasRainbowThrough(m, pat, r, c) == after);
      }
      if (!monoBefore) CHECK(hasMonochromaticThrough(m, h, r, c) == hasMonochromatic(m, h));
    }
  }
}
