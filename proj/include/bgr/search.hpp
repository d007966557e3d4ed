#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bgr/colored_bigraph.hpp"
#include "bgr/patterns.hpp"
#include "bgr/structure.hpp"
#include "bgr/target_graph.hpp"

namespace bgr {

struct SearchOptions {
  std::uint64_t nodeBudget = 1'000'000'000;
  /// Worker threads; 0 uses the hardware concurrency.
  int jobs = 0;
  /// Visit only the lexicographically least member of each orbit.
  bool orbitFilter = false;
  /// Drop leaves that use fewer than k colors.
  bool requireExact = false;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t visited = 0;
  std::size_t tasks = 0;
  bool budgetExceeded = false;
};

/// Cut predicate on a partial coloring (0 = unassigned) called right after
/// cell (row, col) was assigned. It must be invariant under the symmetry group
/// and monotone (once true, true for every extension).
using Pruner = std::function<bool(const ColorMatrix& partial, int row, int col)>;

struct VisitContext {
  std::size_t task = 0;
  int usedColors = 0;
};

/// Called once per surviving leaf, possibly from several threads at once
/// (distinct tasks run concurrently; one task is sequential). Returning true
/// stops the enumeration after the current task and all lower-numbered ones.
using Visitor = std::function<bool(const ColoredBigraph& g, const VisitContext& ctx)>;

/// DFS over the cells of K_{n,n} in row-major order. Colors are introduced in
/// order of first occurrence, rows and columns are kept lexicographically
/// non-decreasing; every orbit keeps at least one member.
EnumerationStats enumerateColorings(int n, int k, const Pruner& pruner, const Visitor& visitor,
                                    const SearchOptions& options = {});

Pruner rainbowPruner(RainbowPattern p);
Pruner monochromaticPruner(const TargetGraph& h);

enum class Answer { Holds, Counterexample, Inconclusive };
std::string toString(Answer a);

enum class AvoidanceStatus { Found, Absent, Inconclusive };
std::string toString(AvoidanceStatus s);

struct AvoidanceResult {
  AvoidanceStatus status = AvoidanceStatus::Inconclusive;
  std::optional<ColoredBigraph> witness;
  EnumerationStats stats;
};

/// Searches for a k-coloring of K_{n,n} with no rainbow `forbidRainbow` and no
/// monochromatic `forbidMono`. Absent is only reported after a complete search.
AvoidanceResult existsAvoiding(int n, int k, std::optional<RainbowPattern> forbidRainbow,
                               const std::optional<TargetGraph>& forbidMono, bool requireExact,
                               const SearchOptions& options = {});

struct CheckOutcome {
  std::string name;
  Answer answer = Answer::Inconclusive;
  std::string method;
  std::map<std::string, std::uint64_t> statistics;
  std::optional<ColoredBigraph> counterexample;
  std::vector<Certificate> certificates;
  std::string detail;
};

struct VerificationReport {
  std::string question;
  Answer answer = Answer::Inconclusive;
  /// exhaustive | pruned-exhaustive | randomized
  std::string method;
  std::vector<CheckOutcome> checks;
  std::map<std::string, std::uint64_t> statistics;
  std::optional<ColoredBigraph> counterexample;
  std::vector<Certificate> certificates;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> notes;
  double wallSeconds = 0;
};

struct StructureCheckOptions {
  /// Restrict the enumeration to rainbow-free branches.
  bool prune = true;
  std::uint64_t nodeBudget = 1'000'000'000;
  int jobs = 0;
};

/// Enumerates exact colorings of K_{n,n} with at most kMax colors (one per
/// orbit) and classifies each; holds iff every rainbow-free one gets a case
/// with a verified witness.
VerificationReport checkStructureTheorem(Theorem t, int n, int kMax,
                                         const StructureCheckOptions& options = {});

struct BgrCheckOptions {
  /// Attempt complete avoidance search for N >= v before sampling.
  bool exhaustive = true;
  std::uint64_t samplesPerShape = 10'000;
  std::uint64_t seed = 0;
  std::uint64_t nodeBudget = 1'000'000'000;
  int jobs = 0;
  std::optional<long long> expectedValue;
};

/// (i) the extremal construction at v-1 avoids both structures, (ii) at each
/// N in nValues (default {v, v+1}) no exact coloring avoids both, (iii) the
/// catalog value equals expectedValue when given.
VerificationReport verifyBgrPoint(RainbowPattern p, const TargetGraph& h, int k,
                                  std::vector<int> nValues = {},
                                  const BgrCheckOptions& options = {});

/// Shapes of the structure cases that can be sampled for k colors.
std::vector<std::string> structuredShapes(Theorem t, int k);
/// A random exact coloring of K_{n,n} of the given case shape
/// ("a", "b", "bT", "c", "d", "dT", "e", "eT").
ColoredBigraph sampleStructured(Theorem t, const std::string& shape, int n, int k,
                                std::mt19937_64& rng);

}  // namespace bgr
