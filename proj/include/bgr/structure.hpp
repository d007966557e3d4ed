#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bgr/colored_bigraph.hpp"
#include "bgr/patterns.hpp"

namespace bgr {

/// Structure theorems for rainbow-free colorings of K_{n,n}:
/// T13 (no rainbow P4), T14 (no rainbow P5), T21 (no rainbow K_{1,3}).
enum class Theorem { T13, T14, T21 };

std::string toString(Theorem t);
Theorem parseTheorem(const std::string& s);
RainbowPattern forbiddenPattern(Theorem t);
/// Smallest n the theorem covers.
int minimumOrder(Theorem t);

using Partition = std::vector<std::vector<int>>;

/// Checkable certificate of a structure case.
///
/// Partitions are stated in the case's own orientation: when `swapped` is
/// set, the case's U is the host's V side (and uPartition indexes columns).
/// colorAssignment[j] is the host color playing the case's color j + 1.
/// For the sporadic cases T14(d)/(e) both partitions list singletons in the
/// order u_1, u_2, ... / v_1, v_2, ... of the stored coloring.
struct StructureWitness {
  Theorem theorem = Theorem::T13;
  char caseLabel = 'a';
  bool swapped = false;
  Partition uPartition;
  std::optional<Partition> vPartition;
  std::optional<Color> baseColor;
  std::vector<Color> colorAssignment;
};

struct NotApplicable {
  Certificate rainbow;
};

/// Rainbow-free but matching none of the cases: a counterexample to the
/// theorem as implemented.
struct Unclassified {};

using Classification = std::variant<NotApplicable, StructureWitness, Unclassified>;

/// Case label ('a'..'e'), 'N' for NotApplicable, 'U' for Unclassified.
char label(const Classification& c);

Classification classifyP4Free(const ColoredBigraph& g);
Classification classifyP5Free(const ColoredBigraph& g);
Classification classifyK13Free(const ColoredBigraph& g);
Classification classify(Theorem t, const ColoredBigraph& g);

/// True iff every edge obeys the case's constraints. Throws InputError on
/// a malformed witness (bad part count, partition not covering its side,
/// indices or colors out of range).
bool verifyWitness(const ColoredBigraph& g, const StructureWitness& w);

}  // namespace bgr
