#pragma once

#include <string>
#include <vector>

#include "bgr/colored_bigraph.hpp"
#include "bgr/patterns.hpp"
#include "bgr/target_graph.hpp"

namespace bgr {

/// c(U_i, V) = i with |U_i| = sizes[i-1].
ColoredBigraph rowBlocks(int n, int k, const std::vector<int>& sizes);
/// c(U, V_i) = i with |V_i| = sizes[i-1].
ColoredBigraph colBlocks(int n, int k, const std::vector<int>& sizes);

/// Block-diagonal coloring: c(U_i, V_i) takes the i-th color of
/// {1..k} \ {baseColor}; every other edge has baseColor. Both sides are split
/// into k-1 nonempty parts.
ColoredBigraph diagonal(int n, int k, const std::vector<int>& uSizes,
                        const std::vector<int>& vSizes, int baseColor);

enum class SporadicCase { N3, N4 };
/// The two sporadic rainbow-P5-free colorings (3x3 and 4x4, four colors).
ColoredBigraph sporadicP5(SporadicCase which);

/// `parts` sizes summing to `total`, as equal as possible with the
/// remainder on the low-index parts.
std::vector<int> balancedSizes(int total, int parts);

/// Extremal coloring at n = value - 1 for the named theorem
/// (T31, T32, T33, T34, C31, T36, T41, T42).
ColoredBigraph lowerBoundFor(const std::string& theoremId, const TargetGraph& h, int k);

}  // namespace bgr
