#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bgr/colored_bigraph.hpp"

namespace bgr {

inline constexpr int kCanonicalMaxSide = 8;

/// Orbit identifier under row permutations x column permutations x color
/// relabeling (x transpose when square). Layout: a, b, k, then the
/// lexicographically least row-major matrix of the orbit with colors numbered
/// by first occurrence.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonicalForm(const ColoredBigraph& g);
ColoredBigraph decode(const CanonicalCode& code);
/// decode(canonicalForm(g)).
ColoredBigraph canonicalRepresentative(const ColoredBigraph& g);

std::string toHex(const CanonicalCode& code);

}  // namespace bgr
