#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bgr/patterns.hpp"
#include "bgr/target_graph.hpp"

namespace bgr {

/// Extremes of |S| and |T| over bipartitions (S, T) of H with |S| <= |T|.
struct BipartitionStats {
  int s = 0;      // min |S|
  int t = 0;      // max |T|
  int sStar = 0;  // max |S|
  int tStar = 0;  // min |T|

  friend bool operator==(const BipartitionStats&, const BipartitionStats&) = default;
};

BipartitionStats bipartitionStats(const TargetGraph& h);

/// Bounds on bgr_k(P4 : H) for k >= 3 and s(H) >= 2. `exact` is set when
/// s(H) = s*(H) or when the two bounds coincide.
struct LiBounds {
  long long lower = 0;
  long long upper = 0;
  std::optional<long long> exact;
};

LiBounds liBounds(const TargetGraph& h, int k);

/// Result of testing one closed-form theorem against (pattern, H, k).
struct TheoremCheck {
  std::string id;
  RainbowPattern pattern = RainbowPattern::P4;
  bool applies = false;  // pattern and target shape match the statement
  std::vector<std::string> satisfied;
  std::vector<std::string> violated;
  long long value = 0;
  /// Block size of the extremal construction (value = k * (blockSize + 1) - k + 1
  /// for the block theorems, t for T41, s + t - 1 for T42 gives value - 1).
  long long blockSize = 0;

  bool holds() const { return applies && violated.empty(); }
};

struct BgrValue {
  std::string theoremId;
  long long value = 0;
  std::vector<std::string> hypothesesChecked;
  /// Further theorems whose ranges also contain the query (values agree).
  std::vector<std::string> alsoMatched;
};

struct OutOfTheoremRange {
  std::string nearestTheorem;
  std::vector<std::string> violatedClauses;
};

using BgrResult = std::variant<BgrValue, OutOfTheoremRange>;

/// Theorem ids in evaluation order: T31 T32 T33 T34 C31 T36 T41 T42.
const std::vector<std::string>& theoremIds();

TheoremCheck checkTheorem(const std::string& id, RainbowPattern p, const TargetGraph& h, int k);
/// Pattern each theorem forbids.
RainbowPattern theoremPattern(const std::string& id);

/// Total: matches every theorem; throws std::logic_error if two matching
/// theorems disagree on the value.
BgrResult bgrValue(RainbowPattern p, const TargetGraph& h, int k);

/// Two-color bipartite Ramsey number of the path P_n (n >= 3).
long long br2Path(int n);

}  // namespace bgr
