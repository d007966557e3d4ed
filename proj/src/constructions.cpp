#include "bgr/constructions.hpp"

#include <numeric>

#include "bgr/catalog.hpp"

namespace bgr {

namespace {

void checkSizes(int n, std::size_t parts, const std::vector<int>& sizes, const char* what) {
  if (sizes.size() != parts) {
    throw HypothesisError(std::string(what) + ": expected " + std::to_string(parts) +
                          " part sizes, got " + std::to_string(sizes.size()));
  }
  for (int s : sizes) {
    if (s < 1) throw HypothesisError(std::string(what) + ": part sizes must be positive");
  }
  if (std::accumulate(sizes.begin(), sizes.end(), 0) != n) {
    throw HypothesisError(std::string(what) + ": part sizes must sum to n = " + std::to_string(n));
  }
}

}  // namespace

ColoredBigraph rowBlocks(int n, int k, const std::vector<int>& sizes) {
  if (n < 1 || k < 1 || k > kMaxColors) throw HypothesisError("rowBlocks: need n >= 1, 1 <= k");
  checkSizes(n, k, sizes, "rowBlocks");
  ColorMatrix m(n, n);
  int row = 0;
  for (int i = 0; i < k; ++i) {
    m.middleRows(row, sizes[i]).setConstant(static_cast<Color>(i + 1));
    row += sizes[i];
  }
  return ColoredBigraph(std::move(m), k);
}

ColoredBigraph colBlocks(int n, int k, const std::vector<int>& sizes) {
  return transpose(rowBlocks(n, k, sizes));
}

ColoredBigraph diagonal(int n, int k, const std::vector<int>& uSizes,
                        const std::vector<int>& vSizes, int baseColor) {
  if (k < 2 || k > kMaxColors) throw HypothesisError("diagonal: need k >= 2");
  if (baseColor < 1 || baseColor > k) throw HypothesisError("diagonal: base color outside 1..k");
  checkSizes(n, k - 1, uSizes, "diagonal (U)");
  checkSizes(n, k - 1, vSizes, "diagonal (V)");
  ColorMatrix m = ColorMatrix::Constant(n, n, static_cast<Color>(baseColor));
  int row = 0, col = 0, color = 0;
  for (int i = 0; i < k - 1; ++i) {
    if (++color == baseColor) ++color;
    m.block(row, col, uSizes[i], vSizes[i]).setConstant(static_cast<Color>(color));
    row += uSizes[i];
    col += vSizes[i];
  }
  return ColoredBigraph(std::move(m), k);
}

ColoredBigraph sporadicP5(SporadicCase which) {
  if (which == SporadicCase::N3) {
    ColorMatrix m(3, 3);
    m << 1, 3, 2,
         2, 4, 1,
         3, 1, 4;
    return ColoredBigraph(std::move(m), 4);
  }
  ColorMatrix m(4, 4);
  m << 1, 3, 2, 4,
       2, 4, 1, 3,
       3, 1, 4, 2,
       4, 2, 3, 1;
  return ColoredBigraph(std::move(m), 4);
}

std::vector<int> balancedSizes(int total, int parts) {
  if (parts < 1) throw HypothesisError("need at least one part");
  std::vector<int> out(parts, total / parts);
  for (int i = 0; i < total % parts; ++i) ++out[i];
  return out;
}

ColoredBigraph lowerBoundFor(const std::string& theoremId, const TargetGraph& h, int k) {
  const TheoremCheck check = checkTheorem(theoremId, theoremPattern(theoremId), h, k);
  if (!check.holds()) {
    std::string why;
    for (const std::string& v : check.violated) why += (why.empty() ? "" : "; ") + v;
    throw HypothesisError(theoremId + " hypotheses violated: " + why);
  }
  if (theoremId == "T41") {
    const int t = static_cast<int>(check.blockSize);
    const std::vector<int> sizes = balancedSizes(t, k - 1);
    return diagonal(t, k, sizes, sizes, k);
  }
  if (theoremId == "T42") {
    const auto& b = std::get<Biclique>(h.components().front());
    const int n = static_cast<int>(check.blockSize);
    const std::vector<int> sizes = balancedSizes(n, k - 1);
    for (int s : sizes) {
      if (s < 1 || s > b.t - 1) {
        throw HypothesisError("T42 construction needs 1 <= |U_i| = |V_i| <= t - 1");
      }
    }
    return diagonal(n, k, sizes, sizes, k);
  }
  const int block = static_cast<int>(check.blockSize);
  const int n = k * block;
  const std::vector<int> sizes(k, block);
  return theoremId == "T31" ? rowBlocks(n, k, sizes) : colBlocks(n, k, sizes);
}

}  // namespace bgr
