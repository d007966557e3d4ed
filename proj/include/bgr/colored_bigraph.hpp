#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bgr {

template <class Scalar>
using RowMajorMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Color index. 1-based; 0 marks an unassigned cell in partial colorings.
using Color = std::uint8_t;
using ColorMatrix = RowMajorMatrix<Color>;

inline constexpr int kMaxColors = 255;

/// Raised for malformed text, out-of-range indices and violated preconditions
/// on user-supplied data.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside a theorem's hypotheses or a construction's size
/// constraints; the message names the violated clause.
class HypothesisError : public InputError {
 public:
  using InputError::InputError;
};

enum class Side : std::uint8_t { U, V };

inline Side opposite(Side s) { return s == Side::U ? Side::V : Side::U; }

struct Vertex {
  Side side = Side::U;
  int index = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A k-edge-coloring of K_{a,b}. Rows index the left part U, columns the
/// right part V. Immutable once built.
class ColoredBigraph {
 public:
  ColoredBigraph(ColorMatrix colors, int k);

  int rows() const { return static_cast<int>(colors_.rows()); }
  int cols() const { return static_cast<int>(colors_.cols()); }
  int k() const { return k_; }
  bool square() const { return rows() == cols(); }

  Color operator()(int u, int v) const { return colors_(u, v); }
  const ColorMatrix& matrix() const { return colors_; }

  int sideSize(Side s) const { return s == Side::U ? rows() : cols(); }
  Color edge(Vertex a, int other) const {
    return a.side == Side::U ? colors_(a.index, other) : colors_(other, a.index);
  }

  friend bool operator==(const ColoredBigraph& x, const ColoredBigraph& y) {
    return x.k_ == y.k_ && x.colors_.rows() == y.colors_.rows() &&
           x.colors_.cols() == y.colors_.cols() && x.colors_ == y.colors_;
  }

 private:
  ColorMatrix colors_;
  int k_;
};

/// Checked access; throws InputError when (u, v) is out of range.
Color colorOf(const ColoredBigraph& g, int u, int v);

/// Distinct colors on edges at x.
std::set<Color> palette(const ColoredBigraph& g, Vertex x);

/// Distinct colors on E(S, other side). S must be nonempty and one-sided.
int colorDegreeOfSet(const ColoredBigraph& g, std::span<const Vertex> s);

struct ColorDegreeRange {
  int minDegree;
  int maxDegree;
};
ColorDegreeRange minMaxColorDegree(const ColoredBigraph& g);

std::set<Color> usedColors(const ColoredBigraph& g);
bool isExact(const ColoredBigraph& g);

ColoredBigraph transpose(const ColoredBigraph& g);

/// Applies a color relabeling: new color of c is relabel[c - 1].
ColoredBigraph recolor(const ColoredBigraph& g, std::span<const Color> relabel);

/// Permutes rows and columns: result(i, j) = g(rowOrder[i], colOrder[j]).
ColoredBigraph permute(const ColoredBigraph& g, std::span<const int> rowOrder,
                       std::span<const int> colOrder);

/// Re-declares k as the number of colors used, renumbering colors in
/// increasing order to 1..k. Used by enumeration, which produces RGS colorings.
ColoredBigraph compactColors(const ColoredBigraph& g);

// .cbg text format: "a b k" (or "n k") header, then a rows of b integers.
// Lines starting with '#' are comments.
ColoredBigraph readColoring(std::string_view text);
std::string writeColoring(const ColoredBigraph& g);

ColoredBigraph readColoringFile(const std::string& path);

}  // namespace bgr
