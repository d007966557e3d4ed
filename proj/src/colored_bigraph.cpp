#include "bgr/colored_bigraph.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

namespace bgr {

ColoredBigraph::ColoredBigraph(ColorMatrix colors, int k)
    : colors_(std::move(colors)), k_(k) {
  if (k_ < 1 || k_ > kMaxColors) {
    throw InputError("color count k must lie in 1.." + std::to_string(kMaxColors));
  }
  if (colors_.rows() < 1 || colors_.cols() < 1) {
    throw InputError("both parts must be nonempty");
  }
  for (Eigen::Index u = 0; u < colors_.rows(); ++u) {
    for (Eigen::Index v = 0; v < colors_.cols(); ++v) {
      const int c = colors_(u, v);
      if (c < 1 || c > k_) {
        throw InputError("entry (" + std::to_string(u) + "," + std::to_string(v) +
                         ") = " + std::to_string(c) + " outside 1.." +
                         std::to_string(k_));
      }
    }
  }
}

Color colorOf(const ColoredBigraph& g, int u, int v) {
  if (u < 0 || u >= g.rows() || v < 0 || v >= g.cols()) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") out of range for K_{" + std::to_string(g.rows()) + "," +
                     std::to_string(g.cols()) + "}");
  }
  return g(u, v);
}

static void checkVertex(const ColoredBigraph& g, Vertex x) {
  if (x.index < 0 || x.index >= g.sideSize(x.side)) {
    throw InputError("vertex index " + std::to_string(x.index) + " out of range");
  }
}

std::set<Color> palette(const ColoredBigraph& g, Vertex x) {
  checkVertex(g, x);
  std::set<Color> out;
  const int other = g.sideSize(opposite(x.side));
  for (int w = 0; w < other; ++w) out.insert(g.edge(x, w));
  return out;
}

int colorDegreeOfSet(const ColoredBigraph& g, std::span<const Vertex> s) {
  if (s.empty()) throw InputError("vertex set must be nonempty");
  const Side side = s.front().side;
  std::array<bool, kMaxColors + 1> seen{};
  int count = 0;
  for (const Vertex& x : s) {
    if (x.side != side) throw InputError("vertex set must lie on one side");
    checkVertex(g, x);
    const int other = g.sideSize(opposite(side));
    for (int w = 0; w < other; ++w) {
      const Color c = g.edge(x, w);
      if (!seen[c]) {
        seen[c] = true;
        ++count;
      }
    }
  }
  return count;
}

ColorDegreeRange minMaxColorDegree(const ColoredBigraph& g) {
  ColorDegreeRange r{g.k() + 1, 0};
  for (Side side : {Side::U, Side::V}) {
    for (int i = 0; i < g.sideSize(side); ++i) {
      const int d = static_cast<int>(palette(g, {side, i}).size());
      r.minDegree = std::min(r.minDegree, d);
      r.maxDegree = std::max(r.maxDegree, d);
    }
  }
  return r;
}

std::set<Color> usedColors(const ColoredBigraph& g) {
  const ColorMatrix& m = g.matrix();
  return {m.data(), m.data() + m.size()};
}

bool isExact(const ColoredBigraph& g) {
  return static_cast<int>(usedColors(g).size()) == g.k();
}

ColoredBigraph transpose(const ColoredBigraph& g) {
  return ColoredBigraph(g.matrix().transpose(), g.k());
}

ColoredBigraph recolor(const ColoredBigraph& g, std::span<const Color> relabel) {
  if (static_cast<int>(relabel.size()) < g.k()) {
    throw InputError("relabeling must cover all k colors");
  }
  ColorMatrix m = g.matrix().unaryExpr([&](Color c) { return relabel[c - 1]; });
  const int k = *std::max_element(relabel.begin(), relabel.begin() + g.k());
  return ColoredBigraph(std::move(m), std::max(k, g.k()));
}

ColoredBigraph permute(const ColoredBigraph& g, std::span<const int> rowOrder,
                       std::span<const int> colOrder) {
  ColorMatrix m(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i) {
    for (int j = 0; j < g.cols(); ++j) m(i, j) = g(rowOrder[i], colOrder[j]);
  }
  return ColoredBigraph(std::move(m), g.k());
}

ColoredBigraph compactColors(const ColoredBigraph& g) {
  const std::set<Color> used = usedColors(g);
  std::vector<Color> relabel(g.k(), 0);
  Color next = 1;
  for (Color c : used) relabel[c - 1] = next++;
  ColorMatrix m = g.matrix().unaryExpr([&](Color c) { return relabel[c - 1]; });
  return ColoredBigraph(std::move(m), static_cast<int>(used.size()));
}

namespace {

std::vector<long> parseInts(const std::string& line, int lineNo) {
  std::istringstream in(line);
  std::vector<long> out;
  std::string tok;
  while (in >> tok) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size()) {
      throw InputError("line " + std::to_string(lineNo) + ": not an integer: '" +
                       tok + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

ColoredBigraph readColoring(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineNo = 0;
  std::vector<std::vector<long>> rows;
  std::vector<long> header;
  bool haveHeader = false;
  while (std::getline(in, line)) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<long> values = parseInts(line, lineNo);
    if (!haveHeader) {
      header = std::move(values);
      haveHeader = true;
    } else {
      rows.push_back(std::move(values));
    }
  }
  if (!haveHeader) throw InputError("missing header line");
  long a = 0, b = 0, k = 0;
  if (header.size() == 3) {
    a = header[0];
    b = header[1];
    k = header[2];
  } else if (header.size() == 2) {
    a = b = header[0];
    k = header[1];
  } else {
    throw InputError("header must be 'a b k' or 'n k'");
  }
  if (a < 1 || b < 1 || a > 4096 || b > 4096) {
    throw InputError("part sizes must be positive");
  }
  if (k < 1 || k > kMaxColors) {
    throw InputError("k must lie in 1.." + std::to_string(kMaxColors));
  }
  if (static_cast<long>(rows.size()) != a) {
    throw InputError("expected " + std::to_string(a) + " matrix rows, found " +
                     std::to_string(rows.size()));
  }
  ColorMatrix m(a, b);
  for (long u = 0; u < a; ++u) {
    if (static_cast<long>(rows[u].size()) != b) {
      throw InputError("row " + std::to_string(u + 1) + " has " +
                       std::to_string(rows[u].size()) + " entries, expected " +
                       std::to_string(b));
    }
    for (long v = 0; v < b; ++v) {
      const long c = rows[u][v];
      if (c < 1 || c > k) {
        throw InputError("entry " + std::to_string(c) + " at row " +
                         std::to_string(u + 1) + " outside 1.." + std::to_string(k));
      }
      m(u, v) = static_cast<Color>(c);
    }
  }
  return ColoredBigraph(std::move(m), static_cast<int>(k));
}

std::string writeColoring(const ColoredBigraph& g) {
  std::ostringstream out;
  out << g.rows() << ' ' << g.cols() << ' ' << g.k() << '\n';
  for (int u = 0; u < g.rows(); ++u) {
    for (int v = 0; v < g.cols(); ++v) {
      if (v) out << ' ';
      out << static_cast<int>(g(u, v));
    }
    out << '\n';
  }
  return out.str();
}

ColoredBigraph readColoringFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return readColoring(buf.str());
}

}  // namespace bgr
