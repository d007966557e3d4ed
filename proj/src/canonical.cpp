#include "bgr/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace bgr {

namespace {

// Search state after some rows are placed: the columns are split into an
// ordered list of cells (columns identical on the placed rows) and every color
// seen so far carries its first-occurrence label.
struct State {
  std::uint32_t usedRows = 0;
  std::vector<std::vector<int>> cells;
  std::array<Color, kMaxColors + 1> label{};
  int nextLabel = 1;

  std::vector<std::uint8_t> key() const {
    std::vector<std::uint8_t> k;
    for (int s = 0; s < 4; ++s) k.push_back(static_cast<std::uint8_t>(usedRows >> (8 * s)));
    for (const auto& cell : cells) {
      k.push_back(0xff);
      for (int c : cell) k.push_back(static_cast<std::uint8_t>(c));
    }
    k.push_back(0xfe);
    k.insert(k.end(), label.begin(), label.end());
    return k;
  }
};

class RowExpander {
 public:
  RowExpander(const ColorMatrix& m, int row) : m_(m), row_(row) {}

  // Every minimal arrangement of `row` under state s (one per tie choice).
  template <class Emit>
  void expand(const State& s, Emit&& emit) {
    State next = s;
    next.usedRows |= 1u << row_;
    next.cells.clear();
    std::vector<Color> text;
    cell(s, 0, next, text, emit);
  }

 private:
  template <class Emit>
  void cell(const State& s, std::size_t ci, State& next, std::vector<Color>& text, Emit& emit) {
    if (ci == s.cells.size()) {
      emit(text, next);
      return;
    }
    const std::vector<int>& cols = s.cells[ci];
    std::map<Color, std::vector<int>> byColor;
    for (int c : cols) byColor[m_(row_, c)].push_back(c);
    std::vector<std::pair<Color, const std::vector<int>*>> known;
    std::vector<std::pair<Color, const std::vector<int>*>> fresh;
    for (const auto& [color, group] : byColor) {
      (next.label[color] ? known : fresh).emplace_back(color, &group);
    }
    std::sort(known.begin(), known.end(), [&](const auto& x, const auto& y) {
      return next.label[x.first] < next.label[y.first];
    });
    // more frequent new colors first; equal counts are tried in every order
    std::stable_sort(fresh.begin(), fresh.end(), [](const auto& x, const auto& y) {
      return x.second->size() > y.second->size();
    });
    const std::size_t textMark = text.size(), cellMark = next.cells.size();
    const int labelMark = next.nextLabel;
    auto finish = [&] {
      for (const auto& [color, group] : known) {
        text.insert(text.end(), group->size(), next.label[color]);
        next.cells.push_back(*group);
      }
      for (const auto& [color, group] : fresh) {
        next.label[color] = static_cast<Color>(next.nextLabel++);
        text.insert(text.end(), group->size(), next.label[color]);
        next.cells.push_back(*group);
      }
      cell(s, ci + 1, next, text, emit);
      for (const auto& [color, group] : fresh) next.label[color] = 0;
      next.nextLabel = labelMark;
      text.resize(textMark);
      next.cells.resize(cellMark);
    };
    permuteTies(fresh, 0, finish);
  }

  template <class F>
  static void permuteTies(std::vector<std::pair<Color, const std::vector<int>*>>& v,
                          std::size_t from, F& f) {
    if (from >= v.size()) {
      f();
      return;
    }
    std::size_t to = from;
    while (to < v.size() && v[to].second->size() == v[from].second->size()) ++to;
    std::sort(v.begin() + from, v.begin() + to);
    do {
      permuteTies(v, to, f);
    } while (std::next_permutation(v.begin() + from, v.begin() + to));
  }

  const ColorMatrix& m_;
  int row_;
};

std::vector<Color> minimalText(const ColorMatrix& m) {
  const int a = static_cast<int>(m.rows()), b = static_cast<int>(m.cols());
  State start;
  start.cells.emplace_back();
  for (int c = 0; c < b; ++c) start.cells.front().push_back(c);
  std::vector<State> states{start};
  std::vector<Color> result;
  for (int level = 0; level < a; ++level) {
    std::vector<Color> best;
    std::map<std::vector<std::uint8_t>, State> kept;
    for (const State& s : states) {
      for (int row = 0; row < a; ++row) {
        if (s.usedRows >> row & 1u) continue;
        RowExpander(m, row).expand(s, [&](const std::vector<Color>& text, const State& next) {
          if (!best.empty()) {
            if (text > best) return;
            if (text < best) kept.clear();
          }
          best = text;
          kept.emplace(next.key(), next);
        });
      }
    }
    result.insert(result.end(), best.begin(), best.end());
    states.clear();
    for (auto& [key, st] : kept) states.push_back(std::move(st));
  }
  return result;
}

}  // namespace

CanonicalCode canonicalForm(const ColoredBigraph& g) {
  if (g.rows() > kCanonicalMaxSide || g.cols() > kCanonicalMaxSide) {
    throw InputError("canonical form is limited to parts of size <= " +
                     std::to_string(kCanonicalMaxSide));
  }
  std::vector<Color> text = minimalText(g.matrix());
  if (g.square()) {
    const ColorMatrix t = g.matrix().transpose();
    text = std::min(text, minimalText(t));
  }
  CanonicalCode code;
  code.bytes = {static_cast<std::uint8_t>(g.rows()), static_cast<std::uint8_t>(g.cols()),
                static_cast<std::uint8_t>(g.k())};
  code.bytes.insert(code.bytes.end(), text.begin(), text.end());
  return code;
}

ColoredBigraph decode(const CanonicalCode& code) {
  if (code.bytes.size() < 3) throw InputError("truncated canonical code");
  const int a = code.bytes[0], b = code.bytes[1], k = code.bytes[2];
  if (code.bytes.size() != static_cast<std::size_t>(3 + a * b)) {
    throw InputError("canonical code length mismatch");
  }
  ColorMatrix m(a, b);
  for (int i = 0; i < a * b; ++i) m.data()[i] = code.bytes[3 + i];
  return ColoredBigraph(std::move(m), k);
}

ColoredBigraph canonicalRepresentative(const ColoredBigraph& g) {
  return decode(canonicalForm(g));
}

std::string toHex(const CanonicalCode& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (std::uint8_t byte : code.bytes) {
    out += digits[byte >> 4];
    out += digits[byte & 15];
  }
  return out;
}

}  // namespace bgr
