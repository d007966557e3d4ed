#include "bgr/catalog.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <stdexcept>

#include "bgr/colored_bigraph.hpp"

namespace bgr {

namespace {

struct Shape {
  std::vector<int> paths;   // vertex counts
  std::vector<int> cycles;  // half lengths m (C_{2m})
  std::vector<Star> stars;
  std::vector<Biclique> bicliques;
};

Shape shapeOf(const TargetGraph& h) {
  Shape s;
  for (const Component& c : h.components()) {
    if (const auto* p = std::get_if<PathV>(&c)) s.paths.push_back(p->vertices);
    else if (const auto* e = std::get_if<EvenCycle>(&c)) s.cycles.push_back(e->vertices / 2);
    else if (const auto* st = std::get_if<Star>(&c)) s.stars.push_back(*st);
    else s.bicliques.push_back(std::get<Biclique>(c));
  }
  return s;
}

std::string str(long long x) { return std::to_string(x); }

class Clauses {
 public:
  explicit Clauses(TheoremCheck& out) : out_(out) {}
  void require(bool ok, const std::string& clause, const std::string& actual = {}) {
    if (ok) {
      out_.satisfied.push_back(clause);
    } else {
      out_.violated.push_back(actual.empty() ? clause : clause + " (" + actual + ")");
    }
  }

 private:
  TheoremCheck& out_;
};

// value = k * unit - k + 1; the construction uses blocks of unit - 1
void blockValue(TheoremCheck& out, int k, long long unit) {
  out.value = k * unit - k + 1;
  out.blockSize = unit - 1;
}

void t31(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  const bool onlyPC = s.stars.empty() && s.bicliques.empty();
  const std::size_t count = s.paths.size() + s.cycles.size();
  if (!onlyPC || count != 2) {
    cl.require(false, "H = P_r + P_{r+l}, C_{2l1} + C_{2l2} or P_m + C_{2l}");
    return;
  }
  out.applies = true;
  cl.require(k >= 3, "k >= 3", "k = " + str(k));
  long long unit = 0;
  if (s.paths.size() == 2) {
    const int r = std::min(s.paths[0], s.paths[1]);
    const int l = std::max(s.paths[0], s.paths[1]) - r;
    cl.require(r >= 2, "r >= 2", "r = " + str(r));
    cl.require(l >= 2, "l >= 2", "l = " + str(l));
    unit = r / 2 + (r + l) / 2;
  } else if (s.cycles.size() == 2) {
    cl.require(s.cycles[0] >= 2 && s.cycles[1] >= 2, "l1, l2 >= 2");
    unit = s.cycles[0] + s.cycles[1];
  } else {
    const int m = s.paths[0], l = s.cycles[0];
    cl.require(m >= 2, "m >= 2", "m = " + str(m));
    cl.require(l >= 2, "l >= 2", "l = " + str(l));
    unit = l + m / 2;
  }
  blockValue(out, k, unit);
}

void t32(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  const bool allPaths = !s.paths.empty() && s.cycles.empty() && s.stars.empty() &&
                        s.bicliques.empty();
  if (!allPaths || std::adjacent_find(s.paths.begin(), s.paths.end(),
                                      std::not_equal_to<>()) != s.paths.end()) {
    cl.require(false, "H = r P_l (r >= 1 identical paths)");
    return;
  }
  out.applies = true;
  const int l = s.paths[0];
  const long long r = static_cast<long long>(s.paths.size());
  cl.require(k >= 4, "k >= 4", "k = " + str(k));
  cl.require(l >= 10, "l >= 10", "l = " + str(l));
  blockValue(out, k, r * (l / 2));
}

void t33(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  const bool allPaths = !s.paths.empty() && s.cycles.empty() && s.stars.empty() &&
                        s.bicliques.empty();
  if (!allPaths) {
    cl.require(false, "H = union of paths P_{l_i}");
    return;
  }
  out.applies = true;
  cl.require(k >= 5, "k >= 5", "k = " + str(k));
  const int shortest = *std::min_element(s.paths.begin(), s.paths.end());
  cl.require(shortest >= 10, "l_i >= 10", "min l_i = " + str(shortest));
  long long unit = 0;
  for (int l : s.paths) unit += l / 2;
  blockValue(out, k, unit);
}

void t34(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  if (!s.stars.empty() || !s.bicliques.empty() || (s.paths.empty() && s.cycles.empty())) {
    cl.require(false, "H = union of paths P_{l_i} and even cycles C_{2m_j}, r + s >= 1");
    return;
  }
  out.applies = true;
  long long need = 2, unit = 0;
  for (int l : s.paths) {
    need += l / 2 + 1;
    unit += l / 2;
  }
  for (int m : s.cycles) {
    need += m;
    unit += m;
  }
  cl.require(true, "l_i >= 2, m_j >= 2");
  cl.require(k >= need, "k >= 2 + sum(floor(l_i/2) + 1) + sum(m_j) = " + str(need),
             "k = " + str(k));
  blockValue(out, k, unit);
}

void c31(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  if (s.cycles.empty() || !s.paths.empty() || !s.stars.empty() || !s.bicliques.empty()) {
    cl.require(false, "H = union of even cycles C_{2l_i}");
    return;
  }
  out.applies = true;
  long long sum = 0;
  for (int l : s.cycles) sum += l;
  cl.require(true, "l_i >= 2");
  cl.require(k >= 2 + sum, "k >= 2 + sum(l_i) = " + str(2 + sum), "k = " + str(k));
  blockValue(out, k, sum);
}

void t36(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  if (s.bicliques.size() != 1 || !s.paths.empty() || !s.cycles.empty() || !s.stars.empty() ||
      s.bicliques[0].s != s.bicliques[0].t) {
    cl.require(false, "H = K_{t,t}");
    return;
  }
  out.applies = true;
  const int t = s.bicliques[0].t;
  cl.require(t >= 3, "t >= 3", "t = " + str(t));
  cl.require(k >= t + 2, "k >= t + 2", "k = " + str(k) + ", t = " + str(t));
  blockValue(out, k, t);
}

void t41(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  int t = 0;
  if (s.stars.size() == 1 && s.bicliques.empty()) t = s.stars[0].leaves;
  if (s.bicliques.size() == 1 && s.stars.empty() && s.bicliques[0].s == 1) t = s.bicliques[0].t;
  if (!t || !s.paths.empty() || !s.cycles.empty()) {
    cl.require(false, "H = K_{1,t}");
    return;
  }
  out.applies = true;
  cl.require(t >= 5, "t >= 5", "t = " + str(t));
  cl.require(t <= k && k <= t + 1, "t <= k <= t + 1", "k = " + str(k) + ", t = " + str(t));
  out.value = t + 1;
  out.blockSize = t;
}

void t42(TheoremCheck& out, Clauses& cl, const Shape& s, int k) {
  if (s.bicliques.size() != 1 || !s.paths.empty() || !s.cycles.empty() || !s.stars.empty()) {
    cl.require(false, "H = K_{s,t}");
    return;
  }
  out.applies = true;
  const int bs = s.bicliques[0].s, bt = s.bicliques[0].t;
  cl.require(2 <= bs && bs < bt, "2 <= s < t", "s = " + str(bs) + ", t = " + str(bt));
  cl.require(bt >= 5, "t >= 5", "t = " + str(bt));
  const int lo = bt + bs - bt / 2;
  cl.require(lo <= k && k <= bt + bs, "t + s - floor(t/2) <= k <= t + s",
             "k = " + str(k) + ", range " + str(lo) + ".." + str(bt + bs));
  out.value = bt + bs;
  out.blockSize = bt + bs - 1;
}

}  // namespace

BipartitionStats bipartitionStats(const TargetGraph& h) {
  if (h.empty()) throw InputError("target graph must be nonempty");
  const int total = h.vertexCount();
  std::vector<char> reachable(total + 1, 0);
  reachable[0] = 1;
  for (const Component& c : h.components()) {
    const Footprint f = footprint(c);
    std::vector<char> next(total + 1, 0);
    for (int x = 0; x <= total; ++x) {
      if (!reachable[x]) continue;
      next[x + f.x] = 1;
      next[x + f.y] = 1;
    }
    reachable.swap(next);
  }
  BipartitionStats st{total, 0, 0, total};
  for (int x = 0; x <= total; ++x) {
    if (!reachable[x]) continue;
    const int small = std::min(x, total - x), large = total - small;
    st.s = std::min(st.s, small);
    st.sStar = std::max(st.sStar, small);
    st.t = std::max(st.t, large);
    st.tStar = std::min(st.tStar, large);
  }
  return st;
}

LiBounds liBounds(const TargetGraph& h, int k) {
  const BipartitionStats st = bipartitionStats(h);
  if (k < 3) throw HypothesisError("k >= 3 (k = " + std::to_string(k) + ")");
  if (st.s < 2) throw HypothesisError("s(H) >= 2 (s(H) = " + std::to_string(st.s) + ")");
  const long long kk = k;
  LiBounds b;
  b.lower = std::max<long long>(st.tStar, (st.s - 1) * kk + 1);
  b.upper = std::min(std::max<long long>(st.t, (st.s - 1) * kk + 1),
                     std::max<long long>(st.tStar, (st.sStar - 1) * kk + 1));
  if (st.s == st.sStar) {
    b.exact = std::max<long long>(st.t, (st.s - 1) * kk + 1);
  } else if (b.lower == b.upper) {
    b.exact = b.lower;
  }
  return b;
}

const std::vector<std::string>& theoremIds() {
  static const std::vector<std::string> ids{"T31", "T32", "T33", "T34", "C31", "T36", "T41", "T42"};
  return ids;
}

RainbowPattern theoremPattern(const std::string& id) {
  if (id == "T31") return RainbowPattern::P4;
  if (id == "T41" || id == "T42") return RainbowPattern::K13;
  if (id == "T32" || id == "T33" || id == "T34" || id == "C31" || id == "T36") {
    return RainbowPattern::P5;
  }
  throw InputError("unknown theorem id '" + id + "'");
}

TheoremCheck checkTheorem(const std::string& id, RainbowPattern p, const TargetGraph& h, int k) {
  TheoremCheck out;
  out.id = id;
  out.pattern = theoremPattern(id);
  Clauses cl(out);
  if (p != out.pattern) {
    cl.require(false, "rainbow pattern " + toString(out.pattern), "got " + toString(p));
    return out;
  }
  if (h.empty()) {
    cl.require(false, "nonempty target");
    return out;
  }
  const Shape s = shapeOf(h);
  if (id == "T31") t31(out, cl, s, k);
  else if (id == "T32") t32(out, cl, s, k);
  else if (id == "T33") t33(out, cl, s, k);
  else if (id == "T34") t34(out, cl, s, k);
  else if (id == "C31") c31(out, cl, s, k);
  else if (id == "T36") t36(out, cl, s, k);
  else if (id == "T41") t41(out, cl, s, k);
  else t42(out, cl, s, k);
  if (out.applies) {
    cl.require(k >= 1, "k >= 1", "k = " + str(k));
    cl.require(out.value >= 1 && out.value * out.value >= k, "value^2 >= k",
               "value = " + str(out.value) + ", k = " + str(k));
  }
  return out;
}

BgrResult bgrValue(RainbowPattern p, const TargetGraph& h, int k) {
  std::vector<TheoremCheck> checks;
  for (const std::string& id : theoremIds()) checks.push_back(checkTheorem(id, p, h, k));
  std::optional<BgrValue> result;
  for (const TheoremCheck& c : checks) {
    if (!c.holds()) continue;
    if (!result) {
      result = BgrValue{c.id, c.value, c.satisfied, {}};
    } else if (result->value != c.value) {
      throw std::logic_error(result->theoremId + " and " + c.id + " disagree on bgr_" +
                             std::to_string(k) + "(" + toString(p) + " : " + toString(h) +
                             "): " + std::to_string(result->value) + " vs " +
                             std::to_string(c.value));
    } else {
      result->alsoMatched.push_back(c.id);
    }
  }
  if (result) return *result;
  // nearest: same pattern and shape first, then fewest violated clauses
  const TheoremCheck* nearest = nullptr;
  auto rank = [&](const TheoremCheck& c) {
    return std::tuple(c.pattern != p, !c.applies, c.violated.size());
  };
  for (const TheoremCheck& c : checks) {
    if (!nearest || rank(c) < rank(*nearest)) nearest = &c;
  }
  return OutOfTheoremRange{nearest->id, nearest->violated};
}

long long br2Path(int n) {
  if (n < 3) throw HypothesisError("n >= 3 (n = " + std::to_string(n) + ")");
  return n % 2 == 0 ? n - 1 : n;
}

}  // namespace bgr
