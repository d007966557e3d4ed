#include "bgr/json_io.hpp"

namespace bgr {

void to_json(Json& j, const ColoredBigraph& g) {
  Json rows = Json::array();
  for (int u = 0; u < g.rows(); ++u) {
    Json row = Json::array();
    for (int v = 0; v < g.cols(); ++v) row.push_back(static_cast<int>(g(u, v)));
    rows.push_back(std::move(row));
  }
  j = Json{{"a", g.rows()}, {"b", g.cols()}, {"k", g.k()}, {"colors", std::move(rows)}};
}

ColoredBigraph coloringFromJson(const Json& j) {
  try {
    const int a = j.at("a").get<int>(), b = j.at("b").get<int>(), k = j.at("k").get<int>();
    const Json& rows = j.at("colors");
    if (a < 1 || b < 1 || rows.size() != static_cast<std::size_t>(a)) {
      throw InputError("coloring JSON: colors must have a rows");
    }
    if (k < 1 || k > kMaxColors) throw InputError("coloring JSON: k out of range");
    ColorMatrix m(a, b);
    for (int u = 0; u < a; ++u) {
      if (rows[u].size() != static_cast<std::size_t>(b)) {
        throw InputError("coloring JSON: row " + std::to_string(u) + " does not have b entries");
      }
      for (int v = 0; v < b; ++v) {
        const int c = rows[u][v].get<int>();
        if (c < 1 || c > k) throw InputError("coloring JSON: color outside 1..k");
        m(u, v) = static_cast<Color>(c);
      }
    }
    return ColoredBigraph(std::move(m), k);
  } catch (const Json::exception& e) {
    throw InputError(std::string("coloring JSON: ") + e.what());
  }
}

void to_json(Json& j, const Vertex& v) {
  j = Json{{"side", v.side == Side::U ? "U" : "V"}, {"index", v.index}};
}

void to_json(Json& j, const Certificate& c) {
  j = Json{{"kind", c.kind == CertificateKind::Rainbow ? "rainbow" : "monochromatic"}};
  if (c.kind == CertificateKind::Monochromatic) {
    j["color"] = static_cast<int>(c.color);
  } else {
    j["color"] = nullptr;
  }
  Json edges = Json::array();
  for (const auto& [u, v] : c.edges) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  j["vertexMap"] = c.vertexMap;
}

void to_json(Json& j, const StructureWitness& w) {
  std::vector<int> colors(w.colorAssignment.begin(), w.colorAssignment.end());
  j = Json{{"theorem", toString(w.theorem)},
           {"case", std::string(1, w.caseLabel)},
           {"uPartition", w.uPartition},
           {"vPartition", nullptr},
           {"baseColor", nullptr},
           {"colorAssignment", colors},
           {"swapped", w.swapped}};
  if (w.vPartition) j["vPartition"] = *w.vPartition;
  if (w.baseColor) j["baseColor"] = static_cast<int>(*w.baseColor);
}

void to_json(Json& j, const Classification& c) {
  if (const auto* na = std::get_if<NotApplicable>(&c)) {
    j = Json{{"result", "not-applicable"}, {"rainbow", na->rainbow}};
  } else if (const auto* w = std::get_if<StructureWitness>(&c)) {
    j = Json{{"result", "case"}, {"witness", *w}};
  } else {
    j = Json{{"result", "unclassified"}};
  }
}

void to_json(Json& j, const BgrValue& v) {
  j = Json{{"theoremId", v.theoremId},
           {"value", v.value},
           {"hypothesesChecked", v.hypothesesChecked},
           {"alsoMatched", v.alsoMatched}};
}

void to_json(Json& j, const OutOfTheoremRange& r) {
  j = Json{{"outOfTheoremRange", true},
           {"nearestTheorem", r.nearestTheorem},
           {"violatedClauses", r.violatedClauses}};
}

void to_json(Json& j, const TheoremCheck& c) {
  j = Json{{"theoremId", c.id},
           {"pattern", toString(c.pattern)},
           {"applies", c.applies},
           {"satisfied", c.satisfied},
           {"violated", c.violated}};
  if (c.holds()) j["value"] = c.value;
}

void to_json(Json& j, const BipartitionStats& s) {
  j = Json{{"s", s.s}, {"t", s.t}, {"sStar", s.sStar}, {"tStar", s.tStar}};
}

void to_json(Json& j, const LiBounds& b) {
  j = Json{{"lower", b.lower}, {"upper", b.upper}, {"exact", nullptr}};
  if (b.exact) j["exact"] = *b.exact;
}

void to_json(Json& j, const EnumerationStats& s) {
  j = Json{{"nodes", s.nodes},
           {"leaves", s.leaves},
           {"visited", s.visited},
           {"tasks", s.tasks},
           {"budgetExceeded", s.budgetExceeded}};
}

void to_json(Json& j, const AvoidanceResult& r) {
  j = Json{{"status", toString(r.status)}, {"witness", nullptr}, {"statistics", r.stats}};
  if (r.witness) j["witness"] = *r.witness;
}

void to_json(Json& j, const CheckOutcome& c) {
  j = Json{{"name", c.name},
           {"answer", toString(c.answer)},
           {"method", c.method},
           {"statistics", c.statistics},
           {"counterexample", nullptr},
           {"certificates", c.certificates},
           {"detail", c.detail}};
  if (c.counterexample) j["counterexample"] = *c.counterexample;
}

Json reportToJson(const VerificationReport& r, bool includeWallTime) {
  Json j{{"question", r.question},
         {"answer", toString(r.answer)},
         {"method", r.method},
         {"checks", r.checks},
         {"statistics", r.statistics},
         {"counterexample", nullptr},
         {"certificates", r.certificates},
         {"seed", nullptr},
         {"notes", r.notes}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (r.seed) j["seed"] = *r.seed;
  if (includeWallTime) j["wallSeconds"] = r.wallSeconds;
  return j;
}

}  // namespace bgr
