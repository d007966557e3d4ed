#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "bgr/canonical.hpp"
#include "bgr/catalog.hpp"
#include "bgr/constructions.hpp"
#include "bgr/json_io.hpp"
#include "bgr/search.hpp"
#include "target_parser.hpp"

namespace bgr::cli {

namespace {

struct Common {
  bool json = false;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1'000'000'000;
  int jobs = 0;
  bool wallTime = false;
};

void addCommon(CLI::App* app, Common& c, bool searchFlags) {
  app->add_flag("--json", c.json, "JSON on standard output");
  if (!searchFlags) return;
  app->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app->add_option("--budget", c.budget, "search node budget")->capture_default_str();
  app->add_option("--jobs", c.jobs, "worker threads (0 = all cores)")->capture_default_str();
  app->add_flag("--wall-time", c.wallTime, "include wall-clock time in reports");
}

ColoredBigraph loadColoring(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw InputError(path + ": " + e.what());
    }
    return coloringFromJson(j);
  }
  return readColoring(text);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

std::string joined(const std::vector<std::string>& items, const char* sep = "; ") {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

std::string certificateText(const Certificate& c) {
  std::string out = c.kind == CertificateKind::Rainbow
                        ? "rainbow"
                        : "color " + std::to_string(static_cast<int>(c.color));
  out += ", edges";
  for (const auto& [u, v] : c.edges) {
    out += " u" + std::to_string(u) + "-v" + std::to_string(v);
  }
  return out;
}

int exitFor(Answer a) {
  switch (a) {
    case Answer::Holds: return kYes;
    case Answer::Counterexample: return kNo;
    case Answer::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

int exitFor(AvoidanceStatus s) {
  switch (s) {
    case AvoidanceStatus::Found: return kYes;
    case AvoidanceStatus::Absent: return kNo;
    case AvoidanceStatus::Inconclusive: return kInconclusive;
  }
  return kUsage;
}

void printReport(std::ostream& out, const VerificationReport& r, bool wallTime) {
  out << "question: " << r.question << "\n";
  out << "answer:   " << toString(r.answer) << "\n";
  out << "method:   " << r.method << "\n";
  if (!r.checks.empty()) {
    out << std::left << std::setw(34) << "check" << std::setw(16) << "answer"
        << std::setw(19) << "method" << "detail\n";
    for (const CheckOutcome& c : r.checks) {
      out << std::setw(34) << c.name << std::setw(16) << toString(c.answer) << std::setw(19)
          << c.method << c.detail << "\n";
    }
  }
  for (const auto& [key, value] : r.statistics) out << "  " << key << " = " << value << "\n";
  if (r.seed) out << "seed:     " << *r.seed << "\n";
  if (r.counterexample) out << "counterexample:\n" << writeColoring(*r.counterexample);
  for (const Certificate& c : r.certificates) out << "certificate: " << certificateText(c) << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  if (wallTime) out << "wall time: " << r.wallSeconds << " s\n";
}

int reportOut(std::ostream& out, const VerificationReport& r, const Common& c) {
  if (c.json) {
    emit(out, reportToJson(r, c.wallTime));
  } else {
    printReport(out, r, c.wallTime);
  }
  return exitFor(r.answer);
}

SearchOptions searchOptions(const Common& c) {
  SearchOptions o;
  o.nodeBudget = c.budget;
  o.jobs = c.jobs;
  return o;
}

int avoidanceOut(std::ostream& out, const std::string& question, const AvoidanceResult& r,
                 const Common& c, Json extra = Json::object()) {
  if (c.json) {
    Json j{{"question", question}};
    const Json body = r;
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    emit(out, j);
  } else {
    out << question << ": " << toString(r.status) << "\n";
    out << "  nodes = " << r.stats.nodes << ", leaves = " << r.stats.leaves
        << ", tasks = " << r.stats.tasks << "\n";
    for (auto it = extra.begin(); it != extra.end(); ++it) {
      out << "  " << it.key() << " = " << it.value().dump() << "\n";
    }
    if (r.witness) out << writeColoring(*r.witness);
  }
  return exitFor(r.status);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact edge-colorings of complete bipartite graphs: rainbow and monochromatic "
               "patterns, structure cases, extremal constructions and bipartite "
               "Gallai-Ramsey values",
               "bgrlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  Common common;
  std::string input, target, pattern, theorem, mono, rainbow;
  int k = 0, n = 0, kMax = 0;
  std::vector<int> nValues;
  bool noPrune = false, randomized = false, exact = false;
  std::uint64_t samples = 10'000;
  long long expected = 0;

  auto* detect = app.add_subcommand("detect", "find a rainbow pattern and/or a monochromatic target");
  detect->add_option("--input", input, "coloring file (.cbg or JSON, '-' for stdin)")->required();
  detect->add_option("--rainbow", rainbow, "rainbow pattern: P4, P5 or K13");
  detect->add_option("--mono", mono, "monochromatic target, e.g. P4+C6");
  addCommon(detect, common, false);

  auto* classifyCmd = app.add_subcommand("classify", "classify a rainbow-free coloring");
  classifyCmd->add_option("--theorem", theorem, "T13, T14 or T21")->required();
  classifyCmd->add_option("--input", input, "coloring file")->required();
  addCommon(classifyCmd, common, false);

  auto* construct = app.add_subcommand("construct", "extremal lower-bound coloring (.cbg)");
  construct->add_option("--theorem", theorem, "T31 T32 T33 T34 C31 T36 T41 T42")->required();
  construct->add_option("--target", target, "target graph")->required();
  construct->add_option("--k", k, "number of colors")->required();
  addCommon(construct, common, false);

  auto* formula = app.add_subcommand("formula", "closed-form bipartite Gallai-Ramsey value");
  formula->add_option("--pattern", pattern, "P4, P5 or K13")->required();
  formula->add_option("--target", target, "target graph")->required();
  formula->add_option("--k", k, "number of colors")->required();
  addCommon(formula, common, false);

  auto* stats = app.add_subcommand("stats", "statistics of a target graph or a coloring");
  auto* statsTarget = stats->add_option("--target", target, "target graph");
  auto* statsInput = stats->add_option("--input", input, "coloring file");
  stats->add_option("--k", k, "colors, for the P4 bounds of a target");
  statsTarget->excludes(statsInput);
  addCommon(stats, common, false);

  auto* search = app.add_subcommand("search", "exhaustive searches");
  search->require_subcommand(1);
  auto* br2 = search->add_subcommand("br2", "2-colorings of K_{n,n} without a monochromatic target");
  br2->add_option("--target", target, "target graph")->required();
  br2->add_option("--n", n, "part size")->required();
  addCommon(br2, common, true);
  auto* avoid = search->add_subcommand("avoid", "coloring of K_{n,n} avoiding rainbow and mono");
  avoid->add_option("--n", n, "part size")->required();
  avoid->add_option("--k", k, "number of colors")->required();
  avoid->add_option("--rainbow", rainbow, "forbidden rainbow pattern");
  avoid->add_option("--mono", mono, "forbidden monochromatic target");
  avoid->add_flag("--exact", exact, "require all k colors");
  addCommon(avoid, common, true);
  auto* orbits = search->add_subcommand("orbits", "count colorings of K_{n,n} up to symmetry");
  orbits->add_option("--n", n, "part size")->required();
  orbits->add_option("--k", k, "number of colors")->required();
  orbits->add_flag("--exact", exact, "count only colorings using all k colors");
  addCommon(orbits, common, true);

  auto* verify = app.add_subcommand("verify", "verification reports");
  verify->require_subcommand(1);
  auto* vStructure = verify->add_subcommand("structure", "check a structure theorem exhaustively");
  vStructure->add_option("--theorem", theorem, "T13, T14 or T21")->required();
  vStructure->add_option("--n", n, "part size")->required();
  vStructure->add_option("--kmax", kMax, "largest number of colors")->required();
  vStructure->add_flag("--no-prune", noPrune, "enumerate rainbow branches as well");
  addCommon(vStructure, common, true);
  auto* vBgr = verify->add_subcommand("bgr", "check one bipartite Gallai-Ramsey value");
  vBgr->add_option("--pattern", pattern, "P4, P5 or K13")->required();
  vBgr->add_option("--target", target, "target graph")->required();
  vBgr->add_option("--k", k, "number of colors")->required();
  vBgr->add_option("--N", nValues, "orders checked for the upper bound (default v, v+1)");
  vBgr->add_flag("--randomized", randomized, "skip the exhaustive search, sample only");
  vBgr->add_option("--samples", samples, "samples per structured shape")->capture_default_str();
  auto* expectedOpt = vBgr->add_option("--expected", expected, "value the catalog must return");
  addCommon(vBgr, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "bgrlab: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*detect) {
      if (rainbow.empty() && mono.empty()) throw InputError("give --rainbow and/or --mono");
      const ColoredBigraph g = loadColoring(input);
      Json j{{"coloring", Json{{"a", g.rows()}, {"b", g.cols()}, {"k", g.k()}}}};
      bool any = false;
      if (!rainbow.empty()) {
        const RainbowPattern p = parseRainbowPattern(rainbow);
        const auto c = findRainbow(g, p);
        any |= c.has_value();
        j["rainbow"] = Json{{"pattern", toString(p)}, {"found", c.has_value()}, {"certificate", nullptr}};
        if (c) j["rainbow"]["certificate"] = *c;
        if (!common.json) {
          out << "rainbow " << toString(p) << ": "
              << (c ? "found (" + certificateText(*c) + ")" : "absent") << "\n";
        }
      }
      if (!mono.empty()) {
        const TargetGraph h = parseTarget(mono);
        const auto c = findMonochromatic(g, h);
        any |= c.has_value();
        j["monochromatic"] =
            Json{{"target", toString(h)}, {"found", c.has_value()}, {"certificate", nullptr}};
        if (c) j["monochromatic"]["certificate"] = *c;
        if (!common.json) {
          out << "monochromatic " << toString(h) << ": "
              << (c ? "found (" + certificateText(*c) + ")" : "absent") << "\n";
        }
      }
      if (common.json) emit(out, j);
      return any ? kYes : kNo;
    }

    if (*classifyCmd) {
      const Theorem t = parseTheorem(theorem);
      const ColoredBigraph g = loadColoring(input);
      const Classification c = classify(t, g);
      const auto* w = std::get_if<StructureWitness>(&c);
      const bool verified = w && verifyWitness(g, *w);
      if (common.json) {
        emit(out, Json{{"theorem", toString(t)}, {"classification", c}, {"verified", verified}});
      } else if (w) {
        out << toString(t) << " case " << static_cast<char>(std::toupper(w->caseLabel))
            << (verified ? " (witness verified)" : " (witness REJECTED)") << "\n";
        out << Json(*w).dump() << "\n";
      } else if (const auto* na = std::get_if<NotApplicable>(&c)) {
        out << "not applicable: rainbow " << toString(forbiddenPattern(t)) << " ("
            << certificateText(na->rainbow) << ")\n";
      } else {
        out << "unclassified: rainbow-free but no case applies\n";
      }
      return verified ? kYes : kNo;
    }

    if (*construct) {
      const TargetGraph h = parseTarget(target);
      const ColoredBigraph g = lowerBoundFor(theorem, h, k);
      if (common.json) {
        emit(out, Json{{"theoremId", theorem}, {"target", toString(h)}, {"coloring", g}});
      } else {
        out << "# " << theorem << " lower-bound coloring for " << toString(h) << ", k = " << k
            << "\n"
            << writeColoring(g);
      }
      return kYes;
    }

    if (*formula) {
      const RainbowPattern p = parseRainbowPattern(pattern);
      const TargetGraph h = parseTarget(target);
      const BgrResult r = bgrValue(p, h, k);
      if (const auto* v = std::get_if<BgrValue>(&r)) {
        if (common.json) {
          emit(out, *v);
        } else {
          out << "bgr_" << k << "(" << toString(p) << " : " << toString(h) << ") = " << v->value
              << " by " << v->theoremId << "\n";
          for (const std::string& c : v->hypothesesChecked) out << "  checked: " << c << "\n";
          if (!v->alsoMatched.empty()) out << "  also matches: " << joined(v->alsoMatched, ", ") << "\n";
        }
        return kYes;
      }
      const auto& o = std::get<OutOfTheoremRange>(r);
      if (common.json) {
        emit(out, o);
      } else {
        out << "out of theorem range (nearest " << o.nearestTheorem << ")\n";
        for (const std::string& c : o.violatedClauses) out << "  violated: " << c << "\n";
      }
      return kNo;
    }

    if (*stats) {
      if (!target.empty()) {
        const TargetGraph h = parseTarget(target);
        const BipartitionStats s = bipartitionStats(h);
        Json j{{"target", toString(h)}, {"vertexCount", h.vertexCount()}, {"bipartition", s},
               {"liBounds", nullptr}};
        if (k > 0) j["liBounds"] = liBounds(h, k);
        if (common.json) {
          emit(out, j);
        } else {
          out << toString(h) << ": s = " << s.s << ", t = " << s.t << ", s* = " << s.sStar
              << ", t* = " << s.tStar << "\n";
          if (k > 0) {
            const LiBounds b = liBounds(h, k);
            out << "  bgr_" << k << "(P4 : H) in [" << b.lower << ", " << b.upper << "]";
            if (b.exact) out << ", exact " << *b.exact;
            out << "\n";
          }
        }
        return kYes;
      }
      if (input.empty()) throw InputError("give --target or --input");
      const ColoredBigraph g = loadColoring(input);
      const ColorDegreeRange d = minMaxColorDegree(g);
      std::vector<int> used;
      for (Color c : usedColors(g)) used.push_back(c);
      Json j{{"a", g.rows()},
             {"b", g.cols()},
             {"k", g.k()},
             {"usedColors", used},
             {"exact", isExact(g)},
             {"minColorDegree", d.minDegree},
             {"maxColorDegree", d.maxDegree},
             {"canonical", nullptr}};
      if (g.rows() <= kCanonicalMaxSide && g.cols() <= kCanonicalMaxSide) {
        j["canonical"] = toHex(canonicalForm(g));
      }
      if (common.json) {
        emit(out, j);
      } else {
        for (auto it = j.begin(); it != j.end(); ++it) out << it.key() << ": " << it.value().dump() << "\n";
      }
      return kYes;
    }

    if (*br2) {
      const TargetGraph h = parseTarget(target);
      const AvoidanceResult r = existsAvoiding(n, 2, std::nullopt, h, true, searchOptions(common));
      Json extra = Json::object();
      if (h.components().size() == 1 && std::holds_alternative<PathV>(h.components().front())) {
        const int m = std::get<PathV>(h.components().front()).vertices;
        if (m >= 3) extra["br2"] = br2Path(m);
      }
      return avoidanceOut(out, "exact 2-coloring of K" + std::to_string(n) + "," +
                                   std::to_string(n) + " without monochromatic " + toString(h),
                          r, common, extra);
    }

    if (*avoid) {
      std::optional<RainbowPattern> p;
      std::optional<TargetGraph> h;
      if (!rainbow.empty()) p = parseRainbowPattern(rainbow);
      if (!mono.empty()) h = parseTarget(mono);
      std::string q = std::string(exact ? "exact " : "") + std::to_string(k) + "-coloring of K" +
                      std::to_string(n) + "," + std::to_string(n);
      if (p) q += " without rainbow " + toString(*p);
      if (h) q += std::string(p ? " and" : "") + " without monochromatic " + toString(*h);
      const AvoidanceResult r = existsAvoiding(n, k, p, h, exact, searchOptions(common));
      return avoidanceOut(out, q, r, common);
    }

    if (*orbits) {
      SearchOptions o = searchOptions(common);
      o.orbitFilter = true;
      o.requireExact = exact;
      const EnumerationStats s = enumerateColorings(
          n, k, nullptr, [](const ColoredBigraph&, const VisitContext&) { return false; }, o);
      if (common.json) {
        emit(out, Json{{"n", n}, {"k", k}, {"exact", exact}, {"orbits", s.visited},
                       {"statistics", s}});
      } else {
        out << "orbits of " << (exact ? "exact " : "") << k << "-colorings of K" << n << "," << n
            << ": " << s.visited << (s.budgetExceeded ? " (budget exhausted)" : "") << "\n";
      }
      return s.budgetExceeded ? kInconclusive : kYes;
    }

    if (*vStructure) {
      StructureCheckOptions o;
      o.prune = !noPrune;
      o.nodeBudget = common.budget;
      o.jobs = common.jobs;
      return reportOut(out, checkStructureTheorem(parseTheorem(theorem), n, kMax, o), common);
    }

    if (*vBgr) {
      BgrCheckOptions o;
      o.exhaustive = !randomized;
      o.samplesPerShape = samples;
      o.seed = common.seed;
      o.nodeBudget = common.budget;
      o.jobs = common.jobs;
      if (*expectedOpt) o.expectedValue = expected;
      return reportOut(out,
                       verifyBgrPoint(parseRainbowPattern(pattern), parseTarget(target), k,
                                      nValues, o),
                       common);
    }
  } catch (const InputError& e) {
    err << "bgrlab: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    err << "bgrlab: internal inconsistency: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bgr::cli
