#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "outvcd/bounds.hpp"
#include "outvcd/corpus.hpp"
#include "outvcd/generators.hpp"
#include "outvcd/homology.hpp"
#include "outvcd/local.hpp"
#include "outvcd/morse.hpp"
#include "outvcd/psigma.hpp"
#include "outvcd/report_json.hpp"

namespace outvcd::cli {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string node_set(const DefiningGraph& g, const std::vector<NodeId>& nodes) {
  std::vector<std::string> names;
  for (NodeId v : nodes) names.push_back(g.name(v));
  std::sort(names.begin(), names.end());
  return "{" + join(names, ",") + "}";
}

std::string theorem_line(const TheoremTag& t, const GraphCounts& c) {
  const long e = static_cast<long>(c.edges), l = static_cast<long>(c.leaves), p = static_cast<long>(c.pieces);
  std::ostringstream s;
  switch (t.kind) {
    case TheoremTag::Kind::Tree:
      s << "Tree: vcd = e + 2l - 3 = " << e + 2 * l - 3;
      break;
    case TheoremTag::Kind::NoShortCycles:
      s << "NoShortCycles: pi + 2l - 1 = " << p + 2 * l - 1 << " <= vcd <= pi + 2l - 1 - 2chi = "
        << p + 2 * l - 1 - 2 * c.euler;
      break;
    case TheoremTag::Kind::Cycle:
      s << "Cycle(" << t.cycle_length << "): vcd = e - k + 2l = " << e - static_cast<long>(t.cycle_length) + 2 * l;
      break;
  }
  return s.str();
}

void print_report(std::ostream& out, const VcdReport& r) {
  const DefiningGraph& g = r.analysis.graph;
  const auto& c = r.counts;
  out << "graph: " << c.nodes << " nodes, " << c.edges << " edges, " << c.leaves << " leaves, " << c.pieces
      << " pieces, chi = " << c.euler << "\n";
  out << "Gamma_0: " << node_set(g, r.analysis.gamma0.nodes) << ", U = " << node_set(g, r.analysis.gamma0.u) << "\n";
  std::vector<NodeId> hubs;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (r.analysis.pieces.is_hub(v)) hubs.push_back(v);
  out << "hubs: " << node_set(g, hubs) << "\n";
  out << "lower bound: " << r.lower.value << " [" << to_string(r.lower.bound_case) << "]";
  if (r.lower.witness_node) out << " witness " << g.name(*r.lower.witness_node);
  if (r.lower.witness_edge)
    out << " witness " << g.name(r.lower.witness_edge->u) << "-" << g.name(r.lower.witness_edge->v);
  out << "\n";
  out << "upper bound: " << r.upper.value << " [" << to_string(r.upper.bound_case) << "]\n";
  out << "exact vcd: " << (r.exact ? std::to_string(*r.exact) : std::string("unknown")) << "\n";
  out << "kernel rank: " << r.kernel_rank << "\n";
  for (const TheoremTag& t : r.theorems) out << "theorem " << theorem_line(t, c) << "\n";
  for (const std::string& a : r.anomalies) out << "anomaly: " << a << "\n";
}

void print_generators(std::ostream& out, const GeneratorSet& gs) {
  const DefiningGraph& g = gs.group->graph();
  out << "e0: " << g.name(gs.choices.v0) << "-" << g.name(gs.choices.w0) << "\n";
  out << "generators (" << gs.generators.size() << "):\n";
  for (std::size_t i = 0; i < gs.generators.size(); ++i)
    out << "  [" << i << "] " << gs.generators[i].label << "\n";
  std::size_t trivial = 0;
  for (const auto& c : gs.certificates) trivial += c.trivial_in_aut;
  out << "commutators: " << gs.certificates.size() << " pairs, " << trivial << " trivial in Aut, "
      << gs.uncertified_pairs() << " uncertified (bound " << (gs.certificates.empty() ? 0 : gs.certificates[0].bound)
      << ")\n";
  for (const auto& c : gs.certificates)
    if (!c.certified()) out << "  uncertified: [" << c.first << "] [" << c.second << "]\n";
  if (gs.lattice)
    out << "inner lattice rank: " << gs.lattice->rank << (gs.lattice->partial ? " (partial search)" : "") << "\n";
  out << "outer rank: " << gs.outer_rank() << "\n";
}

int cmd_analyze(const std::string& path, bool json, bool witness, const std::string& e0, std::size_t bound,
                std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot read " << path << "\n";
    return kParseError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();

  DefiningGraph g;
  try {
    g = parse_graph(buffer.str());
  } catch (const ParseError& e) {
    err << path << ": " << e.what() << "\n";
    return kParseError;
  }

  GraphAnalysis analysis;
  try {
    analysis = analyze_structure(g);
  } catch (const IneligibleGraph& e) {
    if (json)
      out << to_json(e.report(), g).dump(2) << "\n";
    else
      err << "ineligible graph: " << ineligibility_reason(e.report()) << "\n";
    return kIneligible;
  }

  std::optional<GeneratorSet> gs;
  if (witness) {
    GeneratorChoices choices;
    try {
      if (e0.empty()) {
        choices = default_choices(analysis);
      } else {
        auto comma = e0.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("--e0 expects A,B");
        auto a = g.find(e0.substr(0, comma)), b = g.find(e0.substr(comma + 1));
        if (!a || !b) throw std::invalid_argument("--e0 names an unknown node");
        choices = make_choices(analysis, *a, *b);
      }
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kParseError;
    }
    GeneratorOptions options;
    options.conjugator_bound = bound;
    gs = build_generator_set(analysis, choices, options);
  }

  const VcdReport report = vcd_report(std::move(analysis));
  if (json) {
    Json j = to_json(report);
    if (gs) j["witness"] = to_json(*gs);
    out << j.dump(2) << "\n";
  } else {
    print_report(out, report);
    if (gs) print_generators(out, *gs);
  }
  return kOk;
}

int cmd_psigma(int n, int k, bool json, const std::string& vector, std::ostream& out, std::ostream& err) {
  const PsigmaSpec spec{n, k};
  Json j;
  try {
    j["n"] = n;
    j["k"] = k;
    j["vcd"] = psigma_vcd(n, k);
    j["convention"] = "conjugation by g is x -> g^-1 x g";
    if (k >= 1) {
      Json gens = Json::array();
      for (const auto& gen : psigma_generators(n, k))
        gens.push_back({{"label", gen.label}, {"images", gen.automorphism.describe()}});
      j["generators"] = gens;
      const PsigmaRank r = outer_rank(spec);
      j["outer_rank"] = r.outer_rank;
      j["inner_rank"] = r.inner_rank;
    }
    if (!vector.empty()) {
      const ExponentVector v = exponent_vector_from_json(spec, Json::parse(vector));
      j["vector"] = to_json(spec, v);
      j["images"] = apply_exponents(spec, v).describe();
      const auto m = inner_decision(spec, v);
      j["inner"] = m ? Json(*m) : Json(nullptr);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  if (json) {
    out << j.dump(2) << "\n";
    return kOk;
  }
  out << "PSigma(" << n << "," << k << "): vcd = " << j["vcd"].get<int>()
      << (k >= 1 ? " (2n - k - 2)" : " (2n - 3)") << "\n";
  if (j.contains("generators")) {
    out << "generators (" << j["generators"].size() << "):\n";
    for (const auto& g : j["generators"])
      out << "  " << g["label"].get<std::string>() << ": " << g["images"].get<std::string>() << "\n";
    out << "outer rank: " << j["outer_rank"].get<std::size_t>() << " (inner line rank "
        << j["inner_rank"].get<std::size_t>() << ")\n";
  }
  if (j.contains("images")) {
    out << "images: " << j["images"].get<std::string>() << "\n";
    out << "inner: " << (j["inner"].is_null() ? std::string("no") : "conjugation by x1^" + j["inner"].dump()) << "\n";
  }
  return kOk;
}

int cmd_ideal(int r, int s, bool all, bool json, std::ostream& out, std::ostream& err) {
  try {
    if (r < 0 || s < 0) throw std::invalid_argument("r and s must be non-negative");
    const HalfEdgeSet h{r, s};
    std::vector<std::string> warnings;
    enumerate_ideal_edges(h, !all, &warnings);
    const IdealEdgeComplex c = build_complex(h, !all);
    const HomologyResult hom = reduced_homology(c.complex);
    std::optional<MorseCertificate> cert;
    std::string cert_note;
    if (!all) {
      try {
        cert = morse_collapse_certificate(r, s);
      } catch (const std::invalid_argument& e) {
        cert_note = e.what();
      }
    }
    if (json) {
      Json j = to_json(c);
      j["homology"] = to_json(hom);
      if (cert) j["certificate"] = to_json(*cert);
      if (!cert_note.empty()) j["certificate_error"] = cert_note;
      j["warnings"] = warnings;
      out << j.dump(2) << "\n";
      return kOk;
    }
    out << (all ? "B" : "L") << "(" << r << "," << s << "): " << c.vertices.size() << (all ? "" : " legal")
        << " vertices, f-vector [";
    const auto f = c.complex.f_vector();
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
    out << "], dimension " << c.complex.dimension() << "\n";
    for (const auto& w : warnings) out << "warning: " << w << "\n";
    out << "reduced homology: ";
    if (hom.empty)
      out << "empty complex\n";
    else if (hom.trivial())
      out << "homology-trivial\n";
    else {
      for (std::size_t d = 0; d < hom.reduced_betti.size(); ++d) out << (d ? " " : "") << "b" << d << "=" << hom.reduced_betti[d];
      out << "\n";
    }
    if (cert) {
      out << "Morse certificate: " << (cert->certified ? "certified" : "not certified") << " (" << cert->verdict
          << "; " << cert->cone_checks << " cone checks, " << cert->link_isomorphisms << " link isomorphisms, "
          << cert->tie_orders_passed << "/" << cert->tie_orders_tried << " tie orders)\n";
      for (const auto& f2 : cert->failures) out << "  failure: " << f2 << "\n";
    }
    if (!cert_note.empty()) out << "Morse certificate: " << cert_note << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kOk;
}

int cmd_verify(const VerifyOptions& options, bool json, std::ostream& out) {
  const VerifySummary s = verify_corpus(options);
  if (json) {
    out << Json{{"graphs", s.graphs}, {"checks", s.checks}, {"violations", s.violations}}.dump(2) << "\n";
  } else {
    out << "verified " << s.graphs << " graphs, " << s.checks << " checks, " << s.violations.size()
        << " violations\n";
    for (const auto& v : s.violations) out << "violation: " << v << "\n";
  }
  return s.violations.empty() ? kOk : kInvariantViolation;
}

}  // namespace

VerifySummary verify_corpus(const VerifyOptions& options) {
  VerifySummary s;
  auto check = [&](bool ok, const std::string& what) {
    ++s.checks;
    if (!ok) s.violations.push_back(what);
  };
  std::mt19937 rng(options.seed);

  for (const NamedGraph& ng : verification_corpus(options.max_nodes, options.seed)) {
    ++s.graphs;
    const std::string& name = ng.name;
    try {
      const VcdReport r = vcd_report(ng.graph);
      const auto& c = r.counts;
      const long e = static_cast<long>(c.edges), l = static_cast<long>(c.leaves), p = static_cast<long>(c.pieces);
      for (const auto& a : r.anomalies) check(false, name + ": " + a);
      check(r.lower.value <= r.upper.value, name + ": lower bound exceeds upper bound");
      check(r.kernel_rank == p - 1, name + ": kernel rank is not pi - 1");
      const bool tree = c.euler == 1;
      if (tree) {
        check(r.has(TheoremTag::Kind::Tree), name + ": tree without Tree tag");
        check(r.exact && *r.exact == e + 2 * l - 3, name + ": tree formula");
      }
      if (r.has(TheoremTag::Kind::Cycle))
        check(r.exact && c.cycle_length && *r.exact == e - static_cast<long>(*c.cycle_length) + 2 * l,
              name + ": cycle formula");
      if (r.analysis.validation.square_free && !tree) {
        check(r.has(TheoremTag::Kind::NoShortCycles), name + ": square-free non-tree without NoShortCycles tag");
        check(r.lower.value == p + 2 * l - 1, name + ": NoShortCycles lower formula");
        check(r.upper.value == p + 2 * l - 1 - 2 * c.euler, name + ": NoShortCycles upper formula");
      }

      const GraphAnalysis& a = r.analysis;
      GeneratorOptions go;
      go.conjugator_bound = options.bound;
      go.compute_lattice = false;
      go.certify_commutation = ng.graph.node_count() <= options.max_nodes && a.gamma0.edges.size() > 0;
      if (a.gamma0.edges.empty()) continue;
      const GeneratorSet gs = build_generator_set(a, default_choices(a), go);
      const long expected = (p - 1) + 2 * static_cast<long>(c.nodes - c.gamma0_nodes);
      check(static_cast<long>(gs.generators.size()) == expected, name + ": generator count");
      if (go.certify_commutation)
        check(gs.uncertified_pairs() == 0, name + ": " + std::to_string(gs.uncertified_pairs()) +
                                               " generator pairs without a commutator certificate");

      if (tree) {
        for (NodeId v = 0; v < ng.graph.node_count(); ++v) {
          if (ng.graph.is_leaf(v)) continue;
          const ArtinGroupPtr G = gs.group;
          const auto data = random_local_conjugators(G, v, rng, 3);
          try {
            lift_local(G, v, data);
            check(true, "");
          } catch (const std::exception& ex) {
            check(false, name + ": lift at " + ng.graph.name(v) + ": " + ex.what());
          }
        }
      }
    } catch (const std::exception& ex) {
      check(false, name + ": " + ex.what());
    }
  }

  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n; ++k)
      check(outer_rank({n, k}).outer_rank == static_cast<std::size_t>(psigma_vcd(n, k)),
            "PSigma(" + std::to_string(n) + "," + std::to_string(k) + ") outer rank");

  for (int r = 2; r <= 3; ++r)
    for (int s2 = 0; s2 <= 3; ++s2) {
      const std::string tag = "L(" + std::to_string(r) + "," + std::to_string(s2) + ")";
      const IdealEdgeComplex c = build_complex({r, s2}, true);
      check(reduced_homology(c.complex).trivial(), tag + " is not homology-trivial");
      check(morse_collapse_certificate(r, s2).certified, tag + " has no Morse certificate");
    }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds and witnesses for the virtual cohomological dimension of Out(A_Gamma)", "outvcd"};
  app.require_subcommand(1);

  bool json = false;
  std::string path, e0, vector;
  bool witness = false, all = false;
  std::size_t bound = 4;
  int n = 0, k = 0, r = 0, s = 0;
  VerifyOptions vo;

  auto* analyze = app.add_subcommand("analyze", "Bounds, exact value and theorem tags for a defining graph");
  analyze->add_option("file", path, "Graph file (node/edge directives)")->required();
  analyze->add_flag("--json", json, "Emit JSON");
  analyze->add_flag("--witness", witness, "Build the commuting generator set with certificates");
  analyze->add_option("--e0", e0, "Base edge A,B for the generator set");
  analyze->add_option("--bound", bound, "Conjugator search bound")->check(CLI::Range(0, 12));

  auto* psigma = app.add_subcommand("psigma", "PSigma(n,k): formula, generators, outer rank");
  psigma->add_option("n", n, "Free group rank")->required();
  psigma->add_option("k", k, "Number of conjugacy-fixed generators")->required();
  psigma->add_option("--vector", vector, "Exponent vector as a JSON map, e.g. {\"b2\":1}");
  psigma->add_flag("--json", json, "Emit JSON");

  auto* ideal = app.add_subcommand("ideal-complex", "Legal ideal-edge complex L(r,s): homology and Morse certificate");
  ideal->add_option("r", r, "Pairs of half-edges on cycles")->required();
  ideal->add_option("s", s, "Other half-edges")->required();
  ideal->add_flag("--all", all, "Use every ideal edge (the complex B) instead of the legal ones");
  ideal->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify", "Run the invariant suite over the generated corpus");
  verify->add_option("--max-nodes", vo.max_nodes, "Largest tree in the corpus")->check(CLI::Range(4, 12));
  verify->add_option("--bound", vo.bound, "Conjugator search bound")->check(CLI::Range(0, 12));
  verify->add_option("--seed", vo.seed, "Seed for random fixtures");
  verify->add_flag("--json", json, "Emit JSON");

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    // help and version requests exit 0; anything else is a usage error
    return app.exit(e, out, err) == 0 ? kOk : kParseError;
  }

  if (analyze->parsed()) return cmd_analyze(path, json, witness, e0, bound, out, err);
  if (psigma->parsed()) return cmd_psigma(n, k, json, vector, out, err);
  if (ideal->parsed()) return cmd_ideal(r, s, all, json, out, err);
  return cmd_verify(vo, json, out);
}

}  // namespace outvcd::cli
