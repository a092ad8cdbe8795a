#include "outvcd/report_json.hpp"

#include <stdexcept>

namespace outvcd {

namespace {

Json names_of(const DefiningGraph& g, const std::vector<NodeId>& nodes) {
  std::vector<std::string> out;
  for (NodeId v : g.nodes_by_name())
    if (std::find(nodes.begin(), nodes.end(), v) != nodes.end()) out.push_back(g.name(v));
  return out;
}

Json edge_json(const DefiningGraph& g, Edge e) {
  std::string a = g.name(e.u), b = g.name(e.v);
  if (b < a) std::swap(a, b);
  return Json::array({a, b});
}

Json edges_json(const DefiningGraph& g, const std::vector<Edge>& edges) {
  std::vector<Json> out;
  for (Edge e : edges) out.push_back(edge_json(g, e));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Json to_json(const ValidationReport& v, const DefiningGraph& g) {
  Json j;
  j["is_connected"] = v.is_connected;
  j["triangle_free"] = v.triangle_free;
  j["square_free"] = v.square_free;
  j["is_star"] = v.is_star;
  j["eligible"] = v.eligible;
  if (v.star_center) j["star_center"] = g.name(*v.star_center);
  if (!v.triangle.empty()) j["triangle"] = names_of(g, v.triangle);
  if (!v.square.empty()) {
    std::vector<std::string> sq;
    for (NodeId x : v.square) sq.push_back(g.name(x));
    j["square"] = sq;
  }
  if (!v.eligible) j["reason"] = ineligibility_reason(v);
  return j;
}

Json to_json(const VcdReport& r) {
  const GraphAnalysis& a = r.analysis;
  const DefiningGraph& g = a.graph;
  Json j;

  Json counts;
  counts["nodes"] = r.counts.nodes;
  counts["gamma0_nodes"] = r.counts.gamma0_nodes;
  counts["edges"] = r.counts.edges;
  counts["leaves"] = r.counts.leaves;
  counts["pieces"] = r.counts.pieces;
  counts["euler"] = r.counts.euler;
  if (r.counts.cycle_length) counts["cycle_length"] = *r.counts.cycle_length;
  j["counts"] = counts;

  Json g0;
  g0["nodes"] = names_of(g, a.gamma0.nodes);
  g0["edges"] = edges_json(g, a.gamma0.edges);
  g0["u"] = names_of(g, a.gamma0.u);
  g0["pruned_leaves"] = a.gamma0.pruned_leaves;
  Json stats = Json::object();
  for (NodeId v : a.gamma0.nodes) {
    const NodeStats& s = a.gamma0.stats[v];
    stats[g.name(v)] = {{"valence", s.valence}, {"valence0", s.valence0}, {"valence_u", s.valence_u}};
  }
  g0["stats"] = stats;
  j["gamma0"] = g0;

  Json pieces = Json::array();
  for (std::size_t i = 0; i < a.pieces.count(); ++i) pieces.push_back(names_of(g, a.pieces.piece_nodes[i]));
  std::sort(pieces.begin(), pieces.end());
  j["pieces"] = pieces;

  Json hubs = Json::object();
  for (NodeId v = 0; v < g.node_count(); ++v) hubs[g.name(v)] = a.pieces.is_hub(v);
  j["hubs"] = hubs;

  Json lower;
  lower["value"] = r.lower.value;
  lower["case"] = to_string(r.lower.bound_case);
  lower["base"] = r.lower.base;
  if (r.lower.witness_node) lower["witness"] = g.name(*r.lower.witness_node);
  if (r.lower.witness_edge) lower["witness"] = edge_json(g, *r.lower.witness_edge);
  j["lower"] = lower;

  Json upper;
  upper["value"] = r.upper.value;
  upper["case"] = to_string(r.upper.bound_case);
  Json terms = Json::object();
  for (const UpperTerm& t : r.upper.terms) terms[g.name(t.node)] = t.value;
  upper["terms"] = terms;
  if (r.upper.u_equals_v0_value) upper["u_equals_v0"] = *r.upper.u_equals_v0_value;
  if (r.upper.pruned_leaves_value) upper["pruned_leaves"] = *r.upper.pruned_leaves_value;
  j["upper"] = upper;

  j["exact"] = r.exact ? Json(*r.exact) : Json(nullptr);
  std::vector<std::string> theorems;
  for (const TheoremTag& t : r.theorems) theorems.push_back(to_string(t));
  j["theorems"] = theorems;
  j["kernel_rank"] = r.kernel_rank;
  j["anomalies"] = r.anomalies;
  return j;
}

Json to_json(const GeneratorSet& gs) {
  const ArtinGroup& G = *gs.group;
  const DefiningGraph& g = G.graph();
  Json j;
  j["convention"] = "compose(phi, psi) applies psi first; conjugation by g is x -> g x g^-1";

  Json choices;
  choices["e0"] = Json::array({g.name(gs.choices.v0), g.name(gs.choices.w0)});
  choices["tree"] = edges_json(g, gs.choices.tree);
  Json hat = Json::object(), bar = Json::object();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (gs.choices.hat[v]) hat[g.name(v)] = g.name(*gs.choices.hat[v]);
    if (gs.choices.bar[v]) bar[g.name(v)] = g.name(*gs.choices.bar[v]);
  }
  choices["hat"] = hat;
  choices["bar"] = bar;
  j["choices"] = choices;

  Json gens = Json::array();
  for (std::size_t i = 0; i < gs.generators.size(); ++i) {
    const Generator& gen = gs.generators[i];
    gens.push_back({{"index", i},
                    {"kind", to_string(gen.kind)},
                    {"label", gen.label},
                    {"images", gen.automorphism.describe()}});
  }
  j["generators"] = gens;
  j["count"] = gs.generators.size();

  Json certs = Json::array();
  for (const CommutationCertificate& c : gs.certificates) {
    Json cj{{"pair", Json::array({c.first, c.second})},
            {"bound", c.bound},
            {"trivial_in_aut", c.trivial_in_aut},
            {"certified", c.certified()},
            {"exhaustive", c.exhaustive}};
    cj["conjugator"] = c.conjugator ? Json(G.format(*c.conjugator)) : Json(nullptr);
    certs.push_back(cj);
  }
  j["certificates"] = certs;
  j["uncertified_pairs"] = gs.uncertified_pairs();

  if (gs.lattice) {
    Json lat;
    lat["rank"] = gs.lattice->rank;
    lat["exponent_bound"] = gs.lattice->exponent_bound;
    lat["searched"] = gs.lattice->searched;
    lat["partial"] = gs.lattice->partial;
    Json wit = Json::array();
    for (const InnerWitness& w : gs.lattice->witnesses) wit.push_back({{"exponents", w.exponents}, {"a", w.a}, {"b", w.b}});
    lat["witnesses"] = wit;
    j["inner_lattice"] = lat;
  }
  j["inner_lattice_rank"] = gs.inner_lattice_rank();
  j["outer_rank"] = gs.outer_rank();
  return j;
}

Json to_json(const IdealEdgeComplex& c) {
  const HalfEdgeSet& h = c.half_edges;
  Json j;
  j["r"] = h.r;
  j["s"] = h.s;
  j["legal_only"] = c.legal_only;
  Json verts = Json::array();
  for (IdealEdge e : c.vertices) {
    std::vector<std::string> in, out;
    for (std::uint32_t id = 0; id < h.size(); ++id) (((e.inside >> id) & 1u) ? in : out).push_back(h.name(id));
    verts.push_back({{"inside", in}, {"outside", out}});
  }
  j["vertices"] = verts;
  j["maximal_simplices"] = c.complex.maximal_simplices();
  j["f_vector"] = c.complex.f_vector();
  j["dimension"] = c.complex.dimension();
  return j;
}

Json to_json(const HomologyResult& h) {
  return {{"reduced_betti", h.reduced_betti},
          {"torsion", h.torsion},
          {"empty", h.empty},
          {"trivial", h.trivial()},
          {"dense_fallback", h.dense_fallback}};
}

Json to_json(const MorseCertificate& m) {
  Json rec = Json::array();
  for (auto [r, s] : m.recursion) rec.push_back(Json::array({r, s}));
  return {{"r", m.r},
          {"s", m.s},
          {"certified", m.certified},
          {"verdict", m.verdict},
          {"base", format(HalfEdgeSet{m.r, m.s}, m.base)},
          {"vertices", m.vertices},
          {"star_vertices", m.star_vertices},
          {"cone_checks", m.cone_checks},
          {"link_isomorphisms", m.link_isomorphisms},
          {"tie_orders_tried", m.tie_orders_tried},
          {"tie_orders_passed", m.tie_orders_passed},
          {"recursion", rec},
          {"failures", m.failures}};
}

ExponentVector exponent_vector_from_json(const PsigmaSpec& spec, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("exponent vector must be a JSON object");
  ExponentVector v;
  for (const auto& [key, value] : j.items()) {
    if (key.size() < 2 || !value.is_number_integer()) throw std::invalid_argument("bad exponent entry '" + key + "'");
    const char kind = key[0];
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(key.substr(1), &used);
      if (used != key.size() - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent key '" + key + "'");
    }
    const long e = value.get<long>();
    if (kind == 'a' && i >= 2 && i <= spec.k)
      v.a[i] = e;
    else if (kind == 'b' && i > spec.k && i <= spec.n)
      v.b[i] = e;
    else if (kind == 'c' && i > spec.k && i <= spec.n)
      v.c[i] = e;
    else
      throw std::invalid_argument("exponent key '" + key + "' outside PSigma(" + std::to_string(spec.n) + "," +
                                  std::to_string(spec.k) + ")");
  }
  return v;
}

Json to_json(const PsigmaSpec& spec, const ExponentVector& v) {
  Json j = Json::object();
  for (int i = 2; i <= spec.k; ++i) j["a" + std::to_string(i)] = v.a.contains(i) ? v.a.at(i) : 0;
  for (int i = spec.k + 1; i <= spec.n; ++i) {
    j["b" + std::to_string(i)] = v.b.contains(i) ? v.b.at(i) : 0;
    j["c" + std::to_string(i)] = v.c.contains(i) ? v.c.at(i) : 0;
  }
  return j;
}

}  // namespace outvcd
