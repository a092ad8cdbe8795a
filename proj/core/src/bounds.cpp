#include "outvcd/bounds.hpp"

#include <algorithm>

namespace outvcd {

IneligibleGraph::IneligibleGraph(ValidationReport report)
    : std::runtime_error("graph is not eligible: " + ineligibility_reason(report)),
      report_(std::move(report)) {}

std::string ineligibility_reason(const ValidationReport& r) {
  std::vector<std::string> reasons;
  if (!r.is_connected) reasons.push_back("disconnected");
  if (!r.triangle_free) reasons.push_back("contains a triangle");
  if (r.is_star) reasons.push_back("star graph (no formula; computed directly elsewhere)");
  if (reasons.empty()) return "eligible";
  std::string out = reasons.front();
  for (std::size_t i = 1; i < reasons.size(); ++i) out += ", " + reasons[i];
  return out;
}

GraphAnalysis analyze_structure(DefiningGraph g, const RepresentativePolicy& policy) {
  ValidationReport validation = validate(g);
  if (!validation.eligible) throw IneligibleGraph(std::move(validation));
  GraphAnalysis a{std::move(g), std::move(validation), {}, {}, {}, {}};
  a.order = domination_order(a.graph);
  a.gamma0 = gamma_zero(a.graph, a.order, policy);
  a.pieces = pieces(a.graph, a.order);
  a.anomalies = structural_anomalies(a.graph, a.order, a.gamma0, a.pieces);
  return a;
}

std::string to_string(LowerCase c) {
  switch (c) {
    case LowerCase::Base: return "BASE";
    case LowerCase::NonhubNode: return "NONHUB_NODE";
    case LowerCase::NonhubEdge: return "NONHUB_EDGE";
  }
  return "?";
}

std::string to_string(UpperCase c) {
  switch (c) {
    case UpperCase::General: return "GENERAL";
    case UpperCase::UEqualsV0: return "U_EQUALS_V0";
    case UpperCase::PrunedLeaves: return "PRUNED_LEAVES";
  }
  return "?";
}

std::string to_string(const TheoremTag& tag) {
  switch (tag.kind) {
    case TheoremTag::Kind::Tree: return "Tree";
    case TheoremTag::Kind::NoShortCycles: return "NoShortCycles";
    case TheoremTag::Kind::Cycle: return "Cycle(" + std::to_string(tag.cycle_length) + ")";
  }
  return "?";
}

LowerBound lower_bound(const GraphAnalysis& a) {
  const auto& g = a.graph;
  const long pi = static_cast<long>(a.pieces.count());
  const long extra = static_cast<long>(g.node_count() - a.gamma0.nodes.size());

  LowerBound lb;
  lb.base = (pi - 1) + 2 * extra - 2;
  lb.value = lb.base;

  auto edge_key = [&g](Edge e) {
    const auto& x = g.name(e.u);
    const auto& y = g.name(e.v);
    return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
  };

  for (Edge e : a.gamma0.edges) {
    if (a.pieces.is_hub(e.u) || a.pieces.is_hub(e.v)) continue;
    if (!lb.witness_edge || edge_key(e) < edge_key(*lb.witness_edge)) lb.witness_edge = e;
  }
  if (lb.witness_edge) {
    lb.bound_case = LowerCase::NonhubEdge;
    lb.value = lb.base + 2;
    return lb;
  }

  for (NodeId v : a.gamma0.nodes) {
    if (a.pieces.is_hub(v)) continue;
    if (!lb.witness_node || g.name_less(v, *lb.witness_node)) lb.witness_node = v;
  }
  if (lb.witness_node) {
    lb.bound_case = LowerCase::NonhubNode;
    lb.value = lb.base + 1;
  }
  return lb;
}

UpperBound upper_bound(const GraphAnalysis& a) {
  const auto& g = a.graph;
  const auto& z = a.gamma0;
  const long pi = static_cast<long>(a.pieces.count());

  UpperBound ub;
  long sum = 0;
  for (NodeId v : z.nodes) {
    const long valence = static_cast<long>(z.stats[v].valence);
    const long in_u = static_cast<long>(z.stats[v].valence_u);
    long term = 2 * valence - 3 - std::max(in_u - 1, 0L);
    ub.terms.push_back({v, term});
    sum += term;
  }
  ub.value = (pi - 1) + sum;

  if (z.u.size() == z.nodes.size()) {
    long valence_sum = 0;
    for (NodeId v : z.nodes) valence_sum += static_cast<long>(g.degree(v));
    ub.u_equals_v0_value = (pi - 1) + 2 * valence_sum - 2 * static_cast<long>(z.nodes.size()) -
                           2 * static_cast<long>(z.edges.size());
    ub.bound_case = UpperCase::UEqualsV0;
  }
  if (z.pruned_leaves) {
    const long leaves = static_cast<long>(g.leaf_count());
    ub.pruned_leaves_value = (pi - 1) + 2 * (leaves - g.euler_characteristic());
    ub.bound_case = UpperCase::PrunedLeaves;
  }
  return ub;
}

std::optional<std::size_t> unique_cycle_length(const DefiningGraph& g) {
  if (g.euler_characteristic() != 0 || component_count(g) != 1) return std::nullopt;
  std::vector<std::size_t> degree(g.node_count());
  std::vector<NodeId> queue;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    degree[v] = g.degree(v);
    if (degree[v] <= 1) queue.push_back(v);
  }
  std::vector<char> removed(g.node_count(), 0);
  std::size_t remaining = g.node_count();
  while (!queue.empty()) {
    NodeId v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    --remaining;
    for (NodeId w : g.neighbors(v))
      if (!removed[w] && --degree[w] == 1) queue.push_back(w);
  }
  return remaining;
}

bool VcdReport::has(TheoremTag::Kind kind) const {
  return std::any_of(theorems.begin(), theorems.end(), [kind](const TheoremTag& t) { return t.kind == kind; });
}

VcdReport vcd_report(GraphAnalysis analysis) {
  VcdReport r;
  r.analysis = std::move(analysis);
  const auto& a = r.analysis;
  const auto& g = a.graph;

  r.counts.nodes = g.node_count();
  r.counts.gamma0_nodes = a.gamma0.nodes.size();
  r.counts.edges = g.edge_count();
  r.counts.leaves = g.leaf_count();
  r.counts.pieces = a.pieces.count();
  r.counts.euler = g.euler_characteristic();
  r.counts.cycle_length = unique_cycle_length(g);

  r.lower = lower_bound(a);
  r.upper = upper_bound(a);
  r.kernel_rank = static_cast<long>(a.pieces.count()) - 1;
  if (r.lower.value == r.upper.value) r.exact = r.lower.value;

  r.anomalies = a.anomalies;
  auto expect = [&r](bool ok, std::string what) {
    if (!ok) r.anomalies.push_back(std::move(what));
  };

  expect(r.lower.value <= r.upper.value, "lower bound exceeds upper bound");
  if (r.upper.u_equals_v0_value)
    expect(*r.upper.u_equals_v0_value == r.upper.value, "U = V0 specialisation disagrees with the general sum");
  if (r.upper.pruned_leaves_value)
    expect(*r.upper.pruned_leaves_value == r.upper.value,
           "pruned-leaves specialisation disagrees with the general sum");
  if (a.gamma0.pruned_leaves) expect(a.gamma0.u.size() == a.gamma0.nodes.size(), "pruned leaves but U != V0");

  const long e = static_cast<long>(r.counts.edges);
  const long leaves = static_cast<long>(r.counts.leaves);
  const long pi = static_cast<long>(r.counts.pieces);
  const long chi = r.counts.euler;
  const bool tree = chi == 1;

  if (tree) {
    r.theorems.push_back({TheoremTag::Kind::Tree, 0});
    expect(r.exact && *r.exact == e + 2 * leaves - 3, "tree value differs from e + 2l - 3");
  } else if (a.validation.square_free || a.gamma0.pruned_leaves) {
    r.theorems.push_back({TheoremTag::Kind::NoShortCycles, 0});
    expect(r.lower.value == pi + 2 * leaves - 1, "lower bound differs from pi + 2l - 1");
    expect(r.upper.value == pi + 2 * leaves - 1 - 2 * chi, "upper bound differs from pi + 2l - 1 - 2chi");
  }

  if (chi == 0 && r.counts.cycle_length) {
    const std::size_t k = *r.counts.cycle_length;
    if (k >= 5 || a.gamma0.pruned_leaves) {
      r.theorems.push_back({TheoremTag::Kind::Cycle, k});
      expect(r.exact && *r.exact == e - static_cast<long>(k) + 2 * leaves, "cycle value differs from e - k + 2l");
    }
  }
  return r;
}

VcdReport vcd_report(const DefiningGraph& g) { return vcd_report(analyze_structure(g)); }

}  // namespace outvcd
