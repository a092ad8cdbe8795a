#include <algorithm>
#include <set>

#include "outvcd/graph.hpp"

namespace outvcd {

namespace {

// Hopcroft–Tarjan biconnected components over an edge stack.
class BiconnectedSearch {
 public:
  explicit BiconnectedSearch(const DefiningGraph& g)
      : g_(g), discovery_(g.node_count(), 0), low_(g.node_count(), 0) {}

  std::vector<std::vector<std::size_t>> run() {
    for (NodeId v = 0; v < g_.node_count(); ++v)
      if (discovery_[v] == 0) visit(v, g_.node_count());
    return std::move(components_);
  }

 private:
  void visit(NodeId v, NodeId parent) {
    discovery_[v] = low_[v] = ++clock_;
    for (NodeId w : g_.neighbors(v)) {
      if (w == parent) continue;
      if (discovery_[w] == 0) {
        stack_.push_back(*g_.edge_index(v, w));
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= discovery_[v]) pop_component(*g_.edge_index(v, w));
      } else if (discovery_[w] < discovery_[v]) {
        stack_.push_back(*g_.edge_index(v, w));
        low_[v] = std::min(low_[v], discovery_[w]);
      }
    }
  }

  void pop_component(std::size_t until) {
    std::vector<std::size_t> piece;
    while (true) {
      std::size_t e = stack_.back();
      stack_.pop_back();
      piece.push_back(e);
      if (e == until) break;
    }
    std::sort(piece.begin(), piece.end());
    components_.push_back(std::move(piece));
  }

  const DefiningGraph& g_;
  std::vector<std::size_t> discovery_;
  std::vector<std::size_t> low_;
  std::size_t clock_ = 0;
  std::vector<std::size_t> stack_;
  std::vector<std::vector<std::size_t>> components_;
};

}  // namespace

std::size_t component_count(const DefiningGraph& g, std::optional<NodeId> removed) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  if (removed) seen[*removed] = 1;
  std::size_t count = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

std::vector<std::vector<NodeId>> components_without(const DefiningGraph& g, NodeId removed) {
  const std::size_t n = g.node_count();
  std::vector<char> seen(n, 0);
  seen[removed] = 1;
  std::vector<std::vector<NodeId>> out;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<NodeId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (NodeId w : g.neighbors(comp[i]))
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

PieceDecomposition pieces(const DefiningGraph& g, const DominationOrder& order) {
  const std::size_t n = g.node_count();
  PieceDecomposition p;
  p.pieces = BiconnectedSearch(g).run();
  std::sort(p.pieces.begin(), p.pieces.end());

  p.membership.assign(n, 0);
  for (const auto& piece : p.pieces) {
    std::set<NodeId> nodes;
    for (std::size_t e : piece) {
      nodes.insert(g.edges()[e].u);
      nodes.insert(g.edges()[e].v);
    }
    for (NodeId v : nodes) ++p.membership[v];
    p.piece_nodes.emplace_back(nodes.begin(), nodes.end());
  }

  p.delta_c.resize(n);
  for (NodeId v = 0; v < n; ++v) p.delta_c[v] = component_count(g, v);

  p.hubs.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    std::set<NodeId> delta;
    for (const auto& nodes : p.piece_nodes)
      if (std::binary_search(nodes.begin(), nodes.end(), v)) delta.insert(nodes.begin(), nodes.end());
    HubData& h = p.hubs[v];
    h.delta.assign(delta.begin(), delta.end());
    h.is_hub = std::all_of(h.delta.begin(), h.delta.end(),
                           [&](NodeId x) { return x == v || g.adjacent(v, x) || order.leq(x, v); });
  }
  return p;
}

std::vector<std::string> structural_anomalies(const DefiningGraph& g, const DominationOrder& order,
                                              const GammaZero& g0, const PieceDecomposition& p) {
  std::vector<std::string> out;

  std::vector<std::size_t> owner(g.edge_count(), 0);
  for (const auto& piece : p.pieces)
    for (std::size_t e : piece) ++owner[e];
  for (std::size_t e = 0; e < owner.size(); ++e)
    if (owner[e] != 1)
      out.push_back("edge " + g.name(g.edges()[e].u) + "-" + g.name(g.edges()[e].v) + " lies in " +
                    std::to_string(owner[e]) + " pieces");

  for (std::size_t i = 0; i < p.piece_nodes.size(); ++i)
    for (std::size_t j = i + 1; j < p.piece_nodes.size(); ++j) {
      std::vector<NodeId> common;
      std::set_intersection(p.piece_nodes[i].begin(), p.piece_nodes[i].end(), p.piece_nodes[j].begin(),
                            p.piece_nodes[j].end(), std::back_inserter(common));
      if (common.size() > 1)
        out.push_back("pieces " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                      std::to_string(common.size()) + " nodes");
    }

  for (NodeId v = 0; v < g.node_count(); ++v)
    if (p.delta_c[v] != p.membership[v])
      out.push_back("node " + g.name(v) + ": " + std::to_string(p.delta_c[v]) +
                    " components of the complement but " + std::to_string(p.membership[v]) + " pieces");

  long kernel = 0;
  for (NodeId v : g0.nodes) kernel += static_cast<long>(p.delta_c[v]) - 1;
  if (kernel != static_cast<long>(p.count()) - 1)
    out.push_back("sum over V0 of (components - 1) is " + std::to_string(kernel) + ", expected " +
                  std::to_string(static_cast<long>(p.count()) - 1));

  if (!g0.connected) out.push_back("Gamma0 is not connected");

  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (!g.is_leaf(v)) continue;
    if (g0.contains(v)) out.push_back("leaf " + g.name(v) + " lies in V0");
    NodeId nb = g.neighbors(v).front();
    if (!g0.in_U(nb)) out.push_back("neighbour " + g.name(nb) + " of leaf " + g.name(v) + " is not in U");
  }

  for (NodeId v : g0.u)
    if (!g0.contains(v) || !order.is_maximal(v)) out.push_back("U node " + g.name(v) + " outside V0");

  return out;
}

}  // namespace outvcd
