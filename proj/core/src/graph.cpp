#include "outvcd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace outvcd {

bool is_valid_node_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

DefiningGraph DefiningGraph::from_edges(std::vector<std::string> names, const std::vector<Edge>& edges) {
  DefiningGraph g;
  const std::size_t n = names.size();
  for (NodeId v = 0; v < n; ++v) {
    if (!is_valid_node_name(names[v])) throw std::invalid_argument("invalid node name '" + names[v] + "'");
    if (!g.index_.emplace(names[v], v).second)
      throw std::invalid_argument("duplicate node name '" + names[v] + "'");
  }
  g.names_ = std::move(names);
  g.adjacency_.assign(n, {});
  g.matrix_.assign(n * n, 0);
  for (Edge e : edges) {
    if (e.u >= n || e.v >= n) throw std::invalid_argument("edge references a missing node");
    if (e.u == e.v) throw std::invalid_argument("self-loop at " + g.names_[e.u]);
    if (e.u > e.v) std::swap(e.u, e.v);
    if (g.matrix_[e.u * n + e.v])
      throw std::invalid_argument("duplicate edge " + g.names_[e.u] + " " + g.names_[e.v]);
    g.matrix_[e.u * n + e.v] = g.matrix_[e.v * n + e.u] = 1;
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
    g.edges_.push_back(e);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

DefiningGraph DefiningGraph::from_edges(std::vector<std::string> names,
                                        const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < names.size(); ++v) index.emplace(names[v], v);
  std::vector<Edge> ids;
  ids.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw std::invalid_argument("edge " + a + " " + b + " references a missing node");
    ids.push_back({ia->second, ib->second});
  }
  return from_edges(std::move(names), ids);
}

std::optional<NodeId> DefiningGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId DefiningGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw std::out_of_range("unknown node '" + std::string(name) + "'");
}

std::optional<std::size_t> DefiningGraph::edge_index(NodeId a, NodeId b) const {
  if (a > b) std::swap(a, b);
  if (!adjacent(a, b)) return std::nullopt;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i] == Edge{a, b}) return i;
  return std::nullopt;
}

std::size_t DefiningGraph::leaf_count() const {
  std::size_t count = 0;
  for (const auto& nbrs : adjacency_) count += nbrs.size() == 1;
  return count;
}

std::vector<NodeId> DefiningGraph::nodes_by_name() const {
  std::vector<NodeId> order(names_.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [this](NodeId a, NodeId b) { return names_[a] < names_[b]; });
  return order;
}

DefiningGraph parse_graph(std::string_view text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, NodeId> index;
  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;

  auto intern = [&](const std::string& name, std::size_t line) {
    if (!is_valid_node_name(name)) throw ParseError(line, "invalid node name '" + name + "'");
    auto [it, inserted] = index.emplace(name, names.size());
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;

    const std::string& directive = tokens[0];
    if (directive == "node") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'node <name>'");
      intern(tokens[1], line_no);
    } else if (directive == "edge") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'edge <a> <b>'");
      if (tokens[1] == tokens[2]) throw ParseError(line_no, "self-loop at " + tokens[1]);
      NodeId a = intern(tokens[1], line_no);
      NodeId b = intern(tokens[2], line_no);
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
        throw ParseError(line_no, "duplicate edge " + tokens[1] + " " + tokens[2]);
      edges.push_back({std::min(a, b), std::max(a, b)});
    } else {
      throw ParseError(line_no, "unknown token '" + directive + "'");
    }
  }
  if (names.empty()) throw ParseError(0, "empty graph");
  return DefiningGraph::from_edges(std::move(names), edges);
}

std::string to_graph_text(const DefiningGraph& g) {
  std::string out;
  for (const auto& name : g.names()) out += "node " + name + "\n";
  for (Edge e : g.edges()) out += "edge " + g.name(e.u) + " " + g.name(e.v) + "\n";
  return out;
}

ValidationReport validate(const DefiningGraph& g) {
  ValidationReport r;
  const std::size_t n = g.node_count();
  r.is_connected = n > 0 && component_count(g) == 1;

  r.triangle_free = true;
  for (Edge e : g.edges()) {
    for (NodeId w : g.neighbors(e.u)) {
      if (w != e.v && g.adjacent(w, e.v)) {
        r.triangle_free = false;
        r.triangle = {e.u, e.v, w};
        break;
      }
    }
    if (!r.triangle_free) break;
  }

  // Two distinct nodes with two common neighbours span a 4-cycle.
  r.square_free = true;
  for (NodeId a = 0; a < n && r.square_free; ++a) {
    for (NodeId b = a + 1; b < n && r.square_free; ++b) {
      std::vector<NodeId> common;
      std::set_intersection(g.neighbors(a).begin(), g.neighbors(a).end(), g.neighbors(b).begin(),
                            g.neighbors(b).end(), std::back_inserter(common));
      if (common.size() >= 2) {
        r.square_free = false;
        r.square = {a, common[0], b, common[1]};
      }
    }
  }

  // A star: some node is adjacent to all others and every edge touches it.
  for (NodeId c = 0; c < n; ++c) {
    if (g.degree(c) + 1 != n) continue;
    if (g.edge_count() == g.degree(c)) {
      r.is_star = true;
      r.star_center = c;
      break;
    }
  }

  r.eligible = r.is_connected && r.triangle_free && !r.is_star;
  return r;
}

DominationOrder::DominationOrder(const DefiningGraph& g) : n_(g.node_count()) {
  leq_.assign(n_ * n_, 0);
  for (NodeId v = 0; v < n_; ++v) {
    for (NodeId w = 0; w < n_; ++w) {
      auto lv = g.neighbors(v);
      auto lw = g.neighbors(w);
      leq_[v * n_ + w] = std::includes(lw.begin(), lw.end(), lv.begin(), lv.end());
    }
  }

  class_of_.assign(n_, n_);
  for (NodeId v = 0; v < n_; ++v) {
    if (class_of_[v] != n_) continue;
    class_of_[v] = classes_.size();
    classes_.push_back({v});
    for (NodeId w = v + 1; w < n_; ++w) {
      if (class_of_[w] == n_ && leq(v, w) && leq(w, v)) {
        class_of_[w] = class_of_[v];
        classes_.back().push_back(w);
      }
    }
  }

  maximal_node_.assign(n_, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    NodeId v = classes_[c].front();
    bool maximal = true;
    for (NodeId w = 0; w < n_ && maximal; ++w)
      if (leq(v, w) && !leq(w, v)) maximal = false;
    if (maximal) {
      maximal_.push_back(c);
      for (NodeId m : classes_[c]) maximal_node_[m] = 1;
    }
  }
}

DominationOrder domination_order(const DefiningGraph& g) { return DominationOrder(g); }

NodeId lexicographic_representative(const DefiningGraph& g, std::span<const NodeId> members) {
  if (members.empty()) throw std::invalid_argument("empty equivalence class");
  return *std::min_element(members.begin(), members.end(),
                           [&g](NodeId a, NodeId b) { return g.name_less(a, b); });
}

GammaZero gamma_zero(const DefiningGraph& g, const DominationOrder& order,
                     const RepresentativePolicy& policy) {
  const std::size_t n = g.node_count();
  GammaZero z;
  z.in_v0.assign(n, 0);
  z.in_u.assign(n, 0);
  for (std::size_t c : order.maximal_classes()) {
    const auto& members = order.classes()[c];
    NodeId rep = policy(g, members);
    if (std::find(members.begin(), members.end(), rep) == members.end())
      throw std::invalid_argument("representative policy returned a node outside its class");
    z.representatives.push_back(rep);
    z.in_v0[rep] = 1;
    if (members.size() == 1) z.in_u[rep] = 1;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (z.in_v0[v]) z.nodes.push_back(v);
    if (z.in_u[v]) z.u.push_back(v);
  }
  for (Edge e : g.edges())
    if (z.in_v0[e.u] && z.in_v0[e.v]) z.edges.push_back(e);
  std::sort(z.edges.begin(), z.edges.end());

  z.stats.assign(n, {});
  for (NodeId v = 0; v < n; ++v) {
    auto& s = z.stats[v];
    s.valence = g.degree(v);
    for (NodeId w : g.neighbors(v)) {
      s.valence0 += z.in_v0[w] && z.in_v0[v];
      s.valence_u += z.in_u[w];
    }
  }

  z.pruned_leaves = true;
  for (NodeId v = 0; v < n; ++v)
    if ((z.in_v0[v] != 0) != !g.is_leaf(v)) z.pruned_leaves = false;

  // connectivity of the induced subgraph on V₀
  if (!z.nodes.empty()) {
    std::vector<char> seen(n, 0);
    std::vector<NodeId> stack{z.nodes.front()};
    seen[z.nodes.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      ++reached;
      for (NodeId w : g.neighbors(v))
        if (z.in_v0[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    z.connected = reached == z.nodes.size();
  }
  return z;
}

}  // namespace outvcd
