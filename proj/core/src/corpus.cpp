#include "outvcd/corpus.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace outvcd {

namespace {

using EdgeList = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::vector<std::size_t>> adjacency(std::size_t n, const EdgeList& edges) {
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

std::string rooted_code(const std::vector<std::vector<std::size_t>>& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> children;
  for (std::size_t w : adj[v])
    if (w != parent) children.push_back(rooted_code(adj, w, v));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

// AHU encoding rooted at the centre (or the lesser of the two centre encodings).
std::string tree_code(std::size_t n, const EdgeList& edges) {
  auto adj = adjacency(n, edges);
  if (n <= 2) return std::to_string(n);
  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t w : adj[v])
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t c : layer) {
    std::string code = rooted_code(adj, c, n);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::string node_name(std::size_t i) { return "n" + std::to_string(i); }

DefiningGraph from_index_edges(std::size_t n, const EdgeList& edges, const std::function<std::string(std::size_t)>& name) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(name(i));
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back({std::min(a, b), std::max(a, b)});
  return DefiningGraph::from_edges(std::move(names), es);
}

DefiningGraph from_names(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  return DefiningGraph::from_edges(std::move(names), edges);
}

std::vector<std::string> indexed(const std::string& prefix, std::size_t from, std::size_t to) {
  std::vector<std::string> out;
  for (std::size_t i = from; i <= to; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

EdgeList cycle_edges(std::size_t first, std::size_t k) {
  EdgeList out;
  for (std::size_t i = 0; i < k; ++i) out.push_back({first + i, first + (i + 1) % k});
  return out;
}

// Adds leaves named l1, l2, ... (or with another prefix) at the given nodes.
DefiningGraph with_leaves(const DefiningGraph& g, const std::vector<std::string>& at, const std::string& prefix = "l") {
  std::vector<std::string> names = g.names();
  std::vector<Edge> edges = g.edges();
  for (std::size_t i = 0; i < at.size(); ++i) {
    names.push_back(prefix + std::to_string(i + 1));
    edges.push_back({g.id(at[i]), names.size() - 1});
  }
  return DefiningGraph::from_edges(std::move(names), edges);
}

}  // namespace

std::vector<DefiningGraph> free_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<EdgeList> current{EdgeList{}};
  for (std::size_t size = 2; size <= n; ++size) {
    std::vector<EdgeList> next;
    std::set<std::string> seen;
    for (const EdgeList& t : current) {
      for (std::size_t v = 0; v + 1 < size; ++v) {
        EdgeList grown = t;
        grown.push_back({v, size - 1});
        if (seen.insert(tree_code(size, grown)).second) next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  std::vector<DefiningGraph> out;
  for (const EdgeList& t : current) out.push_back(from_index_edges(n, t, node_name));
  return out;
}

std::vector<NamedGraph> nonstar_trees(std::size_t max_nodes) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 4; n <= max_nodes; ++n) {
    std::size_t index = 0;
    for (DefiningGraph& t : free_trees(n)) {
      bool star = false;
      for (NodeId v = 0; v < t.node_count(); ++v) star = star || t.degree(v) + 1 == t.node_count();
      if (star) continue;
      out.push_back({"tree" + std::to_string(n) + "_" + std::to_string(index++), std::move(t)});
    }
  }
  return out;
}

DefiningGraph fixture_p5() {
  return from_names({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
}

DefiningGraph fixture_c5_leaf() {
  return from_names({"v1", "v2", "v3", "v4", "v5", "u"},
                    {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v5"}, {"v5", "v1"}, {"v1", "u"}});
}

DefiningGraph fixture_spider() {
  return from_names({"c", "x1", "x2", "x3", "y1", "y2", "y3"},
                    {{"c", "x1"}, {"c", "x2"}, {"c", "x3"}, {"x1", "y1"}, {"x2", "y2"}, {"x3", "y3"}});
}

std::vector<NamedGraph> cycle_with_trees(std::size_t per_length, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::vector<NamedGraph> out;
  for (std::size_t k : {5u, 6u, 7u}) {
    for (std::size_t i = 0; i < per_length; ++i) {
      const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
      EdgeList edges = cycle_edges(0, k);
      for (std::size_t t = 0; t < extra; ++t) {
        const std::size_t at = std::uniform_int_distribution<std::size_t>(0, k + t - 1)(rng);
        edges.push_back({at, k + t});
      }
      auto name = [k](std::size_t v) { return v < k ? "c" + std::to_string(v + 1) : "t" + std::to_string(v - k + 1); };
      out.push_back({"cycle" + std::to_string(k) + "_" + std::to_string(i), from_index_edges(k + extra, edges, name)});
    }
  }
  return out;
}

std::vector<NamedGraph> girth5_graphs() {
  std::vector<NamedGraph> out;
  auto p = [](std::size_t i) { return "p" + std::to_string(i); };

  EdgeList petersen = cycle_edges(0, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    petersen.push_back({i, i + 5});
    petersen.push_back({5 + i, 5 + (i + 2) % 5});
  }
  out.push_back({"petersen", from_index_edges(10, petersen, p)});

  EdgeList dodeca = cycle_edges(0, 5);
  for (auto e : cycle_edges(5, 10)) dodeca.push_back(e);
  for (auto e : cycle_edges(15, 5)) dodeca.push_back(e);
  for (std::size_t i = 0; i < 5; ++i) {
    dodeca.push_back({i, 5 + 2 * i});
    dodeca.push_back({6 + 2 * i, 15 + i});
  }
  out.push_back({"dodecahedron", from_index_edges(20, dodeca, p)});

  DefiningGraph theta = from_names(
      {"s", "t", "p1", "q1", "q2", "r1", "r2"},
      {{"s", "p1"}, {"p1", "t"}, {"s", "q1"}, {"q1", "q2"}, {"q2", "t"}, {"s", "r1"}, {"r1", "r2"}, {"r2", "t"}});
  out.push_back({"theta233", theta});
  out.push_back({"theta233_leaves", with_leaves(theta, {"s", "q1", "q1", "r2"})});

  std::vector<std::string> bouquet_names{"c"};
  for (auto& n : indexed("a", 1, 4)) bouquet_names.push_back(n);
  for (auto& n : indexed("b", 1, 4)) bouquet_names.push_back(n);
  DefiningGraph bouquet = from_names(bouquet_names, {{"c", "a1"},
                                                     {"a1", "a2"},
                                                     {"a2", "a3"},
                                                     {"a3", "a4"},
                                                     {"a4", "c"},
                                                     {"c", "b1"},
                                                     {"b1", "b2"},
                                                     {"b2", "b3"},
                                                     {"b3", "b4"},
                                                     {"b4", "c"}});
  out.push_back({"two_pentagons", bouquet});
  out.push_back({"two_pentagons_leaves", with_leaves(bouquet, {"c", "a2", "b3", "b3"})});

  std::vector<std::string> dumbbell_names = indexed("a", 1, 5);
  for (auto& n : indexed("h", 1, 6)) dumbbell_names.push_back(n);
  dumbbell_names.push_back("m");
  std::vector<std::pair<std::string, std::string>> dumbbell_edges;
  for (std::size_t i = 1; i <= 5; ++i) dumbbell_edges.push_back({"a" + std::to_string(i), "a" + std::to_string(i % 5 + 1)});
  for (std::size_t i = 1; i <= 6; ++i) dumbbell_edges.push_back({"h" + std::to_string(i), "h" + std::to_string(i % 6 + 1)});
  dumbbell_edges.push_back({"a1", "m"});
  dumbbell_edges.push_back({"m", "h1"});
  DefiningGraph dumbbell = from_names(dumbbell_names, dumbbell_edges);
  out.push_back({"pentagon_hexagon", dumbbell});
  out.push_back({"pentagon_hexagon_leaves", with_leaves(dumbbell, {"m", "a3", "h4", "h4"})});
  out.push_back({"petersen_leaves", with_leaves(out.front().graph, {"p0", "p7"})});
  return out;
}

std::vector<NamedGraph> square_graphs() {
  std::vector<NamedGraph> out;
  auto q = [](std::size_t i) { return "q" + std::to_string(i); };
  out.push_back({"c4", from_index_edges(4, cycle_edges(0, 4), q)});

  DefiningGraph k23 = from_names({"x1", "x2", "y1", "y2", "y3"},
                                 {{"x1", "y1"}, {"x1", "y2"}, {"x1", "y3"}, {"x2", "y1"}, {"x2", "y2"}, {"x2", "y3"}});
  out.push_back({"k23_leaves", with_leaves(k23, {"x1", "y2"})});
  DefiningGraph sq = from_index_edges(4, cycle_edges(0, 4), q);
  out.push_back({"square_trees", with_leaves(with_leaves(sq, {"q0", "q1"}), {"l1", "q2"}, "k")});

  EdgeList grid;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      if (c + 1 < 3) grid.push_back({3 * r + c, 3 * r + c + 1});
      if (r + 1 < 3) grid.push_back({3 * r + c, 3 * (r + 1) + c});
    }
  out.push_back({"grid3x3", from_index_edges(9, grid, q)});

  EdgeList cube;
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit : {1u, 2u, 4u})
      if (!(v & bit)) cube.push_back({v, v | bit});
  out.push_back({"cube", from_index_edges(8, cube, q)});

  EdgeList k33;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 3; j < 6; ++j) k33.push_back({i, j});
  out.push_back({"k33", from_index_edges(6, k33, q)});
  return out;
}

std::vector<NamedGraph> verification_corpus(std::size_t max_tree_nodes, std::uint32_t seed) {
  std::vector<NamedGraph> out = nonstar_trees(max_tree_nodes);
  out.push_back({"p5", fixture_p5()});
  out.push_back({"c5_leaf", fixture_c5_leaf()});
  out.push_back({"spider", fixture_spider()});
  for (auto& g : cycle_with_trees(8, seed)) out.push_back(std::move(g));
  for (auto& g : girth5_graphs()) out.push_back(std::move(g));
  for (auto& g : square_graphs()) out.push_back(std::move(g));
  return out;
}

}  // namespace outvcd
