#include "outvcd/local.hpp"

#include <algorithm>
#include <stdexcept>

namespace outvcd {

namespace {

ArtinGroupPtr link_free_group(const DefiningGraph& g, const std::vector<NodeId>& link) {
  std::vector<std::string> names;
  for (NodeId w : link) names.push_back(g.name(w));
  return make_free_group(names);
}

std::vector<NodeId> link_of(const DefiningGraph& g, NodeId v) {
  auto n = g.neighbors(v);
  return {n.begin(), n.end()};
}

// Γ word restricted to the letters of `link`, in local ids.
Word retract(const Word& w, const std::vector<NodeId>& link) {
  Word out;
  for (const Letter& l : w) {
    auto it = std::lower_bound(link.begin(), link.end(), l.gen);
    if (it != link.end() && *it == l.gen) out.push_back({static_cast<NodeId>(it - link.begin()), l.exp});
  }
  return out;
}

Word to_global(const Word& w, const std::vector<NodeId>& link) {
  Word out;
  for (const Letter& l : w) out.push_back({link.at(l.gen), l.exp});
  return out;
}

bool is_tree(const DefiningGraph& g) {
  return g.node_count() > 0 && g.edge_count() + 1 == g.node_count() && component_count(g) == 1;
}

}  // namespace

std::optional<NodeId> LocalAutomorphism::local_id(NodeId w) const {
  auto it = std::lower_bound(link.begin(), link.end(), w);
  if (it == link.end() || *it != w) return std::nullopt;
  return static_cast<NodeId>(it - link.begin());
}

LocalAutomorphism project_local(const RaagAutomorphism& phi, NodeId v) {
  const DefiningGraph& g = phi.group().graph();
  LocalAutomorphism local;
  local.center = v;
  local.link = link_of(g, v);
  local.free_group = link_free_group(g, local.link);
  std::vector<Word> images;
  for (NodeId w : local.link) images.push_back(retract(phi.image(w), local.link));
  local.map = RaagAutomorphism(local.free_group, std::move(images));
  local.invertibility_certified = nielsen_certifies_basis(*local.free_group, local.map.images());
  return local;
}

bool is_trivial_outer(const LocalAutomorphism& local) { return free_inner_conjugator(local.map).has_value(); }

LocalAutomorphism local_from_conjugators(const ArtinGroupPtr& group, NodeId v,
                                         const std::map<NodeId, Word>& conjugators) {
  const DefiningGraph& g = group->graph();
  LocalAutomorphism local;
  local.center = v;
  local.link = link_of(g, v);
  local.free_group = link_free_group(g, local.link);
  std::vector<Word> images;
  for (NodeId i = 0; i < local.link.size(); ++i) {
    Word c;
    if (auto it = conjugators.find(local.link[i]); it != conjugators.end()) {
      c = retract(it->second, local.link);
      if (c.size() != it->second.size()) throw std::invalid_argument("conjugator outside the link of " + g.name(v));
    }
    images.push_back(concat({c, Word{{i, 1}}, inverse(c)}));
  }
  local.map = RaagAutomorphism(local.free_group, std::move(images));
  local.invertibility_certified = nielsen_certifies_basis(*local.free_group, local.map.images());
  return local;
}

std::optional<std::map<NodeId, Word>> local_conjugators(const LocalAutomorphism& local) {
  std::map<NodeId, Word> out;
  for (NodeId i = 0; i < local.link.size(); ++i) {
    CyclicReduction cr = local.free_group->cyclic_reduce(local.map.image(i));
    if (cr.core != Word{{i, 1}}) return std::nullopt;
    out[local.link[i]] = to_global(cr.conjugator, local.link);
  }
  return out;
}

std::vector<std::string> lift_anomalies(const RaagAutomorphism& lift, NodeId v,
                                        const std::map<NodeId, Word>& conjugators,
                                        const std::vector<NodeId>& gamma0_nodes) {
  std::vector<std::string> out;
  const DefiningGraph& g = lift.group().graph();
  if (!lift.respects_relations()) out.push_back("lift does not respect the relations");
  const LocalAutomorphism expected = local_from_conjugators(lift.group_ptr(), v, conjugators);
  if (!project_local(lift, v).map.equals(expected.map)) out.push_back("projection at " + g.name(v) + " differs from the input");
  for (NodeId u : gamma0_nodes) {
    if (u == v) continue;
    if (!is_trivial_outer(project_local(lift, u))) out.push_back("projection at " + g.name(u) + " is not inner");
  }
  return out;
}

RaagAutomorphism lift_local(const ArtinGroupPtr& group, NodeId v, const std::map<NodeId, Word>& conjugators) {
  const DefiningGraph& g = group->graph();
  if (!is_tree(g)) throw std::invalid_argument("lift_local needs a tree");
  if (v >= g.node_count()) throw std::invalid_argument("unknown node");
  const std::vector<NodeId> link = link_of(g, v);
  for (const auto& [w, c] : conjugators) {
    if (!std::binary_search(link.begin(), link.end(), w))
      throw std::invalid_argument(g.name(w) + " is not in the link of " + g.name(v));
    if (retract(c, link).size() != c.size())
      throw std::invalid_argument("conjugator outside the link of " + g.name(v));
  }

  std::vector<Word> images = RaagAutomorphism::identity(group).images();
  for (const auto& comp : components_without(g, v)) {
    // in a tree each component of Γ − {v} meets L_v in exactly one node
    NodeId w = *std::find_if(comp.begin(), comp.end(), [&](NodeId x) { return g.adjacent(x, v); });
    auto it = conjugators.find(w);
    if (it == conjugators.end() || it->second.empty()) continue;
    for (NodeId u : comp) images[u] = concat({it->second, Word{{u, 1}}, inverse(it->second)});
  }
  RaagAutomorphism lift(group, std::move(images));

  std::vector<NodeId> interior;
  for (NodeId u = 0; u < g.node_count(); ++u)
    if (!g.is_leaf(u)) interior.push_back(u);
  auto bad = lift_anomalies(lift, v, conjugators, interior);
  if (!bad.empty()) throw std::logic_error("lift postcondition failed: " + bad.front());
  return lift;
}

std::map<NodeId, Word> random_local_conjugators(const ArtinGroupPtr& group, NodeId v, std::mt19937& rng,
                                                std::size_t steps) {
  const DefiningGraph& g = group->graph();
  const std::vector<NodeId> link = link_of(g, v);
  const ArtinGroupPtr F = link_free_group(g, link);
  const std::size_t m = link.size();
  RaagAutomorphism acc = RaagAutomorphism::identity(F);
  if (m >= 2) {
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    std::bernoulli_distribution coin(0.5);
    for (std::size_t s = 0; s < steps; ++s) {
      const NodeId y = pick(rng);
      std::vector<NodeId> support;
      for (NodeId x = 0; x < m; ++x)
        if (x != y && coin(rng)) support.push_back(x);
      if (support.empty()) support.push_back((y + 1) % m);
      acc = compose(partial_conjugation(F, support, y, coin(rng) ? 1 : -1), acc);
    }
  }
  LocalAutomorphism local{F, v, link, acc, true};
  auto c = local_conjugators(local);
  if (!c) throw std::logic_error("Whitehead product is not pure symmetric");
  return *c;
}

}  // namespace outvcd
