#include "outvcd/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <functional>
#include <stdexcept>

namespace outvcd {

namespace {

bool in_gamma0_edge(const GammaZero& g0, NodeId a, NodeId b) {
  return std::find(g0.edges.begin(), g0.edges.end(), Edge{std::min(a, b), std::max(a, b)}) != g0.edges.end();
}

std::vector<Edge> bfs_tree(const GraphAnalysis& a, NodeId v0, NodeId w0) {
  const DefiningGraph& g = a.graph;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<Edge> tree{{std::min(v0, w0), std::max(v0, w0)}};
  std::deque<NodeId> queue{v0, w0};
  seen[v0] = seen[w0] = 1;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    std::vector<NodeId> next;
    for (NodeId y : g.neighbors(x))
      if (a.gamma0.contains(y) && !seen[y]) next.push_back(y);
    std::sort(next.begin(), next.end(), [&](NodeId p, NodeId q) { return g.name_less(p, q); });
    for (NodeId y : next) {
      seen[y] = 1;
      tree.push_back({std::min(x, y), std::max(x, y)});
      queue.push_back(y);
    }
  }
  return tree;
}

std::optional<NodeId> least_by_name(const DefiningGraph& g, const std::vector<NodeId>& nodes) {
  if (nodes.empty()) return std::nullopt;
  return *std::min_element(nodes.begin(), nodes.end(), [&](NodeId p, NodeId q) { return g.name_less(p, q); });
}

std::string set_label(const DefiningGraph& g, std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end(), [&](NodeId p, NodeId q) { return g.name_less(p, q); });
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + g.name(nodes[i]);
  return out + "}";
}

RaagAutomorphism power(const Generator& gen, long e) {
  if (e == 0) return RaagAutomorphism::identity(gen.automorphism.group_ptr());
  const RaagAutomorphism& base = e > 0 ? gen.automorphism : gen.inverse;
  RaagAutomorphism out = base;
  for (long k = 1; k < std::abs(e); ++k) out = compose(out, base);
  return out;
}

}  // namespace

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::PartialConjugation: return "partial_conjugation";
    case GeneratorKind::LeafTransvection: return "leaf_transvection";
    case GeneratorKind::LeafTransvectionHat: return "leaf_transvection_hat";
    case GeneratorKind::RightTransvection: return "right_transvection";
    case GeneratorKind::LeftTransvection: return "left_transvection";
  }
  return "unknown";
}

GeneratorChoices make_choices(const GraphAnalysis& a, NodeId v0, NodeId w0, std::optional<std::vector<Edge>> tree) {
  const DefiningGraph& g = a.graph;
  const GammaZero& g0 = a.gamma0;
  if (v0 >= g.node_count() || w0 >= g.node_count() || !g0.contains(v0) || !g0.contains(w0) ||
      !in_gamma0_edge(g0, v0, w0))
    throw std::invalid_argument("e0 is not an edge of Gamma_0");

  GeneratorChoices c;
  c.v0 = v0;
  c.w0 = w0;
  if (tree) {
    for (Edge& e : *tree) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!in_gamma0_edge(g0, e.u, e.v)) throw std::invalid_argument("tree edge outside Gamma_0");
    }
    std::sort(tree->begin(), tree->end());
    if (std::adjacent_find(tree->begin(), tree->end()) != tree->end())
      throw std::invalid_argument("repeated tree edge");
    if (tree->size() + 1 != g0.nodes.size()) throw std::invalid_argument("tree does not span Gamma_0");
    if (std::find(tree->begin(), tree->end(), Edge{std::min(v0, w0), std::max(v0, w0)}) == tree->end())
      throw std::invalid_argument("tree does not contain e0");
    c.tree = *tree;
  } else {
    c.tree = bfs_tree(a, v0, w0);
  }

  // orient T₀ − e₀ towards e₀
  c.hat.assign(g.node_count(), std::nullopt);
  c.hat[v0] = w0;
  c.hat[w0] = v0;
  std::vector<std::vector<NodeId>> tree_adj(g.node_count());
  for (Edge e : c.tree) {
    tree_adj[e.u].push_back(e.v);
    tree_adj[e.v].push_back(e.u);
  }
  std::deque<NodeId> queue{v0, w0};
  std::size_t reached = 2;
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : tree_adj[x]) {
      if (c.hat[y]) continue;
      c.hat[y] = x;
      ++reached;
      queue.push_back(y);
    }
  }
  if (reached != g0.nodes.size()) throw std::invalid_argument("tree does not span Gamma_0");

  c.bar.assign(g.node_count(), std::nullopt);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g0.contains(v)) continue;
    std::vector<NodeId> in_u, in_v0;
    for (NodeId w : g0.nodes) {
      if (w == v || !a.order.leq(v, w)) continue;
      in_v0.push_back(w);
      if (g0.in_U(w)) in_u.push_back(w);
    }
    c.bar[v] = in_u.empty() ? least_by_name(g, in_v0) : least_by_name(g, in_u);
    if (!c.bar[v]) throw std::logic_error("node " + g.name(v) + " has no dominator in Gamma_0");
  }
  return c;
}

GeneratorChoices default_choices(const GraphAnalysis& a) {
  const DefiningGraph& g = a.graph;
  std::optional<Edge> best;
  int best_score = -1;
  auto key = [&](Edge e) {
    NodeId p = e.u, q = e.v;
    if (g.name_less(q, p)) std::swap(p, q);
    return std::make_pair(g.name(p), g.name(q));
  };
  for (Edge e : a.gamma0.edges) {
    const int score = int(!a.pieces.is_hub(e.u)) + int(!a.pieces.is_hub(e.v));
    if (score > best_score || (score == best_score && key(e) < key(*best))) {
      best = e;
      best_score = score;
    }
  }
  if (!best) throw std::invalid_argument("Gamma_0 has no edges");
  NodeId v0 = best->u, w0 = best->v;
  if (g.name_less(w0, v0)) std::swap(v0, w0);
  return make_choices(a, v0, w0);
}

std::size_t GeneratorSet::uncertified_pairs() const {
  return static_cast<std::size_t>(
      std::count_if(certificates.begin(), certificates.end(), [](const auto& c) { return !c.certified(); }));
}

GeneratorSet build_generator_set(const GraphAnalysis& a, const GeneratorChoices& choices,
                                 const GeneratorOptions& options) {
  const DefiningGraph& g = a.graph;
  const GammaZero& g0 = a.gamma0;
  GeneratorSet gs;
  gs.group = make_group(g);
  gs.choices = choices;
  const ArtinGroupPtr& G = gs.group;

  // (1) partial conjugations by v̂ on the components of Γ − {v} away from v̂
  for (NodeId v : g0.nodes) {
    const NodeId hat = choices.hat.at(v).value();
    for (const auto& comp : components_without(g, v)) {
      if (std::binary_search(comp.begin(), comp.end(), hat)) continue;
      Generator gen{GeneratorKind::PartialConjugation,
                    partial_conjugation(G, comp, hat, 1),
                    partial_conjugation(G, comp, hat, -1),
                    v,
                    hat,
                    comp,
                    "conj(" + set_label(g, comp) + ") by " + g.name(hat)};
      gs.generators.push_back(std::move(gen));
    }
  }

  // (2) two transvections per leaf, (3) two per non-leaf outside Γ₀
  for (NodeId u : g.nodes_by_name()) {
    if (g0.contains(u)) continue;
    if (g.is_leaf(u)) {
      const NodeId v = g.neighbors(u)[0];
      const NodeId hat = choices.hat.at(v).value();
      for (auto [kind, by] : {std::pair{GeneratorKind::LeafTransvection, v},
                              std::pair{GeneratorKind::LeafTransvectionHat, hat}}) {
        gs.generators.push_back({kind, right_transvection(G, u, by, 1), right_transvection(G, u, by, -1), u, by,
                                 {u}, g.name(u) + " -> " + g.name(u) + " " + g.name(by)});
      }
    } else {
      const NodeId bar = choices.bar.at(u).value();
      gs.generators.push_back({GeneratorKind::RightTransvection, right_transvection(G, u, bar, 1),
                               right_transvection(G, u, bar, -1), u, bar, {u},
                               g.name(u) + " -> " + g.name(u) + " " + g.name(bar)});
      gs.generators.push_back({GeneratorKind::LeftTransvection, left_transvection(G, u, bar, 1),
                               left_transvection(G, u, bar, -1), u, bar, {u},
                               g.name(u) + " -> " + g.name(bar) + " " + g.name(u)});
    }
  }

  for (const Generator& gen : gs.generators) {
    if (!gen.automorphism.respects_relations())
      throw std::logic_error("generator " + gen.label + " does not respect the relations");
    if (!compose(gen.automorphism, gen.inverse).is_identity() || !compose(gen.inverse, gen.automorphism).is_identity())
      throw std::logic_error("generator " + gen.label + " has no two-sided inverse");
  }

  if (options.certify_commutation) gs.certificates = verify_commuting(gs, options.conjugator_bound);
  if (options.compute_lattice) gs.lattice = inner_lattice(gs, options.exponent_bound, options.search_cap);
  return gs;
}

std::vector<CommutationCertificate> verify_commuting(const GeneratorSet& gs, std::size_t bound) {
  std::vector<CommutationCertificate> out;
  const auto& gens = gs.generators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      RaagAutomorphism c =
          commutator(gens[i].automorphism, gens[i].inverse, gens[j].automorphism, gens[j].inverse);
      CommutationCertificate cert;
      cert.first = i;
      cert.second = j;
      cert.bound = bound;
      cert.trivial_in_aut = c.is_identity();
      if (cert.trivial_in_aut) {
        cert.conjugator = Word{};
      } else {
        InnerSearch s = find_inner_conjugator(c, bound);
        cert.conjugator = s.conjugator;
        cert.exhaustive = s.exhaustive;
      }
      out.push_back(std::move(cert));
    }
  }
  return out;
}

RaagAutomorphism generator_product(const GeneratorSet& gs, const IntVector& exponents) {
  if (exponents.size() != gs.generators.size()) throw std::invalid_argument("one exponent per generator required");
  RaagAutomorphism out = RaagAutomorphism::identity(gs.group);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) out = compose(out, power(gs.generators[i], exponents[i]));
  return out;
}

namespace {

// Every generator fixes v₀ and w₀, so an inner product must be conjugation
// by an element of their centraliser; we test v₀^a w₀^b with |a|, |b| <= 1.
class InnerMatcher {
 public:
  explicit InnerMatcher(const GeneratorSet& gs) : group_(*gs.group) {
    const NodeId v0 = gs.choices.v0, w0 = gs.choices.w0;
    for (int a = -1; a <= 1; ++a)
      for (int b = -1; b <= 1; ++b) {
        Word g;
        if (a) g.push_back({v0, a});
        if (b) g.push_back({w0, b});
        candidates_.push_back({a, b, g});
      }
  }

  std::optional<std::pair<int, int>> match(const RaagAutomorphism& phi) const {
    // abelianisation and length filter before the word-problem checks
    for (NodeId x = 0; x < group_.rank(); ++x) {
      const Word& img = phi.image(x);
      if (img.size() > 5 || img.size() % 2 == 0) return std::nullopt;
      int sum_x = 0;
      for (const Letter& l : img)
        if (l.gen == x) sum_x += l.exp;
      if (sum_x != 1) return std::nullopt;
    }
    for (const auto& c : candidates_)
      if (is_conjugation_by(phi, c.word)) return std::pair{c.a, c.b};
    return std::nullopt;
  }

 private:
  struct Candidate {
    int a, b;
    Word word;
  };
  const ArtinGroup& group_;
  std::vector<Candidate> candidates_;
};

}  // namespace

InnerLattice inner_lattice(const GeneratorSet& gs, int exponent_bound, std::size_t cap) {
  InnerLattice result;
  result.exponent_bound = exponent_bound;
  const std::size_t n = gs.generators.size();
  const InnerMatcher matcher(gs);
  std::vector<IntVector> found;

  auto record = [&](const IntVector& e, const RaagAutomorphism& phi) {
    if (std::all_of(e.begin(), e.end(), [](long x) { return x == 0; })) return;
    if (auto ab = matcher.match(phi)) {
      found.push_back(e);
      result.witnesses.push_back({e, ab->first, ab->second});
    }
  };

  // powers g_i^e for every e in [-bound, bound]
  std::vector<std::vector<RaagAutomorphism>> powers(n);
  for (std::size_t i = 0; i < n; ++i)
    for (long e = -exponent_bound; e <= exponent_bound; ++e) powers[i].push_back(power(gs.generators[i], e));

  const std::size_t width = 2 * static_cast<std::size_t>(exponent_bound) + 1;
  long double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= width;

  if (total <= static_cast<long double>(cap)) {
    // full cube, depth first with incremental composition
    IntVector e(n, 0);
    std::function<void(std::size_t, const RaagAutomorphism&)> dfs = [&](std::size_t i, const RaagAutomorphism& acc) {
      if (i == n) {
        ++result.searched;
        record(e, acc);
        return;
      }
      for (long k = -exponent_bound; k <= exponent_bound; ++k) {
        e[i] = k;
        if (k == 0)
          dfs(i + 1, acc);
        else
          dfs(i + 1, compose(acc, powers[i][static_cast<std::size_t>(k + exponent_bound)]));
      }
      e[i] = 0;
    };
    dfs(0, RaagAutomorphism::identity(gs.group));
  } else {
    // by increasing support size until the cap is reached
    result.partial = true;
    std::vector<long> nonzero;
    for (long k = -exponent_bound; k <= exponent_bound; ++k)
      if (k) nonzero.push_back(k);
    bool stop = false;
    for (std::size_t s = 1; s <= n && !stop; ++s) {
      std::vector<std::size_t> idx(s);
      for (std::size_t i = 0; i < s; ++i) idx[i] = i;
      while (!stop) {
        std::vector<std::size_t> choice(s, 0);
        while (true) {
          IntVector e(n, 0);
          RaagAutomorphism acc = RaagAutomorphism::identity(gs.group);
          for (std::size_t t = 0; t < s; ++t) {
            e[idx[t]] = nonzero[choice[t]];
            acc = compose(acc, powers[idx[t]][static_cast<std::size_t>(e[idx[t]] + exponent_bound)]);
          }
          record(e, acc);
          if (++result.searched >= cap) {
            stop = true;
            break;
          }
          std::size_t t = 0;
          while (t < s && ++choice[t] == nonzero.size()) choice[t++] = 0;
          if (t == s) break;
        }
        // next combination
        std::size_t t = s;
        while (t > 0 && idx[t - 1] == n - s + t - 1) --t;
        if (t == 0) break;
        ++idx[t - 1];
        for (std::size_t u = t; u < s; ++u) idx[u] = idx[u - 1] + 1;
      }
    }
  }

  result.rank = integer_rank(found);
  return result;
}

}  // namespace outvcd
