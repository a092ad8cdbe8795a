#include "outvcd/automorphism.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace outvcd {

RaagAutomorphism::RaagAutomorphism(ArtinGroupPtr group, std::vector<Word> images)
    : group_(std::move(group)), images_(std::move(images)) {
  if (!group_) throw std::invalid_argument("automorphism without a group");
  if (images_.size() != group_->rank()) throw std::invalid_argument("one image per generator required");
  for (auto& w : images_) w = group_->reduce(w);
}

RaagAutomorphism RaagAutomorphism::identity(ArtinGroupPtr group) {
  std::vector<Word> images;
  for (NodeId x = 0; x < group->rank(); ++x) images.push_back({{x, 1}});
  return {std::move(group), std::move(images)};
}

Word RaagAutomorphism::apply(std::span<const Letter> w) const {
  Word out;
  for (const Letter& l : w) {
    const Word& img = images_.at(l.gen);
    if (l.exp > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return group_->reduce(out);
}

bool RaagAutomorphism::respects_relations() const {
  for (Edge e : group_->graph().edges()) {
    const Word& a = images_[e.u];
    const Word& b = images_[e.v];
    if (!group_->is_identity(concat({a, b, inverse(a), inverse(b)}))) return false;
  }
  return true;
}

bool RaagAutomorphism::is_identity() const {
  for (NodeId x = 0; x < images_.size(); ++x)
    if (images_[x] != Word{{x, 1}}) return false;
  return true;
}

bool RaagAutomorphism::equals(const RaagAutomorphism& other) const {
  if (!same_context(*group_, *other.group_)) return false;
  for (NodeId x = 0; x < images_.size(); ++x)
    if (!group_->is_identity(concat(images_[x], inverse(other.images_[x])))) return false;
  return true;
}

std::string RaagAutomorphism::describe() const {
  std::string out;
  for (NodeId x = 0; x < images_.size(); ++x) {
    if (images_[x] == Word{{x, 1}}) continue;
    if (!out.empty()) out += "; ";
    out += group_->graph().name(x) + " -> " + group_->format(images_[x]);
  }
  return out.empty() ? "id" : out;
}

bool same_context(const ArtinGroup& a, const ArtinGroup& b) {
  if (&a == &b) return true;
  return a.graph().names() == b.graph().names() && a.graph().edges() == b.graph().edges();
}

RaagAutomorphism compose(const RaagAutomorphism& phi, const RaagAutomorphism& psi) {
  if (!same_context(phi.group(), psi.group())) throw std::invalid_argument("automorphisms of different groups");
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const Word& w : psi.images()) images.push_back(phi.apply(w));
  return {phi.group_ptr(), std::move(images)};
}

RaagAutomorphism conjugation(ArtinGroupPtr group, std::span<const Letter> g) {
  std::vector<Word> images;
  for (NodeId x = 0; x < group->rank(); ++x) images.push_back(concat({g, Word{{x, 1}}, inverse(g)}));
  return {std::move(group), std::move(images)};
}

RaagAutomorphism partial_conjugation(ArtinGroupPtr group, std::span<const NodeId> support, NodeId by, int exp) {
  auto phi = RaagAutomorphism::identity(group);
  std::vector<Word> images = phi.images();
  for (NodeId x : support) images.at(x) = {{by, exp}, {x, 1}, {by, -exp}};
  return {std::move(group), std::move(images)};
}

RaagAutomorphism right_transvection(ArtinGroupPtr group, NodeId target, NodeId by, int exp) {
  std::vector<Word> images = RaagAutomorphism::identity(group).images();
  images.at(target) = {{target, 1}, {by, exp}};
  return {std::move(group), std::move(images)};
}

RaagAutomorphism left_transvection(ArtinGroupPtr group, NodeId target, NodeId by, int exp) {
  std::vector<Word> images = RaagAutomorphism::identity(group).images();
  images.at(target) = {{by, exp}, {target, 1}};
  return {std::move(group), std::move(images)};
}

RaagAutomorphism commutator(const RaagAutomorphism& phi, const RaagAutomorphism& phi_inv,
                            const RaagAutomorphism& psi, const RaagAutomorphism& psi_inv) {
  return compose(phi, compose(psi, compose(phi_inv, psi_inv)));
}

bool is_conjugation_by(const RaagAutomorphism& phi, std::span<const Letter> g) {
  const ArtinGroup& G = phi.group();
  const Word g_inv = inverse(g);
  for (NodeId x = 0; x < G.rank(); ++x) {
    // phi(x) · g x^-1 g^-1 must vanish
    Word probe = phi.image(x);
    probe.insert(probe.end(), g.begin(), g.end());
    probe.push_back({x, -1});
    probe.insert(probe.end(), g_inv.begin(), g_inv.end());
    if (!G.is_identity(probe)) return false;
  }
  return true;
}

namespace {

// Depth-first enumeration of canonical reduced words; prefixes of canonical
// words are canonical, so pruning on the prefix is exact.
bool enumerate_words(const ArtinGroup& G, Word& prefix, std::size_t max_len,
                     const std::function<bool(const Word&)>& visit) {
  if (visit(prefix)) return true;
  if (prefix.size() == max_len) return false;
  for (NodeId x = 0; x < G.rank(); ++x) {
    for (int e : {1, -1}) {
      prefix.push_back({x, e});
      if (G.is_reduced(prefix) && G.canonical(prefix) == prefix) {
        if (enumerate_words(G, prefix, max_len, visit)) return true;
      }
      prefix.pop_back();
    }
  }
  return false;
}

}  // namespace

InnerSearch find_inner_conjugator(const RaagAutomorphism& phi, std::size_t bound) {
  const ArtinGroup& G = phi.group();
  InnerSearch result;
  result.bound = bound;

  auto accept = [&](const Word& g) {
    ++result.candidates;
    if (g.size() <= bound && is_conjugation_by(phi, g)) {
      result.conjugator = g;
      return true;
    }
    return false;
  };

  if (phi.is_identity()) {
    result.conjugator = Word{};
    return result;
  }

  for (NodeId x = 0; x < G.rank(); ++x) {
    if (phi.image(x) == Word{{x, 1}}) continue;
    CyclicReduction cr = G.cyclic_reduce(phi.image(x));
    if (cr.core != Word{{x, 1}}) continue;
    if (accept(G.reduce(cr.conjugator))) return result;
    // the conjugator is only determined up to the centraliser of x, generated by st(x)
    std::vector<NodeId> star{x};
    for (NodeId y : G.graph().neighbors(x)) star.push_back(y);
    for (NodeId y : star)
      for (int e : {1, -1}) {
        Word g = cr.conjugator;
        g.push_back({y, e});
        if (accept(G.reduce(g))) return result;
      }
  }

  Word prefix;
  enumerate_words(G, prefix, bound, [&](const Word& g) { return accept(g); });
  result.exhaustive = !result.conjugator.has_value();
  return result;
}

std::optional<Word> free_inner_conjugator(const RaagAutomorphism& phi) {
  const ArtinGroup& F = phi.group();
  if (F.graph().edge_count() != 0) throw std::invalid_argument("free_inner_conjugator needs a free group");
  const std::size_t n = F.rank();
  if (n == 0 || phi.is_identity()) return Word{};

  std::vector<Word> conj(n);
  for (NodeId x = 0; x < n; ++x) {
    CyclicReduction cr = F.cyclic_reduce(phi.image(x));
    if (cr.core != Word{{x, 1}}) return std::nullopt;
    conj[x] = std::move(cr.conjugator);
  }
  if (n == 1) return conj[0];

  // g = c_0 x_0^i = c_1 x_1^j, so c_0^-1 c_1 must read x_0^i x_1^-j.
  Word h = F.reduce(concat(inverse(conj[0]), conj[1]));
  std::size_t pos = 0;
  int i = 0;
  while (pos < h.size() && h[pos].gen == 0) i += h[pos++].exp;
  while (pos < h.size() && h[pos].gen == 1) ++pos;
  if (pos != h.size()) return std::nullopt;

  Word g = conj[0];
  for (int k = 0; k < std::abs(i); ++k) g.push_back({0, i > 0 ? 1 : -1});
  g = F.reduce(g);
  if (!is_conjugation_by(phi, g)) return std::nullopt;
  return g;
}

bool nielsen_certifies_basis(const ArtinGroup& F, std::vector<Word> images) {
  for (auto& w : images) w = F.reduce(w);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < images.size(); ++i) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        if (i == j || images[j].empty()) continue;
        const Word inv = inverse(images[j]);
        for (const Word* other : std::initializer_list<const Word*>{&images[j], &inv}) {
          for (bool right : {true, false}) {
            Word candidate = right ? F.reduce(concat(images[i], *other)) : F.reduce(concat(*other, images[i]));
            if (candidate.size() < images[i].size()) {
              images[i] = std::move(candidate);
              changed = true;
            }
          }
        }
      }
    }
  }
  std::vector<char> hit(F.rank(), 0);
  for (const Word& w : images) {
    if (w.size() != 1 || hit[w[0].gen]) return false;
    hit[w[0].gen] = 1;
  }
  return images.size() == F.rank();
}

}  // namespace outvcd
