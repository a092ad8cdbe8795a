#include "outvcd/morse.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace outvcd {

namespace {

struct OrderOutcome {
  std::size_t cone_checks = 0;
  std::size_t link_isomorphisms = 0;
  std::vector<std::string> failures;
};

// Collapses b = b_1 onto x; pairs keep their ids and later singles shift down.
std::uint32_t merge_mask(const HalfEdgeSet& h, std::uint32_t mask, std::uint32_t x) {
  const std::uint32_t b = h.b(1);
  auto f = [&](std::uint32_t id) {
    if (id == b) id = x;
    return id > b ? id - 1 : id;
  };
  std::uint32_t out = 0;
  for (std::uint32_t id = 0; id < h.size(); ++id)
    if ((mask >> id) & 1u) out |= 1u << f(id);
  return out;
}

class Checker {
 public:
  Checker(int r, int s, std::size_t tie_orders, std::uint32_t seed,
          std::map<std::pair<int, int>, bool>& memo)
      : h_{r, s}, tie_orders_(tie_orders), seed_(seed), memo_(memo) {
    vertices_ = enumerate_ideal_edges(h_, true);
    base_ = IdealEdge{s == 0 ? (1u << h_.abar(1)) | 1u : (1u << h_.b(1)) | 1u};
    apex_extra_ = s == 0 ? 1u << h_.abar(1) : 1u << h_.b(1);
    for (std::size_t i = 0; i < vertices_.size(); ++i) index_[vertices_[i].inside] = i;
  }

  MorseCertificate run() {
    MorseCertificate cert;
    cert.r = h_.r;
    cert.s = h_.s;
    cert.base = base_;
    cert.vertices = vertices_.size();
    if (!index_.contains(base_.inside)) {
      cert.verdict = "base edge is not a legal ideal edge";
      cert.failures.push_back(format(h_, base_));
      return cert;
    }

    std::vector<char> in_star(vertices_.size(), 0);
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (vertices_[i] == base_ || compatible(h_, vertices_[i], base_)) {
        in_star[i] = 1;
        ++cert.star_vertices;
      } else {
        rest.push_back(i);
      }
    }

    for (std::size_t t = 0; t < std::max<std::size_t>(tie_orders_, 1); ++t) {
      OrderOutcome o = run_order(in_star, tie_order(rest, t));
      ++cert.tie_orders_tried;
      if (o.failures.empty()) ++cert.tie_orders_passed;
      if (t == 0) {
        cert.cone_checks = o.cone_checks;
        cert.link_isomorphisms = o.link_isomorphisms;
      }
      if (cert.failures.empty() && !o.failures.empty()) cert.failures = std::move(o.failures);
    }
    cert.recursion.assign(recursion_.begin(), recursion_.end());
    cert.certified = cert.tie_orders_passed == cert.tie_orders_tried;
    if (cert.certified)
      cert.verdict = "collapsible per proof order";
    else if (cert.tie_orders_passed > 0)
      cert.verdict = "collapsible only under some tie orders (" + std::to_string(cert.tie_orders_passed) + "/" +
                     std::to_string(cert.tie_orders_tried) + ")";
    else
      cert.verdict = "descending link check failed";
    return cert;
  }

 private:
  std::vector<std::size_t> tie_order(std::vector<std::size_t> rest, std::size_t t) const {
    auto by_size = [&](std::size_t i, std::size_t j) { return vertices_[i].size() < vertices_[j].size(); };
    if (t == 1) std::reverse(rest.begin(), rest.end());
    if (t >= 2) {
      std::mt19937 rng(seed_ + static_cast<std::uint32_t>(t));
      std::shuffle(rest.begin(), rest.end(), rng);
    }
    std::stable_sort(rest.begin(), rest.end(), by_size);
    return rest;
  }

  OrderOutcome run_order(std::vector<char> present, const std::vector<std::size_t>& order) {
    OrderOutcome o;
    const std::uint32_t top = h_.size() - 2;
    for (std::size_t i : order) {
      const IdealEdge alpha = vertices_[i];
      std::vector<std::size_t> desc;
      for (std::size_t j = 0; j < vertices_.size(); ++j)
        if (present[j] && j != i && compatible(h_, alpha, vertices_[j])) desc.push_back(j);

      if (h_.s >= 1 && alpha.size() == top) {
        ++o.link_isomorphisms;
        if (auto why = check_top_vertex(i, present); !why.empty()) o.failures.push_back(format(h_, alpha) + ": " + why);
      } else {
        ++o.cone_checks;
        if (auto why = check_cone(alpha, desc); !why.empty()) o.failures.push_back(format(h_, alpha) + ": " + why);
      }
      present[i] = 1;
    }
    return o;
  }

  std::string check_cone(IdealEdge alpha, const std::vector<std::size_t>& desc) const {
    const IdealEdge apex{alpha.inside | apex_extra_};
    if (!is_ideal_edge(h_, apex.inside)) return "apex is not an ideal edge";
    if (!is_legal(h_, apex)) return "apex is not legal";
    auto it = index_.find(apex.inside);
    if (it == index_.end()) return "apex missing";
    if (std::find(desc.begin(), desc.end(), it->second) == desc.end()) return "apex not in the descending link";
    for (std::size_t j : desc)
      if (!compatible(h_, apex, vertices_[j])) return "apex incompatible with " + format(h_, vertices_[j]);
    return {};
  }

  std::string check_top_vertex(std::size_t i, const std::vector<char>& present) {
    const IdealEdge beta = vertices_[i];
    const std::uint32_t out = beta.outside(h_);
    const std::uint32_t b = h_.b(1);
    if (!((out >> b) & 1u)) return "outside does not contain b";
    const std::uint32_t x = static_cast<std::uint32_t>(std::countr_zero(out & ~(1u << b)));

    std::vector<std::size_t> link;
    for (std::size_t j = 0; j < vertices_.size(); ++j)
      if (j != i && compatible(h_, beta, vertices_[j])) {
        if (!present[j]) return "link vertex " + format(h_, vertices_[j]) + " comes later";
        link.push_back(j);
      }

    const HalfEdgeSet smaller{h_.r, h_.s - 1};
    const auto target = enumerate_ideal_edges(smaller, true);
    std::vector<IdealEdge> image;
    for (std::size_t j : link) {
      const IdealEdge e{merge_mask(h_, vertices_[j].inside, x)};
      if (!is_ideal_edge(smaller, e.inside) || !is_legal(smaller, e)) return "merged link vertex is not legal";
      image.push_back(e);
    }
    std::set<IdealEdge> distinct(image.begin(), image.end());
    if (distinct.size() != image.size()) return "merge is not injective on the link";
    if (distinct != std::set<IdealEdge>(target.begin(), target.end())) return "link does not match L(r,s-1)";
    for (std::size_t p = 0; p < link.size(); ++p)
      for (std::size_t q = p + 1; q < link.size(); ++q)
        if (compatible(h_, vertices_[link[p]], vertices_[link[q]]) != compatible(smaller, image[p], image[q]))
          return "merge does not preserve compatibility";

    const auto key = std::pair{smaller.r, smaller.s};
    recursion_.insert(key);
    auto it = memo_.find(key);
    if (it == memo_.end()) {
      Checker sub(smaller.r, smaller.s, tie_orders_, seed_, memo_);
      it = memo_.emplace(key, sub.run().certified).first;
    }
    return it->second ? std::string{} : "L(r,s-1) is not certified";
  }

  HalfEdgeSet h_;
  std::size_t tie_orders_;
  std::uint32_t seed_;
  std::map<std::pair<int, int>, bool>& memo_;
  std::vector<IdealEdge> vertices_;
  std::map<std::uint32_t, std::size_t> index_;
  IdealEdge base_;
  std::uint32_t apex_extra_ = 0;
  std::set<std::pair<int, int>> recursion_;
};

}  // namespace

MorseCertificate morse_collapse_certificate(int r, int s, std::size_t tie_orders, std::uint32_t seed) {
  if (r < 2) throw std::invalid_argument("hypothesis violation: the vertex must lie on at least 2 cycles (r >= 2)");
  if (s < 0) throw std::invalid_argument("s must be non-negative");
  if (2 * r + s > static_cast<int>(kMaxHalfEdges)) throw CapExceeded("more than 10 half-edges");
  std::map<std::pair<int, int>, bool> memo;
  Checker checker(r, s, tie_orders, seed, memo);
  return checker.run();
}

}  // namespace outvcd
