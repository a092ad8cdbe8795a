#include "outvcd/words.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace outvcd {

Word inverse(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

Word concat(std::span<const Letter> a, std::span<const Letter> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word concat(std::initializer_list<std::span<const Letter>> parts) {
  Word out;
  for (auto p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

ArtinGroup::ArtinGroup(DefiningGraph g) : graph_(std::move(g)), name_rank_(graph_.node_count()) {
  auto order = graph_.nodes_by_name();
  for (std::size_t i = 0; i < order.size(); ++i) name_rank_[order[i]] = i;
}

ArtinGroupPtr make_free_group(const std::vector<std::string>& names) {
  return make_group(DefiningGraph::from_edges(names, std::vector<Edge>{}));
}

Word ArtinGroup::reduce(std::span<const Letter> w) const {
  Word out;
  out.reserve(w.size());
  for (const Letter& y : w) {
    if (y.gen >= rank()) throw std::invalid_argument("letter not in graph");
    bool cancelled = false;
    for (std::size_t j = out.size(); j-- > 0;) {
      if (out[j].gen == y.gen) {
        if (out[j].exp == -y.exp) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(j));
          cancelled = true;
        }
        break;
      }
      if (!commute(out[j].gen, y.gen)) break;
    }
    if (!cancelled) out.push_back(y);
  }
  return out;
}

bool ArtinGroup::is_reduced(std::span<const Letter> w) const { return reduce(w).size() == w.size(); }

bool ArtinGroup::letter_less(const Letter& a, const Letter& b) const {
  if (a.gen != b.gen) return name_rank_[a.gen] < name_rank_[b.gen];
  return a.exp > b.exp;
}

Word ArtinGroup::canonical(std::span<const Letter> w) const {
  Word rest = reduce(w);
  Word out;
  out.reserve(rest.size());
  std::vector<NodeId> seen;
  while (!rest.empty()) {
    // Letters that can be shuffled to the front: nothing earlier blocks them.
    std::size_t best = rest.size();
    seen.clear();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const NodeId gen = rest[i].gen;
      bool free = std::all_of(seen.begin(), seen.end(), [&](NodeId s) { return commute(s, gen); });
      if (free && (best == rest.size() || letter_less(rest[i], rest[best]))) best = i;
      if (std::find(seen.begin(), seen.end(), gen) == seen.end()) seen.push_back(gen);
    }
    out.push_back(rest[best]);
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

bool ArtinGroup::equal(std::span<const Letter> w1, std::span<const Letter> w2) const {
  const bool by_reduction = reduce(concat(w1, inverse(w2))).empty();
  const bool by_normal_form = canonical(w1) == canonical(w2);
  if (by_reduction != by_normal_form)
    throw std::logic_error("word problem: reduction and normal form disagree on " + format(w1) + " vs " +
                           format(w2));
  return by_reduction;
}

CyclicReduction ArtinGroup::cyclic_reduce(std::span<const Letter> input) const {
  CyclicReduction result;
  Word w = reduce(input);
  bool stripped = true;
  while (stripped && w.size() >= 2) {
    stripped = false;
    for (std::size_t i = 0; i < w.size() && !stripped; ++i) {
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) front = commute(w[j].gen, w[i].gen);
      if (!front) continue;
      // last occurrence of the same generator must be the inverse letter and movable to the end
      std::size_t last = w.size();
      for (std::size_t j = w.size(); j-- > i + 1;)
        if (w[j].gen == w[i].gen) {
          last = j;
          break;
        }
      if (last == w.size() || w[last].exp != -w[i].exp) continue;
      bool back = true;
      for (std::size_t j = last + 1; j < w.size() && back; ++j) back = commute(w[j].gen, w[i].gen);
      if (!back) continue;
      result.conjugator.push_back(w[i]);
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(last));
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
      w = reduce(w);
      stripped = true;
    }
  }
  result.core = std::move(w);
  return result;
}

Word ArtinGroup::conjugate(std::span<const Letter> g, std::span<const Letter> w) const {
  return reduce(concat({g, w, inverse(g)}));
}

Word ArtinGroup::parse(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  for (std::string token; in >> token;) {
    std::string name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      const std::string exponent = token.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exponent.data(), exponent.data() + exponent.size(), power);
      if (ec != std::errc{} || ptr != exponent.data() + exponent.size() || power == 0)
        throw std::invalid_argument("bad exponent in '" + token + "'");
    }
    auto gen = graph_.find(name);
    if (!gen) throw std::invalid_argument("letter '" + name + "' not in graph");
    const int sign = power > 0 ? 1 : -1;
    for (long k = 0; k < std::labs(power); ++k) out.push_back({*gen, sign});
  }
  return out;
}

std::string ArtinGroup::format(std::span<const Letter> w) const {
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += ' ';
    out += graph_.name(l.gen);
    if (l.exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace outvcd
