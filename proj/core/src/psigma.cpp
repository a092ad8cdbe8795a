#include "outvcd/psigma.hpp"

#include <cstdlib>
#include <stdexcept>

#include "outvcd/lattice.hpp"

namespace outvcd {

namespace {

Word x1_power(long e) {
  Word w;
  for (long i = 0; i < std::abs(e); ++i) w.push_back({0, e > 0 ? 1 : -1});
  return w;
}

long lookup(const std::map<int, long>& m, int i) {
  auto it = m.find(i);
  return it == m.end() ? 0 : it->second;
}

}  // namespace

void validate(const PsigmaSpec& spec) {
  if (spec.n < 2) throw std::invalid_argument("PSigma(n,k) needs n >= 2");
  if (spec.k < 0 || spec.k > spec.n) throw std::invalid_argument("PSigma(n,k) needs 0 <= k <= n");
}

int psigma_vcd(int n, int k) {
  validate({n, k});
  return k >= 1 ? 2 * n - k - 2 : 2 * n - 3;
}

std::vector<long> ExponentVector::flatten(const PsigmaSpec& spec) const {
  std::vector<long> out;
  for (int i = 2; i <= spec.k; ++i) out.push_back(lookup(a, i));
  for (int i = spec.k + 1; i <= spec.n; ++i) {
    out.push_back(lookup(b, i));
    out.push_back(lookup(c, i));
  }
  return out;
}

ExponentVector ExponentVector::unflatten(const PsigmaSpec& spec, const std::vector<long>& values) {
  ExponentVector v;
  std::size_t pos = 0;
  auto next = [&]() {
    if (pos >= values.size()) throw std::invalid_argument("exponent vector too short");
    return values[pos++];
  };
  for (int i = 2; i <= spec.k; ++i) v.a[i] = next();
  for (int i = spec.k + 1; i <= spec.n; ++i) {
    v.b[i] = next();
    v.c[i] = next();
  }
  if (pos != values.size()) throw std::invalid_argument("exponent vector too long");
  return v;
}

ArtinGroupPtr psigma_free_group(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_free_group(names);
}

std::vector<PsigmaGenerator> psigma_generators(int n, int k) {
  validate({n, k});
  if (k == 0) throw std::invalid_argument("the generator family needs k >= 1");
  const ArtinGroupPtr F = psigma_free_group(n);
  std::vector<PsigmaGenerator> out;
  auto with_image = [&](int i, Word image) {
    std::vector<Word> images = RaagAutomorphism::identity(F).images();
    images[static_cast<std::size_t>(i - 1)] = std::move(image);
    return RaagAutomorphism(F, std::move(images));
  };
  const NodeId x1 = 0;
  for (int i = 2; i <= k; ++i) {
    const NodeId xi = static_cast<NodeId>(i - 1);
    out.push_back({"gamma" + std::to_string(i), with_image(i, {{x1, -1}, {xi, 1}, {x1, 1}})});
  }
  for (int i = k + 1; i <= n; ++i) {
    const NodeId xi = static_cast<NodeId>(i - 1);
    out.push_back({"lambda" + std::to_string(i), with_image(i, {{x1, 1}, {xi, 1}})});
    out.push_back({"rho" + std::to_string(i), with_image(i, {{xi, 1}, {x1, 1}})});
  }
  return out;
}

RaagAutomorphism apply_exponents(const PsigmaSpec& spec, const ExponentVector& v) {
  validate(spec);
  if (spec.k == 0) throw std::invalid_argument("exponent vectors need k >= 1");
  const ArtinGroupPtr F = psigma_free_group(spec.n);
  std::vector<Word> images = RaagAutomorphism::identity(F).images();
  for (int i = 2; i <= spec.n; ++i) {
    const Word xi{{static_cast<NodeId>(i - 1), 1}};
    auto& img = images[static_cast<std::size_t>(i - 1)];
    if (i <= spec.k) {
      const long a = lookup(v.a, i);
      img = concat({x1_power(-a), xi, x1_power(a)});
    } else {
      img = concat({x1_power(lookup(v.b, i)), xi, x1_power(lookup(v.c, i))});
    }
  }
  return {F, std::move(images)};
}

std::optional<long> inner_decision(const PsigmaSpec& spec, const ExponentVector& v) {
  validate(spec);
  if (spec.k == 0) throw std::invalid_argument("exponent vectors need k >= 1");
  std::optional<long> m;
  auto agree = [&](long value) {
    if (!m) m = value;
    return *m == value;
  };
  for (int i = 2; i <= spec.k; ++i)
    if (!agree(lookup(v.a, i))) return std::nullopt;
  for (int i = spec.k + 1; i <= spec.n; ++i)
    if (!agree(-lookup(v.b, i)) || !agree(lookup(v.c, i))) return std::nullopt;
  return m.value_or(0);
}

PsigmaRank outer_rank(const PsigmaSpec& spec) {
  validate(spec);
  if (spec.k == 0) throw std::invalid_argument("outer_rank is defined for k >= 1");
  PsigmaRank r;
  r.generators = static_cast<std::size_t>(2 * spec.n - spec.k - 1);
  if (r.generators > 12) throw std::invalid_argument("too many generators for the exponent search");

  std::vector<IntVector> inner;
  std::vector<long> values(r.generators, -1);
  while (true) {
    ++r.searched;
    if (inner_decision(spec, ExponentVector::unflatten(spec, values)).value_or(0) != 0) inner.push_back(values);
    std::size_t i = 0;
    while (i < values.size() && ++values[i] == 2) values[i++] = -1;
    if (i == values.size()) break;
  }
  r.inner_rank = integer_rank(inner);
  r.outer_rank = r.generators - r.inner_rank;
  return r;
}

}  // namespace outvcd
