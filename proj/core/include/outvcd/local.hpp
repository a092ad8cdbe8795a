#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "outvcd/automorphism.hpp"

namespace outvcd {

/// An automorphism of the free group F(L_v) on the link of v. Generator i of
/// `free_group` stands for the node link[i] of Γ and carries its name.
struct LocalAutomorphism {
  ArtinGroupPtr free_group;
  NodeId center = 0;
  std::vector<NodeId> link;
  RaagAutomorphism map;
  bool invertibility_certified = false;

  /// Local generator index of a link node, if it is one.
  std::optional<NodeId> local_id(NodeId w) const;
};

/// Retracts φ̂(w) for every w in L_v onto the letters of L_v and reduces in F(L_v).
LocalAutomorphism project_local(const RaagAutomorphism& phi, NodeId v);

/// Trivial in Out(F(L_v)).
bool is_trivial_outer(const LocalAutomorphism& local);

/// Local automorphism w -> g_w w g_w⁻¹ given conjugators in the letters of L_v
/// (Γ node ids). Missing entries mean g_w = 1.
LocalAutomorphism local_from_conjugators(const ArtinGroupPtr& group, NodeId v,
                                         const std::map<NodeId, Word>& conjugators);

/// Conjugators g_w read off a local automorphism by cyclic reduction, in Γ
/// node ids. Empty when some image is not a conjugate of its generator.
std::optional<std::map<NodeId, Word>> local_conjugators(const LocalAutomorphism& local);

/// Lift to A_Γ for a tree Γ: v is fixed, w in L_v goes to g_w w g_w⁻¹ and
/// every u outside st(v) is conjugated by g_w for the link node w of its
/// component of Γ − {v}. Throws std::invalid_argument when Γ is not a tree
/// or some g_w has letters outside L_v, and std::logic_error if the
/// projections of the lift do not come out as required.
RaagAutomorphism lift_local(const ArtinGroupPtr& group, NodeId v, const std::map<NodeId, Word>& conjugators);

/// Failed postconditions of a lift (empty when it projects back to the input
/// at v and trivially at every other node of Γ₀).
std::vector<std::string> lift_anomalies(const RaagAutomorphism& lift, NodeId v,
                                        const std::map<NodeId, Word>& conjugators,
                                        const std::vector<NodeId>& gamma0_nodes);

/// Conjugator data of a random product of `steps` Whitehead partial
/// conjugations of F(L_v) (x -> y^e x y^-e on a subset avoiding y).
std::map<NodeId, Word> random_local_conjugators(const ArtinGroupPtr& group, NodeId v, std::mt19937& rng,
                                                std::size_t steps);

}  // namespace outvcd
