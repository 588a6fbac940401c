#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "nectar/cover.hpp"
#include "nectar/graph.hpp"
#include "nectar/node_set.hpp"

namespace nectar {

enum class ObjectiveKind { QExt, Wocc };

std::string_view to_string(ObjectiveKind kind);

/// Picks the objective for a graph: WOCC when the average number of
/// triangles per node (distinct triangles / |V|) reaches tr_rate
/// (inclusive), extended modularity otherwise.
ObjectiveKind select_objective(const Graph& graph, double tr_rate);

/// Extended modularity of an overlapping cover:
///   1/(2|E|) * sum over communities C, ordered pairs (i,j) in CxC of
///   [A_ij - k_i k_j / (2|E|)] / (O_i O_j).
/// Nodes outside every community count as implicit singletons with O = 1;
/// on a partition this reduces to Newman modularity. Throws when |E| = 0.
double q_ext(const Graph& graph, const Cover& cover);

/// Surrogate gain of adding v to community c:
///   sum over i in c of [A_iv - k_i k_v / (2|E|)] / O_i.
/// Requires v to hold no memberships (throws otherwise).
double delta_q_ext(const Graph& graph, const Cover& cover, NodeId v, CommunityId c);

/// WCC(v,S) = t(v,S)/t(v,V) * vt(v,V) / (|S \ {v}| + vt(v, V \ S)),
/// or 0 when v closes no triangle at all. Always in [0,1].
double wcc_node(const Graph& graph, NodeId v, const NodeSet& s);

/// Mean of wcc_node over the members of s. Throws on an empty set.
double wcc_community(const Graph& graph, const NodeSet& s);

/// Cover-level objective: (1 / sum_C |C|) * sum_C |C| * WCC(C). The
/// membership-count normalizer makes overlapping covers comparable.
double wocc_cover(const Graph& graph, const Cover& cover);

/// Gain of adding v to community c, measured on the unnormalized cover sum:
/// U(c + v) - U(c) where U(S) = sum over u in S of WCC(u,S). The
/// post-insertion normalizer is the same for every candidate, so the argmax
/// matches full recomputation. Requires v to hold no memberships.
double delta_wocc(const Graph& graph, const Cover& cover, NodeId v, CommunityId c);

/// Whole-cover value of the given objective. Edgeless graphs score 0.
double objective_value(const Graph& graph, const Cover& cover, ObjectiveKind kind);

struct Gain {
  std::uint32_t id;  // community id (node-centric) or node id (community-centric)
  double value;
};
using GainTable = std::vector<Gain>;

/// Gain computations with reusable scratch, shared by one algorithm run.
class GainEvaluator {
 public:
  GainEvaluator(const Graph& graph, ObjectiveKind kind);

  /// Gains of adding detached node v to each candidate community, in
  /// candidate order.
  GainTable node_gains(const Cover& cover, NodeId v,
                       std::span<const CommunityId> candidates);

  /// Gain of community c absorbing outside node v, which may hold other
  /// memberships: extended-modularity gains are divided by O_v.
  double join_gain(const Cover& cover, NodeId v, CommunityId c);

  /// Detach-and-rejoin gain of an existing member; only the sign matters
  /// (non-positive means the member no longer belongs).
  double rejoin_gain(const Cover& cover, NodeId member, CommunityId c);

 private:
  double q_ext_gain(const Cover& cover, NodeId v, CommunityId c) const;
  double wocc_gain(const Cover& cover, NodeId v, CommunityId c);
  double wcc_in_mask(NodeId v, std::size_t set_size) const;

  const Graph* graph_;
  ObjectiveKind kind_;
  MemberMask mask_;
};

}  // namespace nectar
