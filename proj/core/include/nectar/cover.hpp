#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nectar/graph.hpp"
#include "nectar/node_set.hpp"

namespace nectar {

/// Mutable overlapping cover: a set of communities plus a node -> communities
/// reverse index. Community ids are stable and never reused within the life
/// of a Cover; no empty community survives a public operation.
class Cover {
 public:
  explicit Cover(std::size_t node_count);

  std::size_t node_count() const { return node_index_.size(); }
  std::size_t community_count() const { return live_.size(); }
  bool alive(CommunityId c) const {
    return c < alive_.size() && alive_[c] != 0;
  }

  const NodeSet& members(CommunityId c) const;
  std::size_t community_size(CommunityId c) const { return members(c).size(); }

  /// Live community ids in ascending order.
  std::span<const CommunityId> community_ids() const { return live_; }

  /// Communities v belongs to, ascending. O_v = communities_of(v).size().
  std::span<const CommunityId> communities_of(NodeId v) const {
    return node_index_[v];
  }
  std::size_t membership_count(NodeId v) const { return node_index_[v].size(); }

  /// Sum of |C| over live communities; equals the sum of O_v over nodes.
  std::size_t total_membership() const { return total_membership_; }

  CommunityId add_community(NodeSet members);
  void add_member(CommunityId c, NodeId v);

  /// Removes v from community c; deletes c if it becomes empty.
  void remove_member(CommunityId c, NodeId v);

  /// Removes v from every community, deleting any community emptied by the
  /// removal. Returns the prior membership set of v.
  std::vector<CommunityId> remove_node_from_all(NodeId v);

  /// Communities containing at least one neighbor of v, ascending.
  std::vector<CommunityId> neighboring_communities(const Graph& graph, NodeId v) const;

  /// Repeatedly merges the lowest-id pair whose relative overlap
  /// |C1 n C2| / min(|C1|,|C2|) reaches alpha, until no pair qualifies.
  /// The surviving community keeps the smaller id. Returns whether the
  /// community count decreased.
  bool merge_overlapping(double alpha);

  /// Read-only copy of the live communities in ascending id order.
  std::vector<NodeSet> snapshot() const;

 private:
  void erase_community(CommunityId c);

  std::vector<NodeSet> slots_;
  std::vector<char> alive_;
  std::vector<CommunityId> live_;  // sorted ascending
  std::vector<std::vector<CommunityId>> node_index_;  // sorted per node
  std::size_t total_membership_ = 0;
};

}  // namespace nectar
