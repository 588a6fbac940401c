#include "nectar/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace nectar {

Cover::Cover(std::size_t node_count) : node_index_(node_count) {}

const NodeSet& Cover::members(CommunityId c) const {
  if (!alive(c)) throw std::invalid_argument("community id is not alive");
  return slots_[c];
}

CommunityId Cover::add_community(NodeSet members) {
  if (members.empty()) throw std::invalid_argument("community must be nonempty");
  for (NodeId v : members) {
    if (v >= node_count()) throw std::invalid_argument("member out of range");
  }
  auto id = static_cast<CommunityId>(slots_.size());
  total_membership_ += members.size();
  for (NodeId v : members) {
    auto& idx = node_index_[v];
    idx.insert(std::upper_bound(idx.begin(), idx.end(), id), id);
  }
  slots_.push_back(std::move(members));
  alive_.push_back(1);
  live_.push_back(id);  // ids grow monotonically, so live_ stays sorted
  return id;
}

void Cover::add_member(CommunityId c, NodeId v) {
  if (!alive(c)) throw std::invalid_argument("community id is not alive");
  if (v >= node_count()) throw std::invalid_argument("member out of range");
  if (!slots_[c].insert(v)) return;
  ++total_membership_;
  auto& idx = node_index_[v];
  idx.insert(std::upper_bound(idx.begin(), idx.end(), c), c);
}

void Cover::remove_member(CommunityId c, NodeId v) {
  if (!alive(c)) throw std::invalid_argument("community id is not alive");
  if (!slots_[c].erase(v)) return;
  --total_membership_;
  auto& idx = node_index_[v];
  idx.erase(std::lower_bound(idx.begin(), idx.end(), c));
  if (slots_[c].empty()) erase_community(c);
}

std::vector<CommunityId> Cover::remove_node_from_all(NodeId v) {
  std::vector<CommunityId> prior(node_index_[v].begin(), node_index_[v].end());
  for (CommunityId c : prior) {
    slots_[c].erase(v);
    --total_membership_;
    if (slots_[c].empty()) erase_community(c);
  }
  node_index_[v].clear();
  return prior;
}

std::vector<CommunityId> Cover::neighboring_communities(const Graph& graph,
                                                        NodeId v) const {
  std::vector<CommunityId> result;
  for (NodeId u : graph.neighbors(v)) {
    result.insert(result.end(), node_index_[u].begin(), node_index_[u].end());
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

bool Cover::merge_overlapping(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("merge threshold must lie in (0, 1]");
  }
  std::size_t before = live_.size();
  bool merged_any = true;
  while (merged_any) {
    merged_any = false;
    for (std::size_t i = 0; i < live_.size() && !merged_any; ++i) {
      for (std::size_t j = i + 1; j < live_.size() && !merged_any; ++j) {
        CommunityId a = live_[i];
        CommunityId b = live_[j];
        const NodeSet& sa = slots_[a];
        const NodeSet& sb = slots_[b];
        std::size_t overlap = NodeSet::intersection_size(sa, sb);
        std::size_t smaller = std::min(sa.size(), sb.size());
        double ratio = static_cast<double>(overlap) / static_cast<double>(smaller);
        if (ratio >= alpha) {
          // Fold b into a (a < b), then rescan from the lowest pair.
          for (NodeId v : sb) {
            auto& idx = node_index_[v];
            idx.erase(std::lower_bound(idx.begin(), idx.end(), b));
            --total_membership_;
            if (slots_[a].insert(v)) {
              ++total_membership_;
              idx.insert(std::upper_bound(idx.begin(), idx.end(), a), a);
            }
          }
          slots_[b] = NodeSet{};
          alive_[b] = 0;
          live_.erase(std::lower_bound(live_.begin(), live_.end(), b));
          merged_any = true;
        }
      }
    }
  }
  return live_.size() < before;
}

std::vector<NodeSet> Cover::snapshot() const {
  std::vector<NodeSet> result;
  result.reserve(live_.size());
  for (CommunityId c : live_) result.push_back(slots_[c]);
  return result;
}

void Cover::erase_community(CommunityId c) {
  slots_[c] = NodeSet{};
  alive_[c] = 0;
  live_.erase(std::lower_bound(live_.begin(), live_.end(), c));
}

}  // namespace nectar
