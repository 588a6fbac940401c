#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nectar {

using NodeId = std::uint32_t;
using CommunityId = std::uint32_t;

/// Ordered set of node ids, stored as a sorted unique vector.
class NodeSet {
 public:
  NodeSet() = default;
  NodeSet(std::initializer_list<NodeId> ids) : ids_(ids) { normalize(); }
  explicit NodeSet(std::vector<NodeId> ids) : ids_(std::move(ids)) { normalize(); }

  bool contains(NodeId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }

  /// Returns true if v was not already present.
  bool insert(NodeId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it != ids_.end() && *it == v) return false;
    ids_.insert(it, v);
    return true;
  }

  /// Returns true if v was present.
  bool erase(NodeId v) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
    if (it == ids_.end() || *it != v) return false;
    ids_.erase(it);
    return true;
  }

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }

  std::span<const NodeId> ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

  static std::size_t intersection_size(const NodeSet& a, const NodeSet& b) {
    std::size_t count = 0;
    auto ia = a.ids_.begin(), ib = b.ids_.begin();
    while (ia != a.ids_.end() && ib != b.ids_.end()) {
      if (*ia < *ib) {
        ++ia;
      } else if (*ib < *ia) {
        ++ib;
      } else {
        ++count;
        ++ia;
        ++ib;
      }
    }
    return count;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<NodeId> ids_;
};

}  // namespace nectar
