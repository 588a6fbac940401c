#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nectar/node_set.hpp"

namespace nectar {

/// Reusable membership bitset over the node universe. Assigning a new set
/// clears only the previously set bits, so repeated queries stay cheap.
class MemberMask {
 public:
  explicit MemberMask(std::size_t universe)
      : words_((universe + 63) / 64, 0), universe_(universe) {}

  void assign(std::span<const NodeId> ids) {
    clear();
    for (NodeId v : ids) add(v);
  }

  void add(NodeId v) {
    std::uint64_t bit = 1ULL << (v & 63);
    if (words_[v >> 6] & bit) return;
    words_[v >> 6] |= bit;
    members_.push_back(v);
  }

  void remove(NodeId v) {
    std::uint64_t bit = 1ULL << (v & 63);
    if (!(words_[v >> 6] & bit)) return;
    words_[v >> 6] &= ~bit;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] == v) {
        members_[i] = members_.back();
        members_.pop_back();
        break;
      }
    }
  }

  void clear() {
    for (NodeId v : members_) words_[v >> 6] &= ~(1ULL << (v & 63));
    members_.clear();
  }

  bool contains(NodeId v) const {
    return (words_[v >> 6] >> (v & 63)) & 1u;
  }

  std::size_t count() const { return members_.size(); }
  std::size_t universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
  std::vector<NodeId> members_;
  std::size_t universe_;
};

/// Immutable undirected simple graph with sorted adjacency lists, cached
/// degrees, and per-node triangle statistics. Safe for concurrent reads.
class Graph {
 public:
  using Edge = std::pair<NodeId, NodeId>;

  /// Builds a graph over nodes 0..node_count-1. Self-loops are skipped (and
  /// counted); duplicate and reversed-duplicate edges collapse to one.
  Graph(std::size_t node_count, std::span<const Edge> edges);
  Graph(std::size_t node_count, std::span<const Edge> edges,
        std::vector<std::string> labels);
  Graph(std::size_t node_count, std::initializer_list<Edge> edges)
      : Graph(node_count, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Parses "label label" lines; '#' lines and blank lines are ignored.
  /// Labels are interned to dense ids in first-appearance order. Throws
  /// ParseError (with line number) on lines that do not hold two tokens.
  static Graph load_edge_list(std::istream& in);

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  std::size_t self_loops_skipped() const { return self_loops_skipped_; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }

  bool has_edge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }

  /// t(v,S): triangles v closes with pairs of nodes from S (v's own
  /// membership in S is irrelevant).
  std::size_t triangles(NodeId v, const MemberMask& s) const;
  std::size_t triangles(NodeId v, const NodeSet& s) const;

  /// vt(v,S): nodes of S that form at least one triangle with v, where the
  /// third node may lie anywhere in the graph.
  std::size_t triangle_partners(NodeId v, const MemberMask& s) const;
  std::size_t triangle_partners(NodeId v, const NodeSet& s) const;

  /// t(v,V), cached at construction.
  std::size_t node_triangles(NodeId v) const { return tri_[v]; }
  /// vt(v,V), cached at construction.
  std::size_t node_triangle_partners(NodeId v) const {
    return partner_offsets_[v + 1] - partner_offsets_[v];
  }

  /// Neighbors of v that close at least one triangle with it, sorted.
  std::span<const NodeId> partners(NodeId v) const {
    return {partner_adj_.data() + partner_offsets_[v],
            partner_offsets_[v + 1] - partner_offsets_[v]};
  }

  /// Per-node triangle incidences averaged over nodes: sum_v t(v,V) / |V|.
  /// Throws on an empty graph.
  double triangle_rate() const;

  /// Number of distinct triangles, sum_v t(v,V) / 3.
  std::size_t triangle_count() const;

  /// t(v,V) / C(degree(v),2); zero when degree(v) < 2.
  double clustering_coefficient(NodeId v) const;

 private:
  void build(std::vector<Edge> edges);
  void build_triangle_tables();
  std::size_t common_neighbors(NodeId u, NodeId v) const;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t self_loops_skipped_ = 0;
  std::vector<std::uint32_t> offsets_;
  std::vector<NodeId> adj_;
  std::vector<std::string> labels_;

  // Triangle caches.
  std::vector<std::uint64_t> tri_;
  std::vector<std::uint32_t> partner_offsets_;
  std::vector<NodeId> partner_adj_;

  // Dense adjacency rows, built only for small graphs (n <= kBitsetNodeLimit)
  // where they make set-scoped triangle queries word-parallel.
  static constexpr std::size_t kBitsetNodeLimit = 4096;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> adj_bits_;

  std::span<const std::uint64_t> adj_row(NodeId v) const {
    return {adj_bits_.data() + v * words_per_row_, words_per_row_};
  }
};

}  // namespace nectar
