#include "nectar/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "nectar/errors.hpp"

namespace nectar {

Graph::Graph(std::size_t node_count, std::span<const Edge> edges)
    : Graph(node_count, edges, {}) {}

Graph::Graph(std::size_t node_count, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : n_(node_count), labels_(std::move(labels)) {
  if (labels_.empty()) {
    labels_.reserve(n_);
    for (std::size_t v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
  }
  if (labels_.size() != n_) {
    throw std::invalid_argument("label count does not match node count");
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) {
      ++self_loops_skipped_;
      continue;
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  build(std::move(normalized));
}

void Graph::build(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  m_ = edges.size();

  offsets_.assign(n_ + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];

  adj_.resize(2 * m_);
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  // Edges were inserted in sorted order, so every adjacency list is sorted.

  if (n_ > 0 && n_ <= kBitsetNodeLimit) {
    words_per_row_ = (n_ + 63) / 64;
    adj_bits_.assign(n_ * words_per_row_, 0);
    for (std::size_t v = 0; v < n_; ++v) {
      auto* row = adj_bits_.data() + v * words_per_row_;
      for (NodeId x : neighbors(static_cast<NodeId>(v))) {
        row[x >> 6] |= 1ULL << (x & 63);
      }
    }
  }

  build_triangle_tables();
}

std::size_t Graph::common_neighbors(NodeId u, NodeId v) const {
  if (words_per_row_ > 0) {
    auto a = adj_row(u);
    auto b = adj_row(v);
    std::size_t count = 0;
    for (std::size_t w = 0; w < words_per_row_; ++w) {
      count += std::popcount(a[w] & b[w]);
    }
    return count;
  }
  auto a = neighbors(u);
  auto b = neighbors(v);
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void Graph::build_triangle_tables() {
  tri_.assign(n_, 0);
  partner_offsets_.assign(n_ + 1, 0);
  std::vector<std::vector<NodeId>> partners(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    std::uint64_t incidences = 0;
    for (NodeId x : neighbors(static_cast<NodeId>(v))) {
      std::size_t c = common_neighbors(static_cast<NodeId>(v), x);
      incidences += c;
      if (c > 0) partners[v].push_back(x);
    }
    tri_[v] = incidences / 2;  // each triangle pair counted at both endpoints
    partner_offsets_[v + 1] = partner_offsets_[v] + partners[v].size();
  }
  partner_adj_.reserve(partner_offsets_[n_]);
  for (std::size_t v = 0; v < n_; ++v) {
    partner_adj_.insert(partner_adj_.end(), partners[v].begin(), partners[v].end());
  }
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  if (words_per_row_ > 0) {
    return (adj_row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  auto a = neighbors(u);
  auto b = neighbors(v);
  const auto& shorter = a.size() <= b.size() ? a : b;
  NodeId target = a.size() <= b.size() ? v : u;
  return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::size_t Graph::triangles(NodeId v, const MemberMask& s) const {
  if (words_per_row_ > 0) {
    auto row_v = adj_row(v);
    auto mask = s.words();
    std::size_t total = 0;
    for (NodeId x : neighbors(v)) {
      if (!s.contains(x)) continue;
      auto row_x = adj_row(x);
      for (std::size_t w = 0; w < words_per_row_; ++w) {
        total += std::popcount(row_v[w] & row_x[w] & mask[w]);
      }
    }
    return total / 2;
  }
  static thread_local std::vector<NodeId> scratch;
  scratch.clear();
  for (NodeId x : neighbors(v)) {
    if (s.contains(x)) scratch.push_back(x);
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    for (std::size_t j = i + 1; j < scratch.size(); ++j) {
      if (has_edge(scratch[i], scratch[j])) ++count;
    }
  }
  return count;
}

std::size_t Graph::triangles(NodeId v, const NodeSet& s) const {
  MemberMask mask(n_);
  mask.assign(s.ids());
  return triangles(v, mask);
}

std::size_t Graph::triangle_partners(NodeId v, const MemberMask& s) const {
  std::size_t count = 0;
  for (NodeId x : partners(v)) {
    if (s.contains(x)) ++count;
  }
  return count;
}

std::size_t Graph::triangle_partners(NodeId v, const NodeSet& s) const {
  std::size_t count = 0;
  for (NodeId x : partners(v)) {
    if (s.contains(x)) ++count;
  }
  return count;
}

double Graph::triangle_rate() const {
  if (n_ == 0) throw std::invalid_argument("triangle rate of an empty graph");
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += tri_[v];
  return static_cast<double>(total) / static_cast<double>(n_);
}

std::size_t Graph::triangle_count() const {
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += tri_[v];
  return total / 3;  // every triangle is incident to three nodes
}

double Graph::clustering_coefficient(NodeId v) const {
  std::size_t d = degree(v);
  if (d < 2) return 0.0;
  double pairs = 0.5 * static_cast<double>(d) * static_cast<double>(d - 1);
  return static_cast<double>(tri_[v]) / pairs;
}

Graph Graph::load_edge_list(std::istream& in) {
  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::size_t self_loops = 0;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a)) continue;  // blank line
    if (a.front() == '#') continue;
    if (!(tokens >> b) || (tokens >> extra)) {
      throw ParseError(line_number, "expected two whitespace-separated node labels");
    }
    NodeId u = intern(a);
    NodeId v = intern(b);
    if (u == v) {
      ++self_loops;
      continue;
    }
    edges.emplace_back(u, v);
  }

  std::size_t node_count = labels.size();
  Graph g(node_count, edges, std::move(labels));
  g.self_loops_skipped_ += self_loops;
  return g;
}

}  // namespace nectar
