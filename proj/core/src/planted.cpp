#include "nectar/planted.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "nectar/rng.hpp"

namespace nectar {

void PlantedPartitionSpec::validate() const {
  if (communities == 0 || community_size == 0) {
    throw std::invalid_argument("community grid must be nonempty");
  }
  if (!(p_in >= 0.0 && p_in <= 1.0 && p_out >= 0.0 && p_out <= 1.0)) {
    throw std::invalid_argument("edge probabilities must lie in [0, 1]");
  }
  if (p_out > p_in) {
    throw std::invalid_argument("p_out must not exceed p_in");
  }
  if (overlap_nodes > node_count()) {
    throw std::invalid_argument("more overlap nodes than nodes");
  }
  if (overlap_nodes > 0 && (memberships_per_overlap_node < 1 ||
                            memberships_per_overlap_node > communities)) {
    throw std::invalid_argument("memberships per overlap node out of range");
  }
}

PlantedGraph generate_planted(const PlantedPartitionSpec& spec) {
  spec.validate();
  std::size_t n = spec.node_count();
  Rng rng(spec.seed);

  // Base assignment: node v lives in block v / community_size.
  std::vector<std::vector<std::size_t>> memberships(n);
  for (NodeId v = 0; v < n; ++v) {
    memberships[v].push_back(v / spec.community_size);
  }

  // Overlap nodes get extra blocks, sampled without replacement.
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  rng.shuffle(pool);
  for (std::size_t i = 0; i < spec.overlap_nodes; ++i) {
    NodeId v = pool[i];
    while (memberships[v].size() < spec.memberships_per_overlap_node) {
      std::size_t block = rng.below(spec.communities);
      auto& ms = memberships[v];
      if (std::find(ms.begin(), ms.end(), block) == ms.end()) ms.push_back(block);
    }
  }

  std::vector<NodeSet> truth(spec.communities);
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t block : memberships[v]) truth[block].insert(v);
  }

  auto share_block = [&](NodeId u, NodeId v) {
    for (std::size_t a : memberships[u]) {
      for (std::size_t b : memberships[v]) {
        if (a == b) return true;
      }
    }
    return false;
  };

  std::vector<Graph::Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      double p = share_block(u, v) ? spec.p_in : spec.p_out;
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }

  return PlantedGraph{Graph(n, edges), std::move(truth)};
}

}  // namespace nectar
