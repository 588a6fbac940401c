#pragma once

#include <cstdint>
#include <vector>

#include "nectar/graph.hpp"
#include "nectar/node_set.hpp"

namespace nectar {

/// Seeded planted-partition generator with optional overlap: blocks of equal
/// size, intra-block edges with probability p_in, cross-block edges with
/// p_out, and a chosen number of nodes assigned to extra blocks.
struct PlantedPartitionSpec {
  std::size_t communities = 4;
  std::size_t community_size = 32;
  double p_in = 0.3;
  double p_out = 0.02;
  std::size_t overlap_nodes = 0;
  std::size_t memberships_per_overlap_node = 2;
  std::uint64_t seed = 0;

  std::size_t node_count() const { return communities * community_size; }

  /// Throws std::invalid_argument when the parameters are inconsistent.
  void validate() const;
};

struct PlantedGraph {
  Graph graph;
  std::vector<NodeSet> truth;
};

PlantedGraph generate_planted(const PlantedPartitionSpec& spec);

}  // namespace nectar
