#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nectar/cover.hpp"
#include "nectar/graph.hpp"
#include "nectar/objectives.hpp"

namespace nectar {

enum class ObjectiveChoice { Auto, QExt, Wocc };
enum class SearchMode { NodeCentric, CommunityCentric };

struct AlgorithmConfig {
  double beta = 1.0;       // relative-gain threshold, >= 1
  double alpha = 0.8;      // merge threshold on relative overlap, in (0,1]
  int max_iter = 20;       // bound on external iterations
  double tr_rate = 5.0;    // per-node triangle rate that switches to WOCC
  ObjectiveChoice objective = ObjectiveChoice::Auto;
  SearchMode mode = SearchMode::NodeCentric;
  std::uint64_t rng_seed = 0;

  /// Throws std::invalid_argument on out-of-range parameters.
  void validate() const;
};

struct RunReport {
  Cover cover;
  int iterations = 0;
  bool converged = false;
  ObjectiveKind objective = ObjectiveKind::QExt;
  double objective_value = 0.0;
  double beta = 1.0;
  // Aggregates over the runs a sweep performed (a single run counts itself).
  int sweep_size = 1;
  int sweep_converged = 0;
  int sweep_max_iterations = 0;
};

/// Starting cover for the given objective: singletons for extended
/// modularity; for WOCC, nodes scanned by decreasing clustering coefficient
/// (ties by ascending id) found a community of themselves plus their not yet
/// placed neighbors.
Cover initialize_cover(const Graph& graph, ObjectiveKind objective);

/// Communities whose gain times beta reaches the maximum gain, in candidate
/// order; empty when the table is empty or no gain is positive (the caller
/// then keeps the node as a singleton).
std::vector<std::uint32_t> select_by_beta(const GainTable& gains, double beta);

/// One local-search run. config.mode picks the node-centric loop or the
/// community-centric variant.
RunReport run(const Graph& graph, const AlgorithmConfig& config);

/// Runs once per beta (independent seeds derived from config.rng_seed) and
/// returns the report with the best whole-cover objective value, first wins
/// on ties. Runs execute in parallel; the result is deterministic.
RunReport beta_sweep(const Graph& graph, const AlgorithmConfig& config,
                     std::span<const double> betas);

/// Default sweep grid: 12 log-spaced values in [1.1, 20] for WOCC,
/// 13 linearly spaced values in [1.01, 1.4] for extended modularity.
std::vector<double> default_beta_grid(ObjectiveKind objective);

}  // namespace nectar
