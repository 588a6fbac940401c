#include "nectar/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "nectar/rng.hpp"

namespace nectar {

void AlgorithmConfig::validate() const {
  if (!(beta >= 1.0)) throw std::invalid_argument("beta must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (!(tr_rate > 0.0)) throw std::invalid_argument("tr_rate must be positive");
}

Cover initialize_cover(const Graph& graph, ObjectiveKind objective) {
  std::size_t n = graph.node_count();
  Cover cover(n);
  if (objective == ObjectiveKind::QExt) {
    for (NodeId v = 0; v < n; ++v) cover.add_community(NodeSet{v});
    return cover;
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> coefficient(n);
  for (NodeId v = 0; v < n; ++v) coefficient[v] = graph.clustering_coefficient(v);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    if (coefficient[a] != coefficient[b]) return coefficient[a] > coefficient[b];
    return a < b;
  });
  std::vector<char> placed(n, 0);
  for (NodeId v : order) {
    if (placed[v]) continue;
    NodeSet seed{v};
    placed[v] = 1;
    for (NodeId u : graph.neighbors(v)) {
      if (!placed[u]) {
        seed.insert(u);
        placed[u] = 1;
      }
    }
    cover.add_community(std::move(seed));
  }
  return cover;
}

std::vector<std::uint32_t> select_by_beta(const GainTable& gains, double beta) {
  std::vector<std::uint32_t> chosen;
  if (gains.empty()) return chosen;
  double best = gains.front().value;
  for (const Gain& g : gains) best = std::max(best, g.value);
  if (!(best > 0.0)) return chosen;
  for (const Gain& g : gains) {
    if (g.value * beta >= best) chosen.push_back(g.id);
  }
  return chosen;
}

namespace {

ObjectiveKind resolve_objective(const Graph& graph, const AlgorithmConfig& config) {
  switch (config.objective) {
    case ObjectiveChoice::QExt:
      return ObjectiveKind::QExt;
    case ObjectiveChoice::Wocc:
      return ObjectiveKind::Wocc;
    default:
      return select_objective(graph, config.tr_rate);
  }
}

RunReport run_node_centric(const Graph& graph, const AlgorithmConfig& config,
                           ObjectiveKind kind) {
  std::size_t n = graph.node_count();
  Cover cover = initialize_cover(graph, kind);
  GainEvaluator eval(graph, kind);
  Rng rng(config.rng_seed);
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);

  int iterations = 0;
  bool converged = false;
  while (true) {
    std::size_t stable = 0;
    rng.shuffle(order);
    for (NodeId v : order) {
      std::span<const CommunityId> current = cover.communities_of(v);
      std::vector<CommunityId> prior(current.begin(), current.end());
      bool was_lone_singleton =
          prior.size() == 1 && cover.community_size(prior[0]) == 1;
      cover.remove_node_from_all(v);
      std::vector<CommunityId> candidates = cover.neighboring_communities(graph, v);
      GainTable gains = eval.node_gains(cover, v, candidates);
      std::vector<CommunityId> chosen = select_by_beta(gains, config.beta);
      if (chosen.empty()) {
        // No neighboring community or no positive gain: v stays a singleton.
        cover.add_community(NodeSet{v});
        if (was_lone_singleton) ++stable;  // membership set is unchanged
      } else {
        for (CommunityId c : chosen) cover.add_member(c, v);
        if (chosen == prior) ++stable;
      }
    }
    bool reduced = cover.merge_overlapping(config.alpha);
    if (reduced) stable = 0;
    ++iterations;
    if (stable == n) {
      converged = true;
      break;
    }
    if (iterations >= config.max_iter) break;
  }

  RunReport report{std::move(cover), iterations, converged, kind, 0.0, config.beta};
  report.objective_value = objective_value(graph, report.cover, kind);
  report.sweep_converged = converged ? 1 : 0;
  report.sweep_max_iterations = iterations;
  return report;
}

/// Nodes outside c with at least one edge into it, ascending.
std::vector<NodeId> boundary_nodes(const Graph& graph, const Cover& cover,
                                   CommunityId c) {
  const NodeSet& s = cover.members(c);
  std::vector<NodeId> result;
  for (NodeId u : s) {
    for (NodeId x : graph.neighbors(u)) {
      if (!s.contains(x)) result.push_back(x);
    }
  }
  std::sort(result.begin(), result.end());
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

RunReport run_community_centric(const Graph& graph, const AlgorithmConfig& config,
                                ObjectiveKind kind) {
  Cover cover = initialize_cover(graph, kind);
  GainEvaluator eval(graph, kind);
  Rng rng(config.rng_seed);

  int iterations = 0;
  bool converged = false;
  while (true) {
    bool changed = false;
    std::vector<CommunityId> visit(cover.community_ids().begin(),
                                   cover.community_ids().end());
    rng.shuffle(visit);
    for (CommunityId c : visit) {
      if (!cover.alive(c)) continue;  // emptied by an earlier clean-up
      std::vector<NodeId> candidates = boundary_nodes(graph, cover, c);
      GainTable gains;
      gains.reserve(candidates.size());
      for (NodeId v : candidates) gains.push_back({v, eval.join_gain(cover, v, c)});
      std::vector<std::uint32_t> adds = select_by_beta(gains, config.beta);
      if (adds.empty()) continue;

      std::vector<NodeId> prior_members(cover.members(c).begin(),
                                        cover.members(c).end());
      for (NodeId v : adds) cover.add_member(c, v);
      changed = true;

      // Clean-up: additions may weaken the bond of the previous members.
      // One eviction pass over them; evicted nodes left with no membership
      // become singletons.
      std::vector<NodeId> evict;
      for (NodeId u : prior_members) {
        if (eval.rejoin_gain(cover, u, c) <= 0.0) evict.push_back(u);
      }
      for (NodeId u : evict) {
        if (!cover.alive(c)) break;
        cover.remove_member(c, u);
        if (cover.membership_count(u) == 0) cover.add_community(NodeSet{u});
      }
    }
    bool reduced = cover.merge_overlapping(config.alpha);
    ++iterations;
    if (!changed && !reduced) {
      converged = true;
      break;
    }
    if (iterations >= config.max_iter) break;
  }

  RunReport report{std::move(cover), iterations, converged, kind, 0.0, config.beta};
  report.objective_value = objective_value(graph, report.cover, kind);
  report.sweep_converged = converged ? 1 : 0;
  report.sweep_max_iterations = iterations;
  return report;
}

}  // namespace

RunReport run(const Graph& graph, const AlgorithmConfig& config) {
  config.validate();
  if (graph.node_count() == 0) throw std::invalid_argument("graph is empty");
  ObjectiveKind kind = resolve_objective(graph, config);
  return config.mode == SearchMode::NodeCentric
             ? run_node_centric(graph, config, kind)
             : run_community_centric(graph, config, kind);
}

RunReport beta_sweep(const Graph& graph, const AlgorithmConfig& config,
                     std::span<const double> betas) {
  if (betas.empty()) throw std::invalid_argument("beta list must be nonempty");
  config.validate();
  if (graph.node_count() == 0) throw std::invalid_argument("graph is empty");
  ObjectiveKind kind = resolve_objective(graph, config);

  std::vector<RunReport> reports(betas.size(), RunReport{Cover(0)});
  std::size_t workers = std::min<std::size_t>(
      betas.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < betas.size(); i += workers) {
        AlgorithmConfig local = config;
        local.beta = betas[i];
        local.objective =
            kind == ObjectiveKind::QExt ? ObjectiveChoice::QExt : ObjectiveChoice::Wocc;
        // Run 0 keeps the caller's seed, so a one-entry sweep equals run().
        if (i > 0) local.rng_seed = Rng::mix(config.rng_seed ^ Rng::mix(i));
        reports[i] = run(graph, local);
      }
    });
  }
  for (auto& t : pool) t.join();

  std::size_t best = 0;
  int converged_total = 0;
  int max_iterations = 0;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    converged_total += reports[i].sweep_converged;
    max_iterations = std::max(max_iterations, reports[i].iterations);
    if (i > 0 && reports[i].objective_value > reports[best].objective_value) best = i;
  }
  reports[best].sweep_size = static_cast<int>(reports.size());
  reports[best].sweep_converged = converged_total;
  reports[best].sweep_max_iterations = max_iterations;
  return std::move(reports[best]);
}

std::vector<double> default_beta_grid(ObjectiveKind objective) {
  std::vector<double> grid;
  if (objective == ObjectiveKind::Wocc) {
    constexpr int count = 12;
    double lo = std::log(1.1), hi = std::log(20.0);
    for (int i = 0; i < count; ++i) {
      grid.push_back(std::exp(lo + (hi - lo) * i / (count - 1)));
    }
  } else {
    constexpr int count = 13;
    double lo = 1.01, hi = 1.4;
    for (int i = 0; i < count; ++i) {
      grid.push_back(lo + (hi - lo) * i / (count - 1));
    }
  }
  return grid;
}

}  // namespace nectar
