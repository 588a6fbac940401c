#include "nectar/objectives.hpp"

#include <stdexcept>

namespace nectar {

std::string_view to_string(ObjectiveKind kind) {
  return kind == ObjectiveKind::QExt ? "qext" : "wocc";
}

ObjectiveKind select_objective(const Graph& graph, double tr_rate) {
  if (!(tr_rate > 0.0)) throw std::invalid_argument("tr_rate must be positive");
  if (graph.node_count() == 0) throw std::invalid_argument("graph is empty");
  double rate = static_cast<double>(graph.triangle_count()) /
                static_cast<double>(graph.node_count());
  return rate >= tr_rate ? ObjectiveKind::Wocc : ObjectiveKind::QExt;
}

double q_ext(const Graph& graph, const Cover& cover) {
  if (graph.edge_count() == 0) {
    throw std::invalid_argument("extended modularity needs at least one edge");
  }
  double two_m = 2.0 * static_cast<double>(graph.edge_count());
  double total = 0.0;
  MemberMask mask(graph.node_count());
  for (CommunityId c : cover.community_ids()) {
    const NodeSet& s = cover.members(c);
    mask.assign(s.ids());
    double adjacency_part = 0.0;
    double weighted_degree = 0.0;  // sum of k_i / O_i over members
    for (NodeId i : s) {
      double o_i = static_cast<double>(cover.membership_count(i));
      for (NodeId x : graph.neighbors(i)) {
        if (mask.contains(x)) {
          adjacency_part += 1.0 / (o_i * static_cast<double>(cover.membership_count(x)));
        }
      }
      weighted_degree += static_cast<double>(graph.degree(i)) / o_i;
    }
    total += adjacency_part - weighted_degree * weighted_degree / two_m;
  }
  // Nodes outside every community behave as singletons with O = 1.
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (cover.membership_count(v) == 0) {
      double k = static_cast<double>(graph.degree(v));
      total -= k * k / two_m;
    }
  }
  return total / two_m;
}

namespace {

double q_ext_gain_impl(const Graph& graph, const Cover& cover, NodeId v,
                       CommunityId c) {
  double two_m = 2.0 * static_cast<double>(graph.edge_count());
  double k_v = static_cast<double>(graph.degree(v));
  double gain = 0.0;
  for (NodeId i : cover.members(c)) {
    double a_iv = graph.has_edge(i, v) ? 1.0 : 0.0;
    double k_i = static_cast<double>(graph.degree(i));
    gain += (a_iv - k_i * k_v / two_m) / static_cast<double>(cover.membership_count(i));
  }
  return gain;
}

}  // namespace

double delta_q_ext(const Graph& graph, const Cover& cover, NodeId v, CommunityId c) {
  if (cover.membership_count(v) != 0) {
    throw std::invalid_argument("gain is defined for a detached node");
  }
  if (cover.members(c).empty()) throw std::invalid_argument("empty community");
  return q_ext_gain_impl(graph, cover, v, c);
}

namespace {

double wcc_in_mask_impl(const Graph& graph, NodeId v, const MemberMask& mask,
                        std::size_t set_size) {
  std::size_t t_all = graph.node_triangles(v);
  if (t_all == 0) return 0.0;
  std::size_t t_in = graph.triangles(v, mask);
  std::size_t vt_all = graph.node_triangle_partners(v);
  std::size_t vt_in = graph.triangle_partners(v, mask);
  std::size_t s_without_v = set_size - (mask.contains(v) ? 1 : 0);
  double denom = static_cast<double>(s_without_v + (vt_all - vt_in));
  return (static_cast<double>(t_in) / static_cast<double>(t_all)) *
         (static_cast<double>(vt_all) / denom);
}

}  // namespace

double wcc_node(const Graph& graph, NodeId v, const NodeSet& s) {
  MemberMask mask(graph.node_count());
  mask.assign(s.ids());
  return wcc_in_mask_impl(graph, v, mask, s.size());
}

double wcc_community(const Graph& graph, const NodeSet& s) {
  if (s.empty()) throw std::invalid_argument("community must be nonempty");
  MemberMask mask(graph.node_count());
  mask.assign(s.ids());
  double sum = 0.0;
  for (NodeId v : s) sum += wcc_in_mask_impl(graph, v, mask, s.size());
  return sum / static_cast<double>(s.size());
}

double wocc_cover(const Graph& graph, const Cover& cover) {
  if (cover.community_count() == 0) {
    throw std::invalid_argument("cover must be nonempty");
  }
  MemberMask mask(graph.node_count());
  double total = 0.0;
  for (CommunityId c : cover.community_ids()) {
    const NodeSet& s = cover.members(c);
    mask.assign(s.ids());
    for (NodeId v : s) total += wcc_in_mask_impl(graph, v, mask, s.size());
  }
  return total / static_cast<double>(cover.total_membership());
}

double delta_wocc(const Graph& graph, const Cover& cover, NodeId v, CommunityId c) {
  if (cover.membership_count(v) != 0) {
    throw std::invalid_argument("gain is defined for a detached node");
  }
  GainEvaluator eval(graph, ObjectiveKind::Wocc);
  return eval.join_gain(cover, v, c);
}

double objective_value(const Graph& graph, const Cover& cover, ObjectiveKind kind) {
  if (kind == ObjectiveKind::QExt) {
    return graph.edge_count() == 0 ? 0.0 : q_ext(graph, cover);
  }
  return wocc_cover(graph, cover);
}

GainEvaluator::GainEvaluator(const Graph& graph, ObjectiveKind kind)
    : graph_(&graph), kind_(kind), mask_(graph.node_count()) {}

double GainEvaluator::wcc_in_mask(NodeId v, std::size_t set_size) const {
  return wcc_in_mask_impl(*graph_, v, mask_, set_size);
}

double GainEvaluator::wocc_gain(const Cover& cover, NodeId v, CommunityId c) {
  const NodeSet& s = cover.members(c);
  mask_.assign(s.ids());
  double u_before = 0.0;
  for (NodeId u : s) u_before += wcc_in_mask(u, s.size());
  mask_.add(v);
  double u_after = wcc_in_mask(v, s.size() + 1);
  for (NodeId u : s) u_after += wcc_in_mask(u, s.size() + 1);
  return u_after - u_before;
}

double GainEvaluator::q_ext_gain(const Cover& cover, NodeId v, CommunityId c) const {
  return q_ext_gain_impl(*graph_, cover, v, c);
}

GainTable GainEvaluator::node_gains(const Cover& cover, NodeId v,
                                    std::span<const CommunityId> candidates) {
  GainTable gains;
  gains.reserve(candidates.size());
  for (CommunityId c : candidates) {
    double value = kind_ == ObjectiveKind::QExt ? q_ext_gain(cover, v, c)
                                                : wocc_gain(cover, v, c);
    gains.push_back({c, value});
  }
  return gains;
}

double GainEvaluator::join_gain(const Cover& cover, NodeId v, CommunityId c) {
  if (kind_ == ObjectiveKind::QExt) {
    double o_v = static_cast<double>(std::max<std::size_t>(1, cover.membership_count(v)));
    return q_ext_gain(cover, v, c) / o_v;
  }
  return wocc_gain(cover, v, c);
}

double GainEvaluator::rejoin_gain(const Cover& cover, NodeId member, CommunityId c) {
  const NodeSet& s = cover.members(c);
  if (kind_ == ObjectiveKind::QExt) {
    double two_m = 2.0 * static_cast<double>(graph_->edge_count());
    double k_v = static_cast<double>(graph_->degree(member));
    double gain = 0.0;
    for (NodeId i : s) {
      if (i == member) continue;
      double a_iv = graph_->has_edge(i, member) ? 1.0 : 0.0;
      double k_i = static_cast<double>(graph_->degree(i));
      gain += (a_iv - k_i * k_v / two_m) /
              static_cast<double>(cover.membership_count(i));
    }
    return gain;
  }
  // U(C) - U(C \ {member}).
  mask_.assign(s.ids());
  double u_with = 0.0;
  for (NodeId u : s) u_with += wcc_in_mask(u, s.size());
  mask_.remove(member);
  double u_without = 0.0;
  for (NodeId u : s) {
    if (u != member) u_without += wcc_in_mask(u, s.size() - 1);
  }
  return u_with - u_without;
}

}  // namespace nectar
