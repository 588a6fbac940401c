#include "nectar/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace nectar {

namespace {

void validate_cover(const std::vector<NodeSet>& cover, std::size_t n,
                    const char* which) {
  if (cover.empty()) {
    throw std::invalid_argument(std::string(which) + " cover is empty");
  }
  for (const NodeSet& c : cover) {
    if (c.empty()) {
      throw std::invalid_argument(std::string(which) + " cover has an empty community");
    }
    for (NodeId v : c) {
      if (v >= n) {
        throw std::invalid_argument(std::string(which) +
                                    " cover references a node outside the universe");
      }
    }
  }
}

double entropy_term(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

/// Mean over cover_a's communities of H(X|cover_b) / H(X).
double normalized_conditional_entropy(const std::vector<NodeSet>& cover_a,
                                      const std::vector<NodeSet>& cover_b,
                                      std::size_t n) {
  double total_ratio = 0.0;
  for (const NodeSet& x : cover_a) {
    double px = static_cast<double>(x.size()) / static_cast<double>(n);
    double h_x = entropy_term(px) + entropy_term(1.0 - px);
    if (h_x == 0.0) {
      total_ratio += 1.0;  // degenerate membership variable, fully unexplained
      continue;
    }
    double best = h_x;
    for (const NodeSet& y : cover_b) {
      std::size_t both = NodeSet::intersection_size(x, y);
      double p11 = static_cast<double>(both) / static_cast<double>(n);
      double p10 = static_cast<double>(x.size() - both) / static_cast<double>(n);
      double p01 = static_cast<double>(y.size() - both) / static_cast<double>(n);
      double p00 = (static_cast<double>(n) - static_cast<double>(x.size()) -
                    static_cast<double>(y.size()) + static_cast<double>(both)) /
                   static_cast<double>(n);
      // Only candidates that match better than their complement qualify.
      if (entropy_term(p11) + entropy_term(p00) <
          entropy_term(p01) + entropy_term(p10)) {
        continue;
      }
      double py = static_cast<double>(y.size()) / static_cast<double>(n);
      double h_joint = entropy_term(p11) + entropy_term(p10) + entropy_term(p01) +
                       entropy_term(p00);
      double h_y = entropy_term(py) + entropy_term(1.0 - py);
      // Conditional entropy is non-negative; rounding may leave -epsilon.
      best = std::min(best, std::max(0.0, h_joint - h_y));
    }
    total_ratio += best / h_x;
  }
  return total_ratio / static_cast<double>(cover_a.size());
}

using PairKey = std::uint64_t;

PairKey pair_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

/// Co-occurrence count per node pair appearing together at least once.
std::unordered_map<PairKey, std::uint32_t> co_occurrences(
    const std::vector<NodeSet>& cover) {
  std::unordered_map<PairKey, std::uint32_t> counts;
  for (const NodeSet& c : cover) {
    auto ids = c.ids();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        ++counts[pair_key(ids[i], ids[j])];
      }
    }
  }
  return counts;
}

}  // namespace

double nmi(const std::vector<NodeSet>& cover_a, const std::vector<NodeSet>& cover_b,
           std::size_t n) {
  validate_cover(cover_a, n, "first");
  validate_cover(cover_b, n, "second");
  double h_a_given_b = normalized_conditional_entropy(cover_a, cover_b, n);
  double h_b_given_a = normalized_conditional_entropy(cover_b, cover_a, n);
  return 1.0 - 0.5 * (h_a_given_b + h_b_given_a);
}

double omega_index(const std::vector<NodeSet>& cover_a,
                   const std::vector<NodeSet>& cover_b, std::size_t n) {
  if (n < 2) throw std::invalid_argument("omega needs at least two nodes");
  validate_cover(cover_a, n, "first");
  validate_cover(cover_b, n, "second");

  auto counts_a = co_occurrences(cover_a);
  auto counts_b = co_occurrences(cover_b);
  std::size_t j_max = std::min(cover_a.size(), cover_b.size());

  // Histogram of |t_j| per cover for j >= 1; j = 0 is derived from the total.
  std::vector<std::uint64_t> hist_a(j_max + 1, 0), hist_b(j_max + 1, 0);
  for (const auto& [key, c] : counts_a) {
    if (c <= j_max) ++hist_a[c];
  }
  for (const auto& [key, c] : counts_b) {
    if (c <= j_max) ++hist_b[c];
  }
  using Wide = unsigned __int128;
  Wide total_pairs = static_cast<Wide>(n) * (n - 1) / 2;
  hist_a[0] = static_cast<std::uint64_t>(total_pairs - counts_a.size());
  hist_b[0] = static_cast<std::uint64_t>(total_pairs - counts_b.size());

  // Pairs agreeing on their co-occurrence count. Pairs absent from both maps
  // agree at j = 0; pairs present in exactly one map disagree.
  std::uint64_t in_either = counts_a.size();
  std::uint64_t agree = 0;
  for (const auto& [key, c] : counts_b) {
    auto it = counts_a.find(key);
    if (it == counts_a.end()) {
      ++in_either;
    } else if (it->second == c && c <= j_max) {
      ++agree;
    }
  }
  agree += static_cast<std::uint64_t>(total_pairs) - in_either;

  Wide expected = 0;
  for (std::size_t j = 0; j <= j_max; ++j) {
    expected += static_cast<Wide>(hist_a[j]) * hist_b[j];
  }

  Wide denominator = total_pairs * total_pairs - expected;
  Wide numerator_obs = static_cast<Wide>(agree) * total_pairs;
  if (denominator == 0) {
    // Expected agreement is already perfect; only perfect observed agreement
    // keeps the index meaningful.
    if (numerator_obs == total_pairs * total_pairs) return 1.0;
    throw std::domain_error("omega undefined: expected agreement equals 1");
  }
  bool negative = numerator_obs < expected;
  Wide diff = negative ? expected - numerator_obs : numerator_obs - expected;
  double value = static_cast<double>(diff) / static_cast<double>(denominator);
  return negative ? -value : value;
}

double f1_score(const NodeSet& a, const NodeSet& b) {
  std::size_t total = a.size() + b.size();
  if (total == 0) return 0.0;
  std::size_t both = NodeSet::intersection_size(a, b);
  return 2.0 * static_cast<double>(both) / static_cast<double>(total);
}

double average_f1(const std::vector<NodeSet>& cover_a,
                  const std::vector<NodeSet>& cover_b) {
  if (cover_a.empty() || cover_b.empty()) {
    throw std::invalid_argument("covers must be nonempty");
  }
  auto best_sum = [](const std::vector<NodeSet>& from, const std::vector<NodeSet>& to) {
    double sum = 0.0;
    for (const NodeSet& c : from) {
      double best = 0.0;
      for (const NodeSet& d : to) best = std::max(best, f1_score(c, d));
      sum += best;
    }
    return sum;
  };
  return best_sum(cover_a, cover_b) / (2.0 * static_cast<double>(cover_a.size())) +
         best_sum(cover_b, cover_a) / (2.0 * static_cast<double>(cover_b.size()));
}

std::vector<NodeSet> match_ground_truth(const std::vector<NodeSet>& detected,
                                        const std::vector<NodeSet>& truth) {
  if (detected.empty()) throw std::invalid_argument("detected cover is empty");
  std::vector<char> chosen(detected.size(), 0);
  for (const NodeSet& g : truth) {
    std::size_t best_index = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < detected.size(); ++i) {
      double score = f1_score(g, detected[i]);
      if (score > best_score) {
        best_score = score;
        best_index = i;
      }
    }
    chosen[best_index] = 1;
  }
  std::vector<NodeSet> result;
  for (std::size_t i = 0; i < detected.size(); ++i) {
    if (chosen[i]) result.push_back(detected[i]);
  }
  return result;
}

EvaluationReport evaluate_covers(const std::vector<NodeSet>& detected,
                                 const std::vector<NodeSet>& truth, std::size_t n,
                                 bool match_first) {
  const std::vector<NodeSet>* compared = &detected;
  std::vector<NodeSet> matched;
  if (match_first) {
    matched = match_ground_truth(detected, truth);
    compared = &matched;
  }
  EvaluationReport report;
  report.nmi = nmi(*compared, truth, n);
  report.omega = omega_index(*compared, truth, n);
  report.avg_f1 = average_f1(*compared, truth);
  report.matched_cover_size = compared->size();
  return report;
}

}  // namespace nectar
