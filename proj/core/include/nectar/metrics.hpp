#pragma once

#include <cstddef>
#include <vector>

#include "nectar/node_set.hpp"

namespace nectar {

struct EvaluationReport {
  double nmi = 0.0;
  double omega = 0.0;
  double avg_f1 = 0.0;
  std::size_t matched_cover_size = 0;
};

/// Overlapping NMI between two covers over a universe of n nodes. Each
/// community is read as a binary membership variable; a community's
/// conditional entropy is the minimum over the other cover's communities,
/// restricted to candidates where matching beats complement-matching
/// (h(P11)+h(P00) >= h(P01)+h(P10)), else its own entropy. Zero-entropy
/// communities contribute a fully-unexplained ratio of 1.
double nmi(const std::vector<NodeSet>& cover_a, const std::vector<NodeSet>& cover_b,
           std::size_t n);

/// Omega index: observed fraction of node pairs that co-occur in the same
/// number of communities in both covers, corrected by the expected fraction
/// under independence. 1 on identical covers; may be negative.
double omega_index(const std::vector<NodeSet>& cover_a,
                   const std::vector<NodeSet>& cover_b, std::size_t n);

/// Average best-match F1: mean over each cover's communities of the best F1
/// against the other cover, averaged over the two directions.
double average_f1(const std::vector<NodeSet>& cover_a,
                  const std::vector<NodeSet>& cover_b);

/// F1 between two node sets: harmonic mean of precision and recall,
/// equivalently 2|A n B| / (|A| + |B|); 0 when both are empty.
double f1_score(const NodeSet& a, const NodeSet& b);

/// For each ground-truth community picks the detected community maximizing
/// F1 (ties to the lowest index) and returns the deduplicated selection, in
/// detected order. The result has at most |truth| communities.
std::vector<NodeSet> match_ground_truth(const std::vector<NodeSet>& detected,
                                        const std::vector<NodeSet>& truth);

/// Scores detected against truth, optionally matching first.
EvaluationReport evaluate_covers(const std::vector<NodeSet>& detected,
                                 const std::vector<NodeSet>& truth, std::size_t n,
                                 bool match_first);

}  // namespace nectar
