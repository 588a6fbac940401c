#pragma once

// Brute-force reference implementations used by the tests. These work on a
// plain dense adjacency matrix and transcribe the defining formulas directly,
// so they stay independent of the library's computation paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "nectar/node_set.hpp"
#include "nectar/rng.hpp"

namespace oracle {

using nectar::NodeId;
using Edge = std::pair<NodeId, NodeId>;
using Community = std::vector<NodeId>;

struct DenseGraph {
  std::size_t n = 0;
  std::vector<char> adj;  // row-major n*n

  static DenseGraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    DenseGraph g;
    g.n = n;
    g.adj.assign(n * n, 0);
    for (auto [u, v] : edges) {
      if (u == v) continue;
      g.adj[u * n + v] = 1;
      g.adj[v * n + u] = 1;
    }
    return g;
  }

  bool edge(NodeId u, NodeId v) const { return adj[u * n + v] != 0; }

  std::size_t degree(NodeId v) const {
    std::size_t d = 0;
    for (std::size_t u = 0; u < n; ++u) d += adj[v * n + u];
    return d;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (char a : adj) twice += a;
    return twice / 2;
  }
};

// t(v,S): pairs {x,y} from S \ {v} with edges (v,x), (v,y), (x,y).
inline std::size_t triangles_in_set(const DenseGraph& g, NodeId v,
                                    const Community& s) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      NodeId x = s[i], y = s[j];
      if (x == v || y == v) continue;
      if (g.edge(v, x) && g.edge(v, y) && g.edge(x, y)) ++count;
    }
  }
  return count;
}

// vt(v,S): nodes x of S \ {v} with a triangle (v,x,y) for some y in V.
inline std::size_t partners_in_set(const DenseGraph& g, NodeId v,
                                   const Community& s) {
  std::size_t count = 0;
  for (NodeId x : s) {
    if (x == v || !g.edge(v, x)) continue;
    for (std::size_t y = 0; y < g.n; ++y) {
      if (y != v && y != x && g.edge(v, static_cast<NodeId>(y)) &&
          g.edge(x, static_cast<NodeId>(y))) {
        ++count;
        break;
      }
    }
  }
  return count;
}

inline Community all_nodes(const DenseGraph& g) {
  Community v(g.n);
  for (std::size_t i = 0; i < g.n; ++i) v[i] = static_cast<NodeId>(i);
  return v;
}

inline std::size_t distinct_triangles(const DenseGraph& g) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < g.n; ++a) {
    for (std::size_t b = a + 1; b < g.n; ++b) {
      for (std::size_t c = b + 1; c < g.n; ++c) {
        if (g.edge(a, b) && g.edge(b, c) && g.edge(a, c)) ++count;
      }
    }
  }
  return count;
}

inline double triangle_rate(const DenseGraph& g) {
  Community v = all_nodes(g);
  std::size_t total = 0;
  for (std::size_t x = 0; x < g.n; ++x) {
    total += triangles_in_set(g, static_cast<NodeId>(x), v);
  }
  return static_cast<double>(total) / static_cast<double>(g.n);
}

// Newman modularity sum_i (e_ii - a_i^2) of a partition given as labels.
inline double newman_modularity(const DenseGraph& g, const std::vector<int>& labels) {
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  double m = static_cast<double>(g.edge_count());
  std::vector<double> internal(k, 0.0), degree_sum(k, 0.0);
  for (std::size_t u = 0; u < g.n; ++u) {
    degree_sum[labels[u]] += static_cast<double>(g.degree(static_cast<NodeId>(u)));
    for (std::size_t v = u + 1; v < g.n; ++v) {
      if (g.edge(static_cast<NodeId>(u), static_cast<NodeId>(v)) &&
          labels[u] == labels[v]) {
        internal[labels[u]] += 1.0;
      }
    }
  }
  double q = 0.0;
  for (int i = 0; i < k; ++i) {
    double e_ii = internal[i] / m;
    double a_i = degree_sum[i] / (2.0 * m);
    q += e_ii - a_i * a_i;
  }
  return q;
}

// Extended modularity, summed literally over ordered pairs (i,j) including
// i = j. Nodes outside every community enter as singletons with O = 1.
inline double q_ext(const DenseGraph& g, const std::vector<Community>& cover) {
  double two_m = 2.0 * static_cast<double>(g.edge_count());
  std::vector<std::size_t> memberships(g.n, 0);
  for (const Community& c : cover) {
    for (NodeId v : c) ++memberships[v];
  }
  std::vector<Community> extended = cover;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (memberships[v] == 0) {
      extended.push_back({static_cast<NodeId>(v)});
      memberships[v] = 1;
    }
  }
  double total = 0.0;
  for (const Community& c : extended) {
    for (NodeId i : c) {
      for (NodeId j : c) {
        double a_ij = (i != j && g.edge(i, j)) ? 1.0 : 0.0;
        double k_i = static_cast<double>(g.degree(i));
        double k_j = static_cast<double>(g.degree(j));
        total += (a_ij - k_i * k_j / two_m) /
                 (static_cast<double>(memberships[i]) *
                  static_cast<double>(memberships[j]));
      }
    }
  }
  return total / two_m;
}

inline double wcc_node(const DenseGraph& g, NodeId v, const Community& s) {
  Community everyone = all_nodes(g);
  std::size_t t_all = triangles_in_set(g, v, everyone);
  if (t_all == 0) return 0.0;
  std::size_t t_in = triangles_in_set(g, v, s);
  std::size_t vt_all = partners_in_set(g, v, everyone);
  Community outside;
  for (NodeId u : everyone) {
    if (std::find(s.begin(), s.end(), u) == s.end()) outside.push_back(u);
  }
  std::size_t vt_out = partners_in_set(g, v, outside);
  std::size_t s_without_v =
      s.size() - (std::find(s.begin(), s.end(), v) != s.end() ? 1 : 0);
  return (static_cast<double>(t_in) / static_cast<double>(t_all)) *
         (static_cast<double>(vt_all) /
          static_cast<double>(s_without_v + vt_out));
}

inline double wocc(const DenseGraph& g, const std::vector<Community>& cover) {
  double total = 0.0;
  double weight = 0.0;
  for (const Community& c : cover) {
    for (NodeId v : c) total += wcc_node(g, v, c);
    weight += static_cast<double>(c.size());
  }
  return total / weight;
}

// Omega index via direct per-pair enumeration in plain doubles.
inline double omega(const std::vector<Community>& a, const std::vector<Community>& b,
                    std::size_t n) {
  auto co_count = [](const std::vector<Community>& cover, NodeId x, NodeId y) {
    std::size_t j = 0;
    for (const Community& c : cover) {
      bool has_x = std::find(c.begin(), c.end(), x) != c.end();
      bool has_y = std::find(c.begin(), c.end(), y) != c.end();
      if (has_x && has_y) ++j;
    }
    return j;
  };
  std::size_t j_max = std::min(a.size(), b.size());
  std::map<std::size_t, double> size_a, size_b;
  double agreements = 0.0;
  for (NodeId x = 0; x < n; ++x) {
    for (NodeId y = x + 1; y < n; ++y) {
      std::size_t ja = co_count(a, x, y);
      std::size_t jb = co_count(b, x, y);
      if (ja <= j_max) size_a[ja] += 1.0;
      if (jb <= j_max) size_b[jb] += 1.0;
      if (ja == jb && ja <= j_max) agreements += 1.0;
    }
  }
  double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  double omega_u = agreements / pairs;
  double omega_e = 0.0;
  for (std::size_t j = 0; j <= j_max; ++j) {
    omega_e += size_a[j] * size_b[j] / (pairs * pairs);
  }
  if (omega_e == 1.0) return omega_u == 1.0 ? 1.0 : std::nan("");
  return (omega_u - omega_e) / (1.0 - omega_e);
}

// Average F1 via precision / recall / harmonic mean, full matrix.
inline double avg_f1(const std::vector<Community>& a, const std::vector<Community>& b) {
  auto f1 = [](const Community& c1, const Community& c2) {
    double inter = 0.0;
    for (NodeId v : c1) {
      if (std::find(c2.begin(), c2.end(), v) != c2.end()) inter += 1.0;
    }
    double precision = inter / static_cast<double>(c1.size());
    double recall = inter / static_cast<double>(c2.size());
    if (precision + recall == 0.0) return 0.0;
    return 2.0 * precision * recall / (precision + recall);
  };
  auto direction = [&](const std::vector<Community>& from,
                       const std::vector<Community>& to) {
    double sum = 0.0;
    for (const Community& c : from) {
      double best = 0.0;
      for (const Community& d : to) best = std::max(best, f1(c, d));
      sum += best;
    }
    return sum / (2.0 * static_cast<double>(from.size()));
  };
  return direction(a, b) + direction(b, a);
}

// Overlapping NMI transcription; log base 2 (ratios are base-invariant).
inline double nmi(const std::vector<Community>& a, const std::vector<Community>& b,
                  std::size_t n) {
  auto h = [](double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; };
  auto conditional = [&](const std::vector<Community>& from,
                         const std::vector<Community>& to) {
    double total = 0.0;
    for (const Community& x : from) {
      double px = static_cast<double>(x.size()) / static_cast<double>(n);
      double hx = h(px) + h(1.0 - px);
      if (hx == 0.0) {
        total += 1.0;
        continue;
      }
      double best = hx;
      for (const Community& y : to) {
        double inter = 0.0;
        for (NodeId v : x) {
          if (std::find(y.begin(), y.end(), v) != y.end()) inter += 1.0;
        }
        double p11 = inter / n;
        double p10 = (static_cast<double>(x.size()) - inter) / n;
        double p01 = (static_cast<double>(y.size()) - inter) / n;
        double p00 = (static_cast<double>(n) - static_cast<double>(x.size()) -
                      static_cast<double>(y.size()) + inter) / n;
        if (h(p11) + h(p00) < h(p01) + h(p10)) continue;
        double py = static_cast<double>(y.size()) / static_cast<double>(n);
        double joint = h(p11) + h(p10) + h(p01) + h(p00);
        best = std::min(best, joint - (h(py) + h(1.0 - py)));
      }
      total += best / hx;
    }
    return total / static_cast<double>(from.size());
  };
  return 1.0 - 0.5 * (conditional(a, b) + conditional(b, a));
}

inline std::vector<Edge> random_graph_edges(std::size_t n, double p, nectar::Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.uniform01() < p) edges.emplace_back(u, v);
    }
  }
  return edges;
}

inline std::vector<int> random_partition_labels(std::size_t n, std::size_t groups,
                                                nectar::Rng& rng) {
  std::vector<int> labels(n);
  for (std::size_t v = 0; v < n; ++v) {
    labels[v] = static_cast<int>(rng.below(groups));
  }
  // Compress so labels are dense and every group is nonempty.
  std::vector<int> remap(groups, -1);
  int next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (remap[labels[v]] == -1) remap[labels[v]] = next++;
    labels[v] = remap[labels[v]];
  }
  return labels;
}

inline std::vector<Community> labels_to_cover(const std::vector<int>& labels) {
  int k = 0;
  for (int l : labels) k = std::max(k, l + 1);
  std::vector<Community> cover(k);
  for (std::size_t v = 0; v < labels.size(); ++v) {
    cover[labels[v]].push_back(static_cast<NodeId>(v));
  }
  return cover;
}

// Random cover of 1..4 possibly-overlapping communities; nodes may be left
// uncovered unless require_all is set.
inline std::vector<Community> random_cover(std::size_t n, nectar::Rng& rng,
                                           bool require_all = false) {
  std::size_t k = 1 + rng.below(4);
  std::vector<Community> cover(k);
  for (std::size_t c = 0; c < k; ++c) {
    for (NodeId v = 0; v < n; ++v) {
      if (rng.uniform01() < 0.4) cover[c].push_back(v);
    }
    if (cover[c].empty()) cover[c].push_back(static_cast<NodeId>(rng.below(n)));
  }
  if (require_all) {
    for (NodeId v = 0; v < n; ++v) {
      bool covered = false;
      for (const Community& c : cover) {
        covered = covered || std::find(c.begin(), c.end(), v) != c.end();
      }
      if (!covered) cover[rng.below(k)].push_back(v);
    }
    for (Community& c : cover) std::sort(c.begin(), c.end());
  }
  return cover;
}

// Visits every set partition of {0..n-1} as a label vector (restricted
// growth strings).
inline void for_each_partition(std::size_t n,
                               const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> labels(n, 0);
  std::function<void(std::size_t, int)> recurse = [&](std::size_t index, int used) {
    if (index == n) {
      fn(labels);
      return;
    }
    for (int l = 0; l <= used; ++l) {
      labels[index] = l;
      recurse(index + 1, std::max(used, l + 1));
    }
  };
  recurse(0, 0);
}

}  // namespace oracle
