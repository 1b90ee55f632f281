#pragma once

#include <random>
#include <set>
#include <vector>

#include "bipfas/graph.hpp"

namespace fixtures {

using namespace bipfas;

/// x0 -> y0 -> x1 -> y1 -> x0: the only orientation of K_{2,2} with a cycle
/// starting that way.
inline BipartiteDigraph four_cycle_bt() {
  const std::vector<Arc> arcs{{xv(0), yv(0)}, {yv(0), xv(1)}, {xv(1), yv(1)}, {yv(1), xv(0)}};
  return BipartiteDigraph::build(2, 2, arcs);
}

/// x0 -> y0 -> x1 -> y1 -> x2 -> y2 -> x0 on 3 + 3 vertices; the pairs
/// x0-y1, x1-y2, x2-y0 are absent.
inline BipartiteDigraph six_cycle() {
  const std::vector<Arc> arcs{{xv(0), yv(0)}, {yv(0), xv(1)}, {xv(1), yv(1)},
                              {yv(1), xv(2)}, {xv(2), yv(2)}, {yv(2), xv(0)}};
  return BipartiteDigraph::build(3, 3, arcs);
}

inline BipartiteDigraph path_instance() {
  const std::vector<Arc> arcs{{xv(0), yv(0)}, {yv(0), xv(1)}, {xv(1), yv(1)}};
  return BipartiteDigraph::build(2, 2, arcs);
}

/// 4-cycle-free, nothing to trim, and sum(first) = 14 > sum(sec) = 13, so
/// the decomposition starts on the reversed graph.
inline BipartiteDigraph reversal_instance() {
  const std::vector<Arc> arcs{{xv(0), yv(3)}, {xv(1), yv(0)}, {xv(2), yv(0)}, {xv(2), yv(1)},
                              {xv(3), yv(2)}, {xv(4), yv(1)}, {yv(0), xv(4)}, {yv(1), xv(0)},
                              {yv(2), xv(1)}, {yv(2), xv(2)}, {yv(2), xv(4)}, {yv(3), xv(3)}};
  return BipartiteDigraph::build(5, 4, arcs);
}

inline BipartiteDigraph all_x_to_y(std::size_t m, std::size_t n) {
  return BipartiteDigraph::from_orientations(m, n, std::vector<Orientation>(m * n, Orientation::ToY));
}

/// Independent random bipartite digraph: each pair absent with probability
/// `absent`, otherwise oriented uniformly.
inline BipartiteDigraph random_digraph(std::mt19937_64& rng, std::size_t m, std::size_t n,
                                       double absent) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Orientation> states(m * n);
  for (Orientation& s : states) {
    if (unit(rng) < absent) {
      s = Orientation::Absent;
    } else {
      s = unit(rng) < 0.5 ? Orientation::ToY : Orientation::ToX;
    }
  }
  return BipartiteDigraph::from_orientations(m, n, std::move(states));
}

inline std::vector<Arc> random_arc_subset(std::mt19937_64& rng, const BipartiteDigraph& d,
                                          double keep) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Arc> out;
  for (const Arc& a : d.arcs())
    if (unit(rng) < keep) out.push_back(a);
  return out;
}

}  // namespace fixtures
