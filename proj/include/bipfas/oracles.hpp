#pragma once

#include <cstddef>
#include <vector>

#include "bipfas/c4free.hpp"
#include "bipfas/graph.hpp"

// Exponential-time exact references. Only tests and the `oracle` / `selftest`
// CLI paths use them.

namespace bipfas::oracle {

inline constexpr std::size_t kMaxFasVertices = 22;
inline constexpr std::size_t kDefaultCycleCap = 10'000;

struct MinFasResult {
  std::size_t value = 0;
  std::vector<Arc> witness;  ///< sorted; size == value
};

struct MaxPackingResult {
  std::size_t value = 0;
  std::vector<FourCycle> witness;  ///< size == value
};

/// Minimum feedback arc set. A FAS is exactly the backward-arc set of some
/// linear order (the topological order of what remains puts every deleted
/// arc backwards or it was not needed), so this minimises backward arcs over
/// all orders with a DP on placed-prefix subsets. Throws TooLarge above
/// kMaxFasVertices vertices.
MinFasResult min_fas_exact(const BipartiteDigraph& d);

/// Maximum number of pairwise arc-disjoint 4-cycles, by branch and bound over
/// all_4cycles. Throws TooLarge when there are more than `cycle_cap` cycles.
MaxPackingResult max_c4_packing_exact(const BipartiteDigraph& d,
                                      std::size_t cycle_cap = kDefaultCycleCap);

/// Every 4-cycle, starting at its smaller X vertex, in sorted order.
std::vector<FourCycle> all_4cycles(const BipartiteDigraph& d);

/// Cycle detection by transitive closure (Warshall).
bool has_cycle_bruteforce(const BipartiteDigraph& d);

}  // namespace bipfas::oracle
