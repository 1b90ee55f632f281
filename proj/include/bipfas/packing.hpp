#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bipfas/c4free.hpp"
#include "bipfas/graph.hpp"

namespace bipfas {

/// Pairwise arc-disjoint 4-cycles and what is left of the graph after
/// deleting their arcs.
struct Packing {
  std::vector<FourCycle> cycles;
  BipartiteDigraph residual;
};

/// Greedy first-found packing: take find_4cycle on the residual until none is
/// left or `limit` cycles are packed. Without a limit the result is maximal.
Packing greedy_pack(const BipartiteDigraph& d, std::optional<std::size_t> limit = std::nullopt);

/// True iff every cycle is a 4-cycle of `d` and no arc is used twice.
bool is_valid_packing(const BipartiteDigraph& d, const std::vector<FourCycle>& cycles);

}  // namespace bipfas
