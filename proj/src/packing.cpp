#include "bipfas/packing.hpp"

#include <algorithm>

namespace bipfas {

Packing greedy_pack(const BipartiteDigraph& d, std::optional<std::size_t> limit) {
  Packing p{{}, d};
  while (!limit || p.cycles.size() < *limit) {
    const std::optional<FourCycle> c = find_4cycle(p.residual);
    if (!c) break;
    const std::array<Arc, 4> arcs = c->arcs();
    p.residual = delete_arcs(p.residual, arcs);
    p.cycles.push_back(*c);
  }
  return p;
}

bool is_valid_packing(const BipartiteDigraph& d, const std::vector<FourCycle>& cycles) {
  std::vector<Arc> used;
  for (const FourCycle& c : cycles) {
    if (!is_four_cycle(d, c)) return false;
    for (const Arc& a : c.arcs()) used.push_back(a);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

}  // namespace bipfas
