#include "bipfas/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>

#include "bipfas/error.hpp"
#include "bipfas/packing.hpp"

namespace bipfas::oracle {

MinFasResult min_fas_exact(const BipartiteDigraph& d) {
  const std::size_t total = d.vertex_count();
  if (total > kMaxFasVertices) {
    throw Error(ErrorCode::TooLarge, std::to_string(total) + " vertices, limit " +
                                         std::to_string(kMaxFasVertices));
  }
  std::vector<std::uint32_t> out_mask(total, 0);
  for (const Arc& a : d.arcs()) out_mask[d.id(a.tail)] |= std::uint32_t{1} << d.id(a.head);

  // cost[S]: fewest backward arcs over orders that place exactly S first.
  const std::size_t states = std::size_t{1} << total;
  std::vector<std::uint16_t> cost(states, std::numeric_limits<std::uint16_t>::max());
  std::vector<std::uint8_t> last(states, 0);
  cost[0] = 0;
  for (std::size_t s = 0; s < states; ++s) {
    const auto mask = static_cast<std::uint32_t>(s);
    for (std::size_t v = 0; v < total; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (mask & bit) continue;
      const auto c = static_cast<std::uint16_t>(cost[s] + std::popcount(out_mask[v] & mask));
      if (c < cost[s | bit]) {
        cost[s | bit] = c;
        last[s | bit] = static_cast<std::uint8_t>(v);
      }
    }
  }

  std::vector<std::size_t> order;
  for (std::size_t s = states - 1; s != 0; s &= ~(std::size_t{1} << last[s])) {
    order.push_back(last[s]);
  }
  std::reverse(order.begin(), order.end());
  std::vector<std::size_t> pos(total);
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = p;

  MinFasResult r;
  r.value = cost[states - 1];
  for (const Arc& a : d.arcs())
    if (pos[d.id(a.tail)] > pos[d.id(a.head)]) r.witness.push_back(a);
  if (r.witness.size() != r.value || !is_feedback_arc_set(d, r.witness)) {
    throw Error(ErrorCode::InvariantViolation, "min-FAS witness does not verify");
  }
  return r;
}

std::vector<FourCycle> all_4cycles(const BipartiteDigraph& d) {
  std::vector<FourCycle> out;
  for (std::size_t x = 0; x < d.m(); ++x)
    for (std::size_t x2 = x + 1; x2 < d.m(); ++x2)
      for (std::size_t y = 0; y < d.n(); ++y)
        for (std::size_t y2 = 0; y2 < d.n(); ++y2)
          if (d.has_arc(xv(x), yv(y)) && d.has_arc(yv(y), xv(x2)) && d.has_arc(xv(x2), yv(y2)) &&
              d.has_arc(yv(y2), xv(x))) {
            out.push_back({{xv(x), yv(y), xv(x2), yv(y2)}});
          }
  return out;
}

namespace {

class PackingSearch {
 public:
  PackingSearch(const BipartiteDigraph& d, std::vector<FourCycle> cycles)
      : n_(d.n()), cycles_(std::move(cycles)), used_(d.m() * d.n(), false) {}

  std::vector<FourCycle> run() {
    branch(0);
    return best_;
  }

 private:
  std::size_t pair_of(const Arc& a) const {
    const std::size_t x = a.tail.side == Side::X ? a.tail.index : a.head.index;
    const std::size_t y = a.tail.side == Side::X ? a.head.index : a.tail.index;
    return x * n_ + y;
  }

  void branch(std::size_t next) {
    if (current_.size() > best_.size()) best_ = current_;
    if (next == cycles_.size()) return;
    if (current_.size() + (cycles_.size() - next) <= best_.size()) return;

    const FourCycle& c = cycles_[next];
    const std::array<Arc, 4> arcs = c.arcs();
    const bool free = std::none_of(arcs.begin(), arcs.end(),
                                   [&](const Arc& a) { return used_[pair_of(a)]; });
    if (free) {
      for (const Arc& a : arcs) used_[pair_of(a)] = true;
      current_.push_back(c);
      branch(next + 1);
      current_.pop_back();
      for (const Arc& a : arcs) used_[pair_of(a)] = false;
    }
    branch(next + 1);
  }

  std::size_t n_;
  std::vector<FourCycle> cycles_;
  std::vector<bool> used_;
  std::vector<FourCycle> current_;
  std::vector<FourCycle> best_;
};

}  // namespace

MaxPackingResult max_c4_packing_exact(const BipartiteDigraph& d, std::size_t cycle_cap) {
  std::vector<FourCycle> cycles = all_4cycles(d);
  if (cycles.size() > cycle_cap) {
    throw Error(ErrorCode::TooLarge, std::to_string(cycles.size()) + " 4-cycles, cap " +
                                         std::to_string(cycle_cap));
  }
  MaxPackingResult r;
  r.witness = PackingSearch(d, std::move(cycles)).run();
  r.value = r.witness.size();
  if (!is_valid_packing(d, r.witness)) {
    throw Error(ErrorCode::InvariantViolation, "max-packing witness does not verify");
  }
  return r;
}

bool has_cycle_bruteforce(const BipartiteDigraph& d) {
  const std::size_t total = d.vertex_count();
  std::vector<std::vector<bool>> reach(total, std::vector<bool>(total, false));
  for (const Arc& a : d.arcs()) reach[d.id(a.tail)][d.id(a.head)] = true;
  for (std::size_t k = 0; k < total; ++k)
    for (std::size_t i = 0; i < total; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < total; ++j)
          if (reach[k][j]) reach[i][j] = true;
  for (std::size_t v = 0; v < total; ++v)
    if (reach[v][v]) return true;
  return false;
}

}  // namespace bipfas::oracle
