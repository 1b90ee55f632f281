#include <doctest.h>

#include "bipfas/error.hpp"
#include "bipfas/oracles.hpp"
#include "bipfas/packing.hpp"
#include "fixtures.hpp"

using namespace bipfas;
using fixtures::four_cycle_bt;
using fixtures::six_cycle;

namespace {

/// Smallest arc subset whose removal is acyclic, by trying subsets of
/// increasing size.
std::size_t min_fas_by_subsets(const BipartiteDigraph& d) {
  const std::vector<Arc> arcs = d.arcs();
  std::size_t best = arcs.size();
  for (std::uint32_t mask = 0; mask < (1U << arcs.size()); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    std::vector<Arc> f;
    for (std::size_t i = 0; i < arcs.size(); ++i)
      if (mask & (1U << i)) f.push_back(arcs[i]);
    if (!oracle::has_cycle_bruteforce(delete_arcs(d, f))) best = size;
  }
  return best;
}

/// Largest arc-disjoint subfamily of all_4cycles, by trying every subfamily.
std::size_t max_packing_by_subsets(const BipartiteDigraph& d) {
  const std::vector<FourCycle> cycles = oracle::all_4cycles(d);
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << cycles.size()); ++mask) {
    std::vector<FourCycle> pick;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (mask & (1U << i)) pick.push_back(cycles[i]);
    if (pick.size() > best && is_valid_packing(d, pick)) best = pick.size();
  }
  return best;
}

}  // namespace

TEST_CASE("min_fas_exact") {
  CHECK(oracle::min_fas_exact(four_cycle_bt()).value == 1);
  const auto six = oracle::min_fas_exact(six_cycle());
  CHECK(six.value == 1);
  CHECK(is_feedback_arc_set(six_cycle(), six.witness));
  const auto none = oracle::min_fas_exact(fixtures::all_x_to_y(4, 3));
  CHECK(none.value == 0);
  CHECK(none.witness.empty());
  CHECK(oracle::min_fas_exact(BipartiteDigraph(0, 0)).value == 0);
}

TEST_CASE("min_fas_exact matches arc-subset search") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const BipartiteDigraph d = fixtures::random_digraph(rng, 1 + rng() % 4, 1 + rng() % 4, 0.25);
    if (d.arc_count() > 12) continue;
    const auto r = oracle::min_fas_exact(d);
    CHECK(r.value == min_fas_by_subsets(d));
    CHECK(r.witness.size() == r.value);
    CHECK(is_feedback_arc_set(d, r.witness));
  }
}

TEST_CASE("min_fas_exact refuses large graphs") {
  try {
    oracle::min_fas_exact(BipartiteDigraph(12, 11));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
}

TEST_CASE("max_c4_packing_exact") {
  CHECK(oracle::max_c4_packing_exact(four_cycle_bt()).value == 1);
  CHECK(oracle::max_c4_packing_exact(six_cycle()).value == 0);

  // Two vertex-disjoint 4-cycles in a 4+4 graph; all other pairs absent.
  const std::vector<Arc> arcs{{xv(0), yv(0)}, {yv(0), xv(1)}, {xv(1), yv(1)}, {yv(1), xv(0)},
                              {xv(2), yv(2)}, {yv(2), xv(3)}, {xv(3), yv(3)}, {yv(3), xv(2)}};
  const BipartiteDigraph twin = BipartiteDigraph::build(4, 4, arcs);
  CHECK(oracle::all_4cycles(twin).size() == 2);
  const auto r = oracle::max_c4_packing_exact(twin);
  CHECK(r.value == 2);
  CHECK(is_valid_packing(twin, r.witness));

  CHECK_THROWS_AS(oracle::max_c4_packing_exact(four_cycle_bt(), 0), Error);
}

TEST_CASE("max_c4_packing_exact matches subfamily search") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    const BipartiteDigraph d = fixtures::random_digraph(rng, 2 + rng() % 3, 2 + rng() % 3, 0.1);
    if (oracle::all_4cycles(d).size() > 14) continue;
    CHECK(oracle::max_c4_packing_exact(d).value == max_packing_by_subsets(d));
  }
}

TEST_CASE("all_4cycles") {
  CHECK(oracle::all_4cycles(four_cycle_bt()).size() == 1);
  CHECK(oracle::all_4cycles(BipartiteDigraph(3, 3)).empty());

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const BipartiteDigraph t = fixtures::random_digraph(rng, 3, 3, 0.0);
    // Every 4-cycle is a closed walk x y x' y' counted once from each X vertex.
    std::size_t walks = 0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c)
          for (std::size_t e = 0; e < 3; ++e)
            if (a != c && b != e && t.has_arc(xv(a), yv(b)) && t.has_arc(yv(b), xv(c)) &&
                t.has_arc(xv(c), yv(e)) && t.has_arc(yv(e), xv(a)))
              ++walks;
    const auto cycles = oracle::all_4cycles(t);
    CHECK(cycles.size() * 2 == walks);
    for (const FourCycle& cyc : cycles) {
      CHECK(is_four_cycle(t, cyc));
      CHECK(cyc.v[0] < cyc.v[2]);
    }
  }
}

TEST_CASE("has_cycle_bruteforce") {
  CHECK(oracle::has_cycle_bruteforce(four_cycle_bt()));
  CHECK(oracle::has_cycle_bruteforce(six_cycle()));
  CHECK_FALSE(oracle::has_cycle_bruteforce(fixtures::path_instance()));
}
