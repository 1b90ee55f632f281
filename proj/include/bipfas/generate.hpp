#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>

#include "bipfas/graph.hpp"

namespace bipfas::gen {

struct GenSpec {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double bias = 0.5;  ///< probability that a pair is oriented x -> y
};

/// Random bipartite tournament. The generator is std::mt19937_64 seeded with
/// `seed`; pairs are visited row-major over (x, y) and pair (i, j) is x_i ->
/// y_j iff the top 53 bits of the next output, scaled to [0, 1), are below
/// `bias`. Both the engine and the scaling are fixed by the C++ standard, so
/// output is identical on every platform. Throws OutOfRange if bias is not
/// in [0, 1].
BipartiteDigraph random_bt(const GenSpec& spec);

/// random_bt minus the arcs of a maximal greedy 4-cycle packing.
BipartiteDigraph random_c4free(const GenSpec& spec);

inline constexpr std::size_t kMaxEnumeratedPairs = 16;

/// All 2^(m n) bipartite tournaments on (m, n), in binary-counter order:
/// instance c orients pair p = i n + j as y_j -> x_i iff bit p of c is set.
class TournamentRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = BipartiteDigraph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const TournamentRange* range, std::uint64_t code) : range_(range), code_(code) {}

    BipartiteDigraph operator*() const { return range_->at(code_); }
    iterator& operator++() {
      ++code_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const { return code_ == o.code_; }

   private:
    const TournamentRange* range_ = nullptr;
    std::uint64_t code_ = 0;
  };

  TournamentRange(std::size_t m, std::size_t n);

  std::uint64_t size() const { return std::uint64_t{1} << (m_ * n_); }
  BipartiteDigraph at(std::uint64_t code) const;
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t m_;
  std::size_t n_;
};

/// Throws TooLarge when m n exceeds kMaxEnumeratedPairs.
TournamentRange enumerate_bt(std::size_t m, std::size_t n);

}  // namespace bipfas::gen
