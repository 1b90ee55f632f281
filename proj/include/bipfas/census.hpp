#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <vector>

#include "bipfas/graph.hpp"

namespace bipfas {

/// An induced path v1 -> v2 -> v3 -> v4 with v1, v4 non-adjacent.
struct P4 {
  std::array<VertexRef, 4> v;

  /// The same vertices walked backwards: a path of reverse(D).
  P4 reversed() const { return {{v[3], v[2], v[1], v[0]}}; }
  auto operator<=>(const P4&) const = default;
};

/// Identifies the paths that agree everywhere except the second vertex.
struct ClassKey2 {
  VertexRef first;
  VertexRef third;
  VertexRef fourth;
  auto operator<=>(const ClassKey2&) const = default;
};

/// Identifies the paths that agree everywhere except the third vertex.
struct ClassKey3 {
  VertexRef first;
  VertexRef second;
  VertexRef fourth;
  auto operator<=>(const ClassKey3&) const = default;
};

/// Neighbourhood split around u. The "y" sets lie on the side opposite u and
/// the "x" sets on u's side; for u in X this is literally Y1..Y3, X1, X2.
///   y1 = N-(u), y2 = N+(u), y3 = the rest of u's opposite side,
///   x2 = N+(y2), x1 = u's side minus x2 and u.
struct NeighborhoodPartition {
  VertexRef u;
  std::vector<VertexRef> y1, y2, y3;
  std::vector<VertexRef> x1, x2;
};

/// Sorted and duplicate-free; brute force over ordered 4-tuples.
std::vector<P4> enumerate_induced_p4(const BipartiteDigraph& d);

std::map<ClassKey2, std::vector<P4>> classes2(const BipartiteDigraph& d);
std::map<ClassKey3, std::vector<P4>> classes3(const BipartiteDigraph& d);

/// Throws OutOfRange.
NeighborhoodPartition partition_around(const BipartiteDigraph& d, VertexRef u);

/// Number of ~2 classes with `v` first, via arcs from x2 to y3 of
/// partition_around(d, v). Throws OutOfRange.
std::size_t first_count(const BipartiteDigraph& d, VertexRef v);
/// Number of ~3 classes with `v` second, via non-adjacent (y1, x2) pairs.
std::size_t sec_count(const BipartiteDigraph& d, VertexRef v);

/// The same quantities by bucketing enumerate_induced_p4.
std::size_t first_count_enumerated(const BipartiteDigraph& d, VertexRef v);
std::size_t sec_count_enumerated(const BipartiteDigraph& d, VertexRef v);

struct VertexCounts {
  std::size_t first = 0;
  std::size_t sec = 0;
};

/// Closed-form counts for every vertex, indexed by BipartiteDigraph::id.
std::vector<VertexCounts> vertex_counts(const BipartiteDigraph& d);

struct CensusSums {
  std::size_t sum_first = 0;
  std::size_t sum_sec = 0;
  std::size_t count2 = 0;  ///< |classes2(d)|
  std::size_t count3 = 0;  ///< |classes3(d)|

  bool operator==(const CensusSums&) const = default;
};

CensusSums census_sums(const BipartiteDigraph& d);

}  // namespace bipfas
