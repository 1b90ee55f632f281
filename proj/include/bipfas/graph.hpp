#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace bipfas {

enum class Side : std::uint8_t { X = 0, Y = 1 };

constexpr Side other(Side s) { return s == Side::X ? Side::Y : Side::X; }

/// A vertex handle: the side of the bipartition and the position within it.
/// Ordering is (side, index) with every X vertex before every Y vertex.
struct VertexRef {
  Side side = Side::X;
  std::size_t index = 0;

  auto operator<=>(const VertexRef&) const = default;
};

constexpr VertexRef xv(std::size_t i) { return {Side::X, i}; }
constexpr VertexRef yv(std::size_t j) { return {Side::Y, j}; }

struct Arc {
  VertexRef tail;
  VertexRef head;

  Arc reversed() const { return {head, tail}; }
  auto operator<=>(const Arc&) const = default;
};

/// "x3" / "y7".
std::string to_string(VertexRef v);
/// "x3>y7" (tail first).
std::string to_string(const Arc& a);

using Cycle = std::vector<VertexRef>;

/// State of one cross pair (x_i, y_j).
enum class Orientation : std::uint8_t { Absent, ToY, ToX };

/// Dense orientation matrix over the cross pairs of a bipartition X (size m),
/// Y (size n). Same-side arcs and 2-cycles cannot be represented.
class BipartiteDigraph {
 public:
  BipartiteDigraph() = default;
  /// Arcless graph.
  BipartiteDigraph(std::size_t m, std::size_t n);

  /// Throws DuplicatePair, OutOfRange or SameSideArc.
  static BipartiteDigraph build(std::size_t m, std::size_t n, std::span<const Arc> arcs);
  /// `states` is row-major over (x, y); must hold m*n entries.
  static BipartiteDigraph from_orientations(std::size_t m, std::size_t n,
                                            std::vector<Orientation> states);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t side_size(Side s) const { return s == Side::X ? m_ : n_; }
  std::size_t vertex_count() const { return m_ + n_; }

  Orientation orientation(std::size_t x, std::size_t y) const { return states_[x * n_ + y]; }
  const std::vector<Orientation>& orientations() const { return states_; }

  bool contains(VertexRef v) const { return v.index < side_size(v.side); }
  bool has_arc(VertexRef tail, VertexRef head) const;
  bool has_arc(const Arc& a) const { return has_arc(a.tail, a.head); }
  bool adjacent(VertexRef u, VertexRef v) const { return has_arc(u, v) || has_arc(v, u); }

  std::vector<VertexRef> out_neighbors(VertexRef v) const;
  std::vector<VertexRef> in_neighbors(VertexRef v) const;

  std::size_t arc_count() const;
  /// Canonical order: X-tail arcs by (i, j), then Y-tail arcs by (j, i).
  std::vector<Arc> arcs() const;

  /// Dense ids: x_i -> i, y_j -> m + j. Id order equals VertexRef order.
  std::size_t id(VertexRef v) const { return v.side == Side::X ? v.index : m_ + v.index; }
  VertexRef vertex(std::size_t id) const { return id < m_ ? xv(id) : yv(id - m_); }
  std::vector<VertexRef> vertices() const;

  bool operator==(const BipartiteDigraph&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<Orientation> states_;
};

/// An induced subgraph with compacted indices and the map back to its parent.
struct Subgraph {
  BipartiteDigraph graph;
  std::vector<std::size_t> x_origin;
  std::vector<std::size_t> y_origin;

  VertexRef to_parent(VertexRef v) const {
    return {v.side, v.side == Side::X ? x_origin.at(v.index) : y_origin.at(v.index)};
  }
  Arc to_parent(const Arc& a) const { return {to_parent(a.tail), to_parent(a.head)}; }
};

BipartiteDigraph reverse(const BipartiteDigraph& d);

/// Exchanges the roles of X and Y, keeping indices and arc directions.
BipartiteDigraph swap_sides(const BipartiteDigraph& d);
constexpr VertexRef swap_side(VertexRef v) { return {other(v.side), v.index}; }

/// Index sets are treated as sets (sorted, deduplicated). Throws OutOfRange.
Subgraph induced_subgraph(const BipartiteDigraph& d, std::span<const std::size_t> xs,
                          std::span<const std::size_t> ys);

/// Throws ArcNotPresent if some arc of `f` is not an arc of `d`.
BipartiteDigraph delete_arcs(const BipartiteDigraph& d, std::span<const Arc> f);

/// Number of non-adjacent cross pairs, m*n - |A(D)|.
std::size_t absent_pair_count(const BipartiteDigraph& d);

bool is_tournament(const BipartiteDigraph& d);

/// A total order on a vertex set, queried by position.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<VertexRef> sequence);

  const std::vector<VertexRef>& sequence() const { return sequence_; }
  std::size_t size() const { return sequence_.size(); }
  /// 1-based position, or nullopt if `v` is not ordered.
  std::optional<std::size_t> position(VertexRef v) const;

  bool operator==(const LinearOrder& o) const { return sequence_ == o.sequence_; }

 private:
  std::vector<VertexRef> sequence_;
  std::map<VertexRef, std::size_t> position_;
};

using OrderOrCycle = std::variant<LinearOrder, Cycle>;

/// Kahn's algorithm, always removing the smallest in-degree-0 vertex
/// ((side, index) order). On failure returns a verified cycle, rotated so it
/// starts at its smallest vertex.
OrderOrCycle topological_order(const BipartiteDigraph& d);

bool is_acyclic(const BipartiteDigraph& d);

/// True iff `c` lists distinct vertices of `d` forming a closed directed walk.
bool is_cycle(const BipartiteDigraph& d, std::span<const VertexRef> c);

/// Throws ArcNotPresent if `f` is not a subset of A(D).
bool is_feedback_arc_set(const BipartiteDigraph& d, std::span<const Arc> f);

std::vector<Arc> reversed_arcs(std::span<const Arc> f);

}  // namespace bipfas
