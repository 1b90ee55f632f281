#include "bipfas/graph.hpp"

#include <algorithm>
#include <queue>

#include "bipfas/error.hpp"

namespace bipfas {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SameSideArc: return "SameSideArc";
    case ErrorCode::ArcNotPresent: return "ArcNotPresent";
    case ErrorCode::HasFourCycle: return "HasFourCycle";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VertexNotInOrder: return "VertexNotInOrder";
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::string to_string(VertexRef v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

std::string to_string(const Arc& a) { return to_string(a.tail) + ">" + to_string(a.head); }

BipartiteDigraph::BipartiteDigraph(std::size_t m, std::size_t n)
    : m_(m), n_(n), states_(m * n, Orientation::Absent) {}

BipartiteDigraph BipartiteDigraph::build(std::size_t m, std::size_t n, std::span<const Arc> arcs) {
  BipartiteDigraph d(m, n);
  for (const Arc& a : arcs) {
    if (a.tail.side == a.head.side) throw Error(ErrorCode::SameSideArc, to_string(a));
    if (!d.contains(a.tail) || !d.contains(a.head)) throw Error(ErrorCode::OutOfRange, to_string(a));
    const bool to_y = a.tail.side == Side::X;
    const std::size_t x = to_y ? a.tail.index : a.head.index;
    const std::size_t y = to_y ? a.head.index : a.tail.index;
    Orientation& s = d.states_[x * n + y];
    if (s != Orientation::Absent) throw Error(ErrorCode::DuplicatePair, to_string(a));
    s = to_y ? Orientation::ToY : Orientation::ToX;
  }
  return d;
}

BipartiteDigraph BipartiteDigraph::from_orientations(std::size_t m, std::size_t n,
                                                     std::vector<Orientation> states) {
  if (states.size() != m * n) {
    throw Error(ErrorCode::OutOfRange, "orientation table has " + std::to_string(states.size()) +
                                           " entries, expected " + std::to_string(m * n));
  }
  BipartiteDigraph d;
  d.m_ = m;
  d.n_ = n;
  d.states_ = std::move(states);
  return d;
}

bool BipartiteDigraph::has_arc(VertexRef tail, VertexRef head) const {
  if (tail.side == head.side || !contains(tail) || !contains(head)) return false;
  if (tail.side == Side::X) return orientation(tail.index, head.index) == Orientation::ToY;
  return orientation(head.index, tail.index) == Orientation::ToX;
}

std::vector<VertexRef> BipartiteDigraph::out_neighbors(VertexRef v) const {
  std::vector<VertexRef> out;
  const Side s = other(v.side);
  for (std::size_t i = 0; i < side_size(s); ++i) {
    if (has_arc(v, {s, i})) out.push_back({s, i});
  }
  return out;
}

std::vector<VertexRef> BipartiteDigraph::in_neighbors(VertexRef v) const {
  std::vector<VertexRef> in;
  const Side s = other(v.side);
  for (std::size_t i = 0; i < side_size(s); ++i) {
    if (has_arc({s, i}, v)) in.push_back({s, i});
  }
  return in;
}

std::size_t BipartiteDigraph::arc_count() const {
  return states_.size() -
         static_cast<std::size_t>(std::count(states_.begin(), states_.end(), Orientation::Absent));
}

std::vector<Arc> BipartiteDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arc_count());
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (orientation(i, j) == Orientation::ToY) out.push_back({xv(i), yv(j)});
  for (std::size_t j = 0; j < n_; ++j)
    for (std::size_t i = 0; i < m_; ++i)
      if (orientation(i, j) == Orientation::ToX) out.push_back({yv(j), xv(i)});
  return out;
}

std::vector<VertexRef> BipartiteDigraph::vertices() const {
  std::vector<VertexRef> out;
  out.reserve(vertex_count());
  for (std::size_t id = 0; id < vertex_count(); ++id) out.push_back(vertex(id));
  return out;
}

BipartiteDigraph reverse(const BipartiteDigraph& d) {
  std::vector<Orientation> states = d.orientations();
  for (Orientation& s : states) {
    if (s == Orientation::ToY) {
      s = Orientation::ToX;
    } else if (s == Orientation::ToX) {
      s = Orientation::ToY;
    }
  }
  return BipartiteDigraph::from_orientations(d.m(), d.n(), std::move(states));
}

BipartiteDigraph swap_sides(const BipartiteDigraph& d) {
  // New X is old Y. Old (x_i -> y_j) becomes (y'_i -> x'_j): the matrix is
  // transposed and, since the tail changed sides, the state flips.
  std::vector<Orientation> states(d.m() * d.n(), Orientation::Absent);
  for (std::size_t i = 0; i < d.m(); ++i) {
    for (std::size_t j = 0; j < d.n(); ++j) {
      Orientation s = d.orientation(i, j);
      if (s == Orientation::ToY) {
        s = Orientation::ToX;
      } else if (s == Orientation::ToX) {
        s = Orientation::ToY;
      }
      states[j * d.m() + i] = s;
    }
  }
  return BipartiteDigraph::from_orientations(d.n(), d.m(), std::move(states));
}

namespace {

std::vector<std::size_t> normalized(std::span<const std::size_t> idx, std::size_t bound) {
  std::vector<std::size_t> out(idx.begin(), idx.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (!out.empty() && out.back() >= bound) {
    throw Error(ErrorCode::OutOfRange,
                "index " + std::to_string(out.back()) + " >= " + std::to_string(bound));
  }
  return out;
}

}  // namespace

Subgraph induced_subgraph(const BipartiteDigraph& d, std::span<const std::size_t> xs,
                          std::span<const std::size_t> ys) {
  Subgraph sub;
  sub.x_origin = normalized(xs, d.m());
  sub.y_origin = normalized(ys, d.n());
  const std::size_t m = sub.x_origin.size();
  const std::size_t n = sub.y_origin.size();
  std::vector<Orientation> states(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      states[i * n + j] = d.orientation(sub.x_origin[i], sub.y_origin[j]);
  sub.graph = BipartiteDigraph::from_orientations(m, n, std::move(states));
  return sub;
}

BipartiteDigraph delete_arcs(const BipartiteDigraph& d, std::span<const Arc> f) {
  std::vector<Orientation> states = d.orientations();
  for (const Arc& a : f) {
    if (!d.has_arc(a)) throw Error(ErrorCode::ArcNotPresent, to_string(a));
    const std::size_t x = a.tail.side == Side::X ? a.tail.index : a.head.index;
    const std::size_t y = a.tail.side == Side::X ? a.head.index : a.tail.index;
    states[x * d.n() + y] = Orientation::Absent;
  }
  return BipartiteDigraph::from_orientations(d.m(), d.n(), std::move(states));
}

std::size_t absent_pair_count(const BipartiteDigraph& d) { return d.m() * d.n() - d.arc_count(); }

bool is_tournament(const BipartiteDigraph& d) { return absent_pair_count(d) == 0; }

LinearOrder::LinearOrder(std::vector<VertexRef> sequence) : sequence_(std::move(sequence)) {
  for (std::size_t p = 0; p < sequence_.size(); ++p) position_.emplace(sequence_[p], p + 1);
}

std::optional<std::size_t> LinearOrder::position(VertexRef v) const {
  auto it = position_.find(v);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

OrderOrCycle topological_order(const BipartiteDigraph& d) {
  const std::size_t total = d.vertex_count();
  std::vector<std::size_t> indegree(total, 0);
  std::vector<std::vector<std::size_t>> succ(total);
  for (const Arc& a : d.arcs()) {
    succ[d.id(a.tail)].push_back(d.id(a.head));
    ++indegree[d.id(a.head)];
  }

  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t v = 0; v < total; ++v)
    if (indegree[v] == 0) ready.push(v);

  std::vector<bool> placed(total, false);
  std::vector<VertexRef> seq;
  seq.reserve(total);
  while (!ready.empty()) {
    const std::size_t v = ready.top();
    ready.pop();
    placed[v] = true;
    seq.push_back(d.vertex(v));
    for (std::size_t w : succ[v])
      if (--indegree[w] == 0) ready.push(w);
  }
  if (seq.size() == total) return LinearOrder(std::move(seq));

  // Every unplaced vertex has an unplaced in-neighbour; walk backwards until
  // a vertex repeats.
  std::size_t start = 0;
  while (placed[start]) ++start;
  std::vector<std::size_t> walk;
  std::vector<std::size_t> seen_at(total, total);
  std::size_t cur = start;
  while (seen_at[cur] == total) {
    seen_at[cur] = walk.size();
    walk.push_back(cur);
    for (const VertexRef& p : d.in_neighbors(d.vertex(cur))) {
      if (!placed[d.id(p)]) {
        cur = d.id(p);
        break;
      }
    }
  }
  Cycle cycle;
  for (std::size_t k = walk.size(); k-- > seen_at[cur];) cycle.push_back(d.vertex(walk[k]));
  std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
  if (!is_cycle(d, cycle)) throw Error(ErrorCode::InvariantViolation, "cycle witness invalid");
  return cycle;
}

bool is_acyclic(const BipartiteDigraph& d) {
  return std::holds_alternative<LinearOrder>(topological_order(d));
}

bool is_cycle(const BipartiteDigraph& d, std::span<const VertexRef> c) {
  if (c.size() < 2) return false;
  std::vector<VertexRef> sorted(c.begin(), c.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!d.has_arc(c[k], c[(k + 1) % c.size()])) return false;
  }
  return true;
}

bool is_feedback_arc_set(const BipartiteDigraph& d, std::span<const Arc> f) {
  return is_acyclic(delete_arcs(d, f));
}

std::vector<Arc> reversed_arcs(std::span<const Arc> f) {
  std::vector<Arc> out;
  out.reserve(f.size());
  for (const Arc& a : f) out.push_back(a.reversed());
  return out;
}

}  // namespace bipfas
