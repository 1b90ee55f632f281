#include "bipfas/c4free.hpp"

#include <algorithm>
#include <deque>

#include "bipfas/census.hpp"

namespace bipfas {

namespace {

std::string describe(const FourCycle& c) {
  std::string s;
  for (const VertexRef& v : c.v) s += to_string(v) + ">";
  return s + to_string(c.v[0]);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvariantViolation, what);
}

/// Labels of a recursion node's vertices in the input graph. The node graph
/// is a reversal of the corresponding input subgraph when `reversed` is set.
struct Frame {
  std::vector<VertexRef> x_root;
  std::vector<VertexRef> y_root;
  bool reversed = false;

  static Frame identity(const BipartiteDigraph& d) {
    Frame f;
    for (std::size_t i = 0; i < d.m(); ++i) f.x_root.push_back(xv(i));
    for (std::size_t j = 0; j < d.n(); ++j) f.y_root.push_back(yv(j));
    return f;
  }

  VertexRef root(VertexRef v) const {
    return v.side == Side::X ? x_root.at(v.index) : y_root.at(v.index);
  }

  Arc root(const Arc& a) const {
    const Arc r{root(a.tail), root(a.head)};
    return reversed ? r.reversed() : r;
  }

  Frame restrict_to(const Subgraph& s) const {
    Frame f;
    f.reversed = reversed;
    for (std::size_t i : s.x_origin) f.x_root.push_back(x_root.at(i));
    for (std::size_t j : s.y_origin) f.y_root.push_back(y_root.at(j));
    return f;
  }

  Frame swapped() const {
    Frame f = *this;
    std::swap(f.x_root, f.y_root);
    return f;
  }

  Frame flipped() const {
    Frame f = *this;
    f.reversed = !f.reversed;
    return f;
  }
};

std::vector<std::size_t> indices(std::span<const VertexRef> vs) {
  std::vector<std::size_t> out;
  out.reserve(vs.size());
  for (const VertexRef& v : vs) out.push_back(v.index);
  return out;
}

class Decomposer {
 public:
  Decomposer(const FasOptions& options, FasCertificate& out) : options_(options), out_(out) {}

  void solve(BipartiteDigraph d, Frame frame, std::size_t depth) {
    if (d.m() < 2 || d.n() < 2) return;
    TrimResult trim = trim_acyclic_vertices(d);
    if (!trim.removed.empty()) {
      frame = frame.restrict_to(trim.remaining);
      d = std::move(trim.remaining.graph);
      if (d.m() < 2 || d.n() < 2) return;
    }

    std::vector<VertexCounts> counts = vertex_counts(d);
    std::size_t sum_first = 0;
    std::size_t sum_sec = 0;
    for (const VertexCounts& c : counts) {
      sum_first += c.first;
      sum_sec += c.sec;
    }
    if (sum_first <= sum_sec) {
      split(d, counts, frame, depth, RecursionCase::Direct);
    } else {
      // Reversal swaps the two sums, so the direct case applies to D^R.
      const BipartiteDigraph r = reverse(d);
      split(r, vertex_counts(r), frame.flipped(), depth, RecursionCase::Reversed);
    }
  }

 private:
  void split(BipartiteDigraph d, const std::vector<VertexCounts>& counts, Frame frame,
             std::size_t depth, RecursionCase kind) {
    // Among first <= sec, largest slack sec - first, then smallest label.
    std::optional<std::size_t> best;
    for (std::size_t id = 0; id < counts.size(); ++id) {
      const VertexCounts& c = counts[id];
      if (c.first > c.sec) continue;
      if (!best || c.sec - c.first > counts[*best].sec - counts[*best].first) best = id;
    }
    require(best.has_value(), "no vertex with first <= sec");
    const VertexCounts chosen = counts[*best];
    VertexRef u = d.vertex(*best);
    if (u.side == Side::Y) {
      d = swap_sides(d);
      frame = frame.swapped();
      u = xv(u.index);
    }

    const NeighborhoodPartition p = partition_around(d, u);
    std::vector<Arc> cut;
    for (VertexRef x : p.x2)
      for (VertexRef y : p.y3)
        if (d.has_arc(x, y)) cut.push_back({x, y});

    std::vector<VertexRef> left_y = p.y1;
    left_y.insert(left_y.end(), p.y3.begin(), p.y3.end());
    std::vector<VertexRef> right_x = p.x2;
    right_x.push_back(u);
    const Subgraph d1 = induced_subgraph(d, indices(p.x1), indices(left_y));
    const Subgraph d2 = induced_subgraph(d, indices(right_x), indices(p.y2));

    RecursionRecord rec;
    rec.depth = depth;
    rec.u = frame.root(u);
    rec.kind = kind;
    rec.first = chosen.first;
    rec.sec = chosen.sec;
    rec.cut_size = cut.size();
    rec.node_lambda = absent_pair_count(d);
    rec.lambda1 = absent_pair_count(d1.graph);
    rec.lambda2 = absent_pair_count(d2.graph);
    out_.trace.push_back(rec);

    if (options_.check_invariants) check_node(d, u, p, cut, d1, d2, rec);

    for (const Arc& a : cut) out_.fas.push_back(frame.root(a));
    solve(d1.graph, frame.restrict_to(d1), depth + 1);
    solve(d2.graph, frame.restrict_to(d2), depth + 1);
  }

  static void check_node(const BipartiteDigraph& d, VertexRef u, const NeighborhoodPartition& p,
                         const std::vector<Arc>& cut, const Subgraph& d1, const Subgraph& d2,
                         const RecursionRecord& rec) {
    require(!find_4cycle(d), "node graph has a 4-cycle");
    require(rec.first <= rec.sec, "first(u) > sec(u)");
    require(rec.first == first_count_enumerated(d, u), "closed-form first disagrees");
    require(rec.sec == sec_count_enumerated(d, u), "closed-form sec disagrees");
    require(cut.size() == rec.first, "|E| != first(u)");
    for (VertexRef x : p.x2)
      for (VertexRef y : p.y1) require(!d.has_arc(x, y), "arc from X2 to Y1");
    for (VertexRef y : p.y2)
      for (VertexRef x : p.x1) require(!d.has_arc(y, x), "arc from Y2 to X1");
    require(!p.y1.empty() && !p.y2.empty(), "Y1 or Y2 empty after trimming");
    require(d1.graph.vertex_count() < d.vertex_count(), "no progress on D1");
    require(d2.graph.vertex_count() < d.vertex_count(), "no progress on D2");
    require(rec.node_lambda >= rec.lambda1 + rec.lambda2 + rec.sec, "Lambda split violated");
  }

  const FasOptions& options_;
  FasCertificate& out_;
};

}  // namespace

bool is_four_cycle(const BipartiteDigraph& d, const FourCycle& c) { return is_cycle(d, c.v); }

std::optional<FourCycle> find_4cycle(const BipartiteDigraph& d) {
  for (std::size_t x = 0; x < d.m(); ++x) {
    for (std::size_t x2 = x + 1; x2 < d.m(); ++x2) {
      for (std::size_t y = 0; y < d.n(); ++y) {
        if (!d.has_arc(xv(x), yv(y)) || !d.has_arc(yv(y), xv(x2))) continue;
        for (std::size_t y2 = 0; y2 < d.n(); ++y2) {
          if (d.has_arc(xv(x2), yv(y2)) && d.has_arc(yv(y2), xv(x))) {
            return FourCycle{{xv(x), yv(y), xv(x2), yv(y2)}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

FourCycleError::FourCycleError(const FourCycle& witness)
    : Error(ErrorCode::HasFourCycle, describe(witness)), witness_(witness) {}

TrimResult trim_acyclic_vertices(const BipartiteDigraph& d) {
  const std::size_t total = d.vertex_count();
  std::vector<std::size_t> indeg(total, 0);
  std::vector<std::size_t> outdeg(total, 0);
  for (const Arc& a : d.arcs()) {
    ++outdeg[d.id(a.tail)];
    ++indeg[d.id(a.head)];
  }
  std::vector<bool> alive(total, true);
  std::deque<std::size_t> queue;
  for (std::size_t v = 0; v < total; ++v)
    if (indeg[v] == 0 || outdeg[v] == 0) queue.push_back(v);

  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (!alive[v]) continue;
    alive[v] = false;
    const VertexRef vr = d.vertex(v);
    for (VertexRef w : d.out_neighbors(vr)) {
      const std::size_t id = d.id(w);
      if (alive[id] && --indeg[id] == 0) queue.push_back(id);
    }
    for (VertexRef w : d.in_neighbors(vr)) {
      const std::size_t id = d.id(w);
      if (alive[id] && --outdeg[id] == 0) queue.push_back(id);
    }
  }

  TrimResult out;
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;
  for (std::size_t v = 0; v < total; ++v) {
    const VertexRef vr = d.vertex(v);
    if (!alive[v]) {
      out.removed.push_back(vr);
    } else {
      (vr.side == Side::X ? xs : ys).push_back(vr.index);
    }
  }
  out.remaining = induced_subgraph(d, xs, ys);
  return out;
}

FasCertificate fas_c4free(const BipartiteDigraph& d, const FasOptions& options) {
  if (auto c = find_4cycle(d)) throw FourCycleError(*c);
  FasCertificate cert;
  cert.bound = absent_pair_count(d);
  Decomposer(options, cert).solve(d, Frame::identity(d), 0);
  std::sort(cert.fas.begin(), cert.fas.end());
  require(cert.fas.size() <= cert.bound, "feedback arc set exceeds Lambda");
  require(is_feedback_arc_set(d, cert.fas), "returned arc set leaves a cycle");
  return cert;
}

}  // namespace bipfas
