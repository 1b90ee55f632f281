#include "bipfas/census.hpp"

#include <algorithm>

#include "bipfas/error.hpp"

namespace bipfas {

std::vector<P4> enumerate_induced_p4(const BipartiteDigraph& d) {
  const std::size_t total = d.vertex_count();
  std::vector<P4> out;
  for (std::size_t a = 0; a < total; ++a) {
    const VertexRef v1 = d.vertex(a);
    for (std::size_t b = 0; b < total; ++b) {
      const VertexRef v2 = d.vertex(b);
      if (!d.has_arc(v1, v2)) continue;
      for (std::size_t c = 0; c < total; ++c) {
        const VertexRef v3 = d.vertex(c);
        if (c == a || !d.has_arc(v2, v3)) continue;
        for (std::size_t e = 0; e < total; ++e) {
          const VertexRef v4 = d.vertex(e);
          if (e == b || !d.has_arc(v3, v4) || d.adjacent(v1, v4)) continue;
          out.push_back({{v1, v2, v3, v4}});
        }
      }
    }
  }
  // Loop order already yields id-lexicographic order, which matches P4 order.
  return out;
}

std::map<ClassKey2, std::vector<P4>> classes2(const BipartiteDigraph& d) {
  std::map<ClassKey2, std::vector<P4>> out;
  for (const P4& p : enumerate_induced_p4(d)) out[{p.v[0], p.v[2], p.v[3]}].push_back(p);
  return out;
}

std::map<ClassKey3, std::vector<P4>> classes3(const BipartiteDigraph& d) {
  std::map<ClassKey3, std::vector<P4>> out;
  for (const P4& p : enumerate_induced_p4(d)) out[{p.v[0], p.v[1], p.v[3]}].push_back(p);
  return out;
}

NeighborhoodPartition partition_around(const BipartiteDigraph& d, VertexRef u) {
  if (!d.contains(u)) throw Error(ErrorCode::OutOfRange, to_string(u));
  NeighborhoodPartition p;
  p.u = u;
  const Side far = other(u.side);
  for (std::size_t i = 0; i < d.side_size(far); ++i) {
    const VertexRef y{far, i};
    if (d.has_arc(y, u)) {
      p.y1.push_back(y);
    } else if (d.has_arc(u, y)) {
      p.y2.push_back(y);
    } else {
      p.y3.push_back(y);
    }
  }
  for (std::size_t i = 0; i < d.side_size(u.side); ++i) {
    const VertexRef x{u.side, i};
    if (x == u) continue;
    const bool reached =
        std::any_of(p.y2.begin(), p.y2.end(), [&](VertexRef y) { return d.has_arc(y, x); });
    (reached ? p.x2 : p.x1).push_back(x);
  }
  return p;
}

std::size_t first_count(const BipartiteDigraph& d, VertexRef v) {
  const NeighborhoodPartition p = partition_around(d, v);
  std::size_t count = 0;
  for (VertexRef x : p.x2)
    for (VertexRef y : p.y3)
      if (d.has_arc(x, y)) ++count;
  return count;
}

std::size_t sec_count(const BipartiteDigraph& d, VertexRef v) {
  const NeighborhoodPartition p = partition_around(d, v);
  std::size_t count = 0;
  for (VertexRef a : p.y1)
    for (VertexRef c : p.x2)
      if (!d.adjacent(a, c)) ++count;
  return count;
}

std::size_t first_count_enumerated(const BipartiteDigraph& d, VertexRef v) {
  if (!d.contains(v)) throw Error(ErrorCode::OutOfRange, to_string(v));
  std::size_t count = 0;
  for (const auto& [key, members] : classes2(d))
    if (key.first == v) ++count;
  return count;
}

std::size_t sec_count_enumerated(const BipartiteDigraph& d, VertexRef v) {
  if (!d.contains(v)) throw Error(ErrorCode::OutOfRange, to_string(v));
  std::size_t count = 0;
  for (const auto& [key, members] : classes3(d))
    if (key.second == v) ++count;
  return count;
}

std::vector<VertexCounts> vertex_counts(const BipartiteDigraph& d) {
  std::vector<VertexCounts> out(d.vertex_count());
  for (std::size_t id = 0; id < d.vertex_count(); ++id) {
    out[id] = {first_count(d, d.vertex(id)), sec_count(d, d.vertex(id))};
  }
  return out;
}

CensusSums census_sums(const BipartiteDigraph& d) {
  CensusSums s;
  for (const VertexCounts& c : vertex_counts(d)) {
    s.sum_first += c.first;
    s.sum_sec += c.sec;
  }
  s.count2 = classes2(d).size();
  s.count3 = classes3(d).size();
  return s;
}

}  // namespace bipfas
