#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bipfas/c4free.hpp"
#include "bipfas/graph.hpp"

// Instance text format:
//   p bt <m> <n>
//   a x<i> y<j>      (arc x_i -> y_j)
//   a y<j> x<i>      (arc y_j -> x_i)
// Lines starting with `c` and blank lines are ignored. Pairs that are not
// listed are non-adjacent. Rendering emits arcs in canonical order.

namespace bipfas::io {

std::string render_instance(const BipartiteDigraph& d);

/// Throws Error(Parse) with the offending line number.
BipartiteDigraph parse_instance(std::string_view text);

/// "x3" / "y7". Throws Error(Parse).
VertexRef parse_vertex(std::string_view token);
/// "x3>y7". Throws Error(Parse).
Arc parse_arc(std::string_view token);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace bipfas::io
