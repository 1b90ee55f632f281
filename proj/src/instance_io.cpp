#include "bipfas/instance_io.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "bipfas/error.hpp"

namespace bipfas::io {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::Parse, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::string render_instance(const BipartiteDigraph& d) {
  std::string out = "p bt " + std::to_string(d.m()) + " " + std::to_string(d.n()) + "\n";
  for (const Arc& a : d.arcs()) out += "a " + to_string(a.tail) + " " + to_string(a.head) + "\n";
  return out;
}

VertexRef parse_vertex(std::string_view token) {
  if (token.size() < 2 || (token[0] != 'x' && token[0] != 'y')) {
    throw Error(ErrorCode::Parse, "bad vertex '" + std::string(token) + "'");
  }
  return {token[0] == 'x' ? Side::X : Side::Y, parse_count(token.substr(1), "vertex index")};
}

Arc parse_arc(std::string_view token) {
  const std::size_t gt = token.find('>');
  if (gt == std::string_view::npos) {
    throw Error(ErrorCode::Parse, "bad arc '" + std::string(token) + "'");
  }
  return {parse_vertex(token.substr(0, gt)), parse_vertex(token.substr(gt + 1))};
}

BipartiteDigraph parse_instance(std::string_view text) {
  bool have_header = false;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto fields = split_ws(line);
    if (fields.empty() || fields[0] == "c") continue;
    try {
      if (fields[0] == "p") {
        if (have_header) throw Error(ErrorCode::Parse, "second problem line");
        if (fields.size() != 4 || fields[1] != "bt") {
          throw Error(ErrorCode::Parse, "expected 'p bt <m> <n>'");
        }
        m = parse_count(fields[2], "side size");
        n = parse_count(fields[3], "side size");
        have_header = true;
      } else if (fields[0] == "a") {
        if (!have_header) throw Error(ErrorCode::Parse, "arc before problem line");
        if (fields.size() != 3) throw Error(ErrorCode::Parse, "expected 'a <tail> <head>'");
        arcs.push_back({parse_vertex(fields[1]), parse_vertex(fields[2])});
      } else {
        throw Error(ErrorCode::Parse, "unknown line type '" + std::string(fields[0]) + "'");
      }
    } catch (const Error& e) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
  if (!have_header) throw Error(ErrorCode::Parse, "missing problem line");
  try {
    return BipartiteDigraph::build(m, n, arcs);
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Parse, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace bipfas::io
