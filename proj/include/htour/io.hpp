#pragma once

// Text format:
//
//   # comment
//   htour <n>
//   <a> <b> <c> <+|->      one line per assigned triple, a < b < c
//   <x> <y> <z>            an ordered tuple asserted in R (cyclic closure)
//   order: <v1> ... <vn>   optional linear order
//   edge <u> <v>           optional graph edges (even expansion)
//
// Unlisted triples are holes. emit() writes triples in rank order, then the
// order line, then edges sorted.

#include <array>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "htour/core.hpp"

namespace htour {

struct HTDocument {
  HoleyHT ht;
  std::optional<LinearOrder> order;
  std::optional<SimpleGraph> graph;

  bool operator==(const HTDocument&) const = default;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

inline int parse_int(const std::string& tok, int line_no) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || tok.empty()) {
    throw InputError("line " + std::to_string(line_no) + ": expected an integer, got '" + tok + "'");
  }
  return v;
}

}  // namespace detail

inline constexpr int kMaxVertices = 512;

inline HTDocument parse_htfile(std::string_view text) {
  HTDocument doc;
  bool have_header = false;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::istringstream in{std::string(text)};
  int line_no = 0;

  auto fail = [&](const std::string& what) -> InputError {
    return InputError("line " + std::to_string(line_no) + ": " + what);
  };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tok = detail::split_ws(raw);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "htour") throw fail("expected header 'htour <n>'");
      const int n = detail::parse_int(tok[1], line_no);
      if (n < 0 || n > kMaxVertices) throw fail("vertex count out of range");
      doc.ht = HoleyHT(n);
      have_header = true;
      continue;
    }

    if (tok[0] == "order:" || tok[0] == "order") {
      if (doc.order) throw fail("repeated order line");
      std::vector<Vertex> perm;
      for (std::size_t i = 1; i < tok.size(); ++i) perm.push_back(detail::parse_int(tok[i], line_no));
      if (static_cast<int>(perm.size()) != doc.ht.size()) throw fail("order must list every vertex once");
      doc.order = LinearOrder(std::move(perm));
      continue;
    }
    if (tok[0] == "edge") {
      if (tok.size() != 3) throw fail("expected 'edge <u> <v>'");
      const Vertex u = detail::parse_int(tok[1], line_no), v = detail::parse_int(tok[2], line_no);
      doc.ht.require_vertex(u);
      doc.ht.require_vertex(v);
      if (u == v) throw fail("loop edge");
      edges.emplace_back(u, v);
      continue;
    }

    if (tok.size() != 3 && tok.size() != 4) throw fail("expected '<a> <b> <c> [+|-]'");
    const Vertex x = detail::parse_int(tok[0], line_no), y = detail::parse_int(tok[1], line_no),
                 z = detail::parse_int(tok[2], line_no);
    for (Vertex v : {x, y, z})
      if (!doc.ht.contains(v)) throw fail("vertex " + std::to_string(v) + " out of range");
    if (x == y || y == z || x == z) throw fail("repeated vertex in triple");
    Orientation want;
    if (tok.size() == 4) {
      if (!(x < y && y < z)) throw fail("signed triples must be listed with a < b < c");
      if (tok[3] == "+") want = Orientation::Plus;
      else if (tok[3] == "-") want = Orientation::Minus;
      else throw fail("orientation must be '+' or '-'");
    } else {
      want = orientation_placing(x, y, z);
    }
    const Triple t = Triple::of(x, y, z);
    const Orientation have = doc.ht.at(t);
    if (have != Orientation::Hole && have != want) {
      throw ContradictoryTriple("line " + std::to_string(line_no) + ": both orientations of {" +
                                std::to_string(t.a) + "," + std::to_string(t.b) + "," +
                                std::to_string(t.c) + "} asserted");
    }
    doc.ht.set(t, want);
  }
  if (!have_header) throw InputError("missing header 'htour <n>'");
  if (!edges.empty()) {
    doc.graph = SimpleGraph(doc.ht.size());
    for (auto [u, v] : edges) doc.graph->add_edge(u, v);
  }
  return doc;
}

inline HTDocument read_htfile(std::istream& in) {
  return parse_htfile(std::string(std::istreambuf_iterator<char>(in), {}));
}

inline std::vector<std::string> emit_lines(const HTDocument& doc) {
  std::vector<std::string> lines;
  lines.push_back("htour " + std::to_string(doc.ht.size()));
  for (const Triple& t : all_triples(doc.ht.size())) {
    const Orientation o = doc.ht.at(t);
    if (o == Orientation::Hole) continue;
    lines.push_back(std::to_string(t.a) + " " + std::to_string(t.b) + " " + std::to_string(t.c) +
                    " " + orientation_sign(o));
  }
  if (doc.order) {
    std::string s = "order:";
    for (Vertex v : doc.order->perm()) s += " " + std::to_string(v);
    lines.push_back(std::move(s));
  }
  if (doc.graph)
    for (auto [u, v] : doc.graph->edges())
      lines.push_back("edge " + std::to_string(u) + " " + std::to_string(v));
  return lines;
}

inline std::vector<std::string> emit_lines(const HoleyHT& A) { return emit_lines(HTDocument{A, {}, {}}); }

inline std::string emit_htfile(const HTDocument& doc) {
  std::string out;
  for (const auto& l : emit_lines(doc)) out += l + '\n';
  return out;
}

inline std::string emit_htfile(const HoleyHT& A) { return emit_htfile(HTDocument{A, {}, {}}); }

}  // namespace htour
