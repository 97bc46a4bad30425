#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rhl/coloring.hpp"

namespace rhl {

// Line-oriented coloring format:
//   host complete <n>        | host tripartite <n1> <n2> <n3>
//   e <v1> <v2> <v3> c <color>     (one line per host edge, any order)
// '#' starts a comment; blank lines are skipped. Parse errors carry the
// 1-based line number. Parsing normalizes color ids.
inline Coloring parse_coloring(std::istream& in) {
  auto fail = [](int line, const std::string& why) -> void {
    throw Error(Error::Code::Parse, "line " + std::to_string(line) + ": " + why);
  };

  std::optional<HostGraph> host;
  std::vector<int> colors;
  std::vector<bool> seen;
  int assigned = 0;
  int lineno = 0;
  int last_edge_line = 0;
  std::string raw;

  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;

    if (tag == "host") {
      if (host) fail(lineno, "duplicate host line");
      std::string kind;
      if (!(ls >> kind)) fail(lineno, "missing host kind");
      try {
        if (kind == "complete") {
          int n;
          if (!(ls >> n)) fail(lineno, "malformed complete host line");
          host = HostGraph::complete(n);
        } else if (kind == "tripartite") {
          int n1, n2, n3;
          if (!(ls >> n1 >> n2 >> n3)) fail(lineno, "malformed tripartite host line");
          host = HostGraph::tripartite(n1, n2, n3);
        } else {
          fail(lineno, "unknown host kind '" + kind + "'");
        }
      } catch (const Error& e) {
        if (e.code() == Error::Code::Parse) throw;
        fail(lineno, e.what());
      }
      std::string extra;
      if (ls >> extra) fail(lineno, "trailing tokens on host line");
      colors.assign(host->edge_count(), -1);
      seen.assign(host->edge_count(), false);
    } else if (tag == "e") {
      if (!host) fail(lineno, "edge line before host line");
      int a, b, c, col;
      std::string ctag;
      if (!(ls >> a >> b >> c >> ctag >> col) || ctag != "c")
        fail(lineno, "malformed edge line (want: e <v1> <v2> <v3> c <color>)");
      std::string extra;
      if (ls >> extra) fail(lineno, "trailing tokens on edge line");
      if (!host->is_edge(a, b, c)) fail(lineno, "not a host edge");
      if (col < 0) fail(lineno, "negative color id");
      EdgeId id = host->edge_rank(a, b, c);
      if (seen[id]) fail(lineno, "duplicate edge");
      seen[id] = true;
      colors[id] = col;
      ++assigned;
      last_edge_line = lineno;
    } else {
      fail(lineno, "unknown directive '" + tag + "'");
    }
  }

  if (!host) fail(lineno ? lineno : 1, "missing host line");
  if (assigned < host->edge_count()) {
    for (EdgeId e = 0; e < host->edge_count(); ++e) {
      if (!seen[e]) {
        Edge ed = host->edge_unrank(e);
        fail(last_edge_line ? last_edge_line : lineno,
             "missing edge " + std::to_string(ed[0]) + " " + std::to_string(ed[1]) + " " +
                 std::to_string(ed[2]));
      }
    }
  }
  return Coloring(*host, std::move(colors)).normalized();
}

inline Coloring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  return parse_coloring(in);
}

inline void serialize_coloring(const Coloring& c, std::ostream& out) {
  const HostGraph& h = c.host();
  if (h.kind() == HostKind::Complete) {
    out << "host complete " << h.vertex_count() << "\n";
  } else {
    auto p = h.part_sizes();
    out << "host tripartite " << p[0] << " " << p[1] << " " << p[2] << "\n";
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    out << "e " << ed[0] << " " << ed[1] << " " << ed[2] << " c " << c.color_of(e) << "\n";
  }
}

inline std::string serialize_coloring(const Coloring& c) {
  std::ostringstream out;
  serialize_coloring(c, out);
  return out.str();
}

}  // namespace rhl
