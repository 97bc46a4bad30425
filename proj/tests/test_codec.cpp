#include <catch2/catch_amalgamated.hpp>

#include "rhl/codec.hpp"

using rhl::Coloring;
using rhl::Error;
using rhl::HostGraph;

static bool parse_fails_with(const std::string& text, const std::string& needle) {
  try {
    rhl::parse_coloring(text);
  } catch (const Error& e) {
    if (e.code() != Error::Code::Parse) return false;
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

TEST_CASE("coloring files round-trip byte-identically", "[codec]") {
  auto h = HostGraph::complete(5);
  std::vector<int> raw(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) raw[e] = (e * 7 + 2) % 4;
  Coloring c = Coloring(h, raw).normalized();

  std::string s1 = rhl::serialize_coloring(c);
  Coloring back = rhl::parse_coloring(s1);
  std::string s2 = rhl::serialize_coloring(back);
  CHECK(s1 == s2);
  CHECK(back.colors() == c.colors());
}

TEST_CASE("parsing accepts comments, blank lines and shuffled edges", "[codec]") {
  std::string text =
      "# tripartite example\n"
      "\n"
      "host tripartite 1 1 2   # one vertex in parts 0 and 1\n"
      "e 0 1 3 c 12\n"
      "e 0 1 2 c 4  # first edge by rank, listed second\n";
  Coloring c = rhl::parse_coloring(text);
  CHECK(c.host().kind() == rhl::HostKind::Tripartite);
  CHECK(c.palette_size() == 2);
  // Normalized on load: rank 0 edge gets color 0.
  CHECK(c.colors() == std::vector<int>{0, 1});
}

TEST_CASE("parse errors carry line numbers and reasons", "[codec]") {
  CHECK(parse_fails_with("host complete 5\ne 0 1 2 c 0\ne 0 1 2 c 1\n", "line 3: duplicate edge"));
  CHECK(parse_fails_with("host complete 5\ne 0 1 1 c 0\n", "line 2: not a host edge"));
  CHECK(parse_fails_with("host tripartite 2 2 2\ne 0 1 4 c 0\n", "line 2: not a host edge"));
  CHECK(parse_fails_with("host complete 5\ne 0 1 2 q 0\n", "line 2: malformed edge line"));
  CHECK(parse_fails_with("e 0 1 2 c 0\n", "line 1: edge line before host"));
  CHECK(parse_fails_with("host complete 2\n", "line 1: "));
  CHECK(parse_fails_with("host squarish 4\n", "unknown host kind"));
  CHECK(parse_fails_with("hosst complete 4\n", "unknown directive"));
  CHECK(parse_fails_with("host complete 5\ne 0 1 2 c -3\n", "negative color"));
  CHECK(parse_fails_with("", "missing host line"));

  // Missing edges name one absent edge.
  CHECK(parse_fails_with("host complete 4\ne 0 1 2 c 0\n", "missing edge 0 1 3"));
}

TEST_CASE("serialization lists edges in rank order", "[codec]") {
  auto h = HostGraph::tripartite(1, 1, 2);
  Coloring c(h, {0, 1});
  CHECK(rhl::serialize_coloring(c) ==
        "host tripartite 1 1 2\n"
        "e 0 1 2 c 0\n"
        "e 0 1 3 c 1\n");
}
