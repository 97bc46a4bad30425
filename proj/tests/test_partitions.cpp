#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "rhl/partitions.hpp"
#include "oracles.hpp"

using namespace rhl;

TEST_CASE("partition enumeration visits Bell(|E|) canonical colorings", "[partitions]") {
  struct Case {
    HostGraph host;
    int edges;
  };
  for (const auto& [host, edges] : {Case{HostGraph::complete(3), 1},
                                    Case{HostGraph::tripartite(1, 1, 2), 2},
                                    Case{HostGraph::tripartite(1, 2, 2), 4},
                                    Case{HostGraph::complete(4), 4}}) {
    REQUIRE(host.edge_count() == static_cast<EdgeId>(edges));
    std::set<std::vector<int>> seen;
    uint64_t count = 0;
    enumerate_color_partitions(host, [&](const Coloring& c) {
      ++count;
      CHECK(c.is_normalized());
      seen.insert(c.colors());
    });
    CHECK(count == oracle::bell_number(edges));
    CHECK(seen.size() == count);  // no partition repeats
  }
}

TEST_CASE("partition enumeration covers all 115975 partitions of ten edges",
          "[partitions]") {
  auto host = HostGraph::complete(5);
  uint64_t count = 0;
  uint64_t with_three_classes = 0;
  enumerate_color_partitions(host, [&](const Coloring& c) {
    ++count;
    if (c.palette_size() >= 3) ++with_three_classes;
  });
  CHECK(count == 115975);
  CHECK(count == oracle::bell_number(10));
  // Partitions into at most two classes: Bell-style count 2^9.
  CHECK(count - with_three_classes == 512);
}

TEST_CASE("partition enumeration rejects hosts with more than 12 edges", "[partitions]") {
  CHECK_THROWS_AS(enumerate_color_partitions(HostGraph::complete(6), [](const Coloring&) {}),
                  Error);
}
