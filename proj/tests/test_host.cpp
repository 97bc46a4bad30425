#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rhl/host.hpp"

using rhl::Edge;
using rhl::EdgeId;
using rhl::Error;
using rhl::HostGraph;

TEST_CASE("complete host basics", "[host]") {
  auto h = HostGraph::complete(5);
  REQUIRE(h.vertex_count() == 5);
  REQUIRE(h.edge_count() == 10);
  REQUIRE(h.is_edge(0, 1, 2));
  REQUIRE(h.is_edge(4, 2, 0));
  REQUIRE_FALSE(h.is_edge(0, 1, 1));
  REQUIRE_FALSE(h.is_edge(0, 1, 5));

  CHECK(h.edge_rank(0, 1, 2) == 0);
  CHECK(h.edge_rank(0, 1, 3) == 1);
  CHECK(h.edge_rank(2, 3, 4) == 9);
  CHECK(h.edge_rank(4, 3, 2) == 9);  // order-insensitive
}

TEST_CASE("complete host parameter validation", "[host]") {
  CHECK_THROWS_MATCHES(HostGraph::complete(2), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::BadParameters;
                       }));
  CHECK_THROWS_MATCHES(HostGraph::complete(500), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::TooLarge;
                       }));
  CHECK_THROWS_MATCHES(HostGraph::complete(5).edge_rank(0, 1, 1), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::NotAnEdge;
                       }));
  CHECK_THROWS_MATCHES(HostGraph::complete(5).edge_unrank(10), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::OutOfRange;
                       }));
}

TEST_CASE("tripartite host basics", "[host]") {
  auto h = HostGraph::tripartite(2, 3, 4);
  REQUIRE(h.vertex_count() == 9);
  REQUIRE(h.edge_count() == 24);
  REQUIRE(h.part_of(0) == 0);
  REQUIRE(h.part_of(2) == 1);
  REQUIRE(h.part_of(5) == 2);
  REQUIRE(h.is_edge(0, 2, 5));
  REQUIRE_FALSE(h.is_edge(0, 1, 5));  // two vertices in part 0
  REQUIRE_FALSE(h.is_edge(2, 3, 4));  // two vertices in part 1

  // Mixed radix: rank = i1 + n1*i2 + n1*n2*i3.
  CHECK(h.edge_rank(0, 2, 5) == 0);
  CHECK(h.edge_rank(1, 2, 5) == 1);
  CHECK(h.edge_rank(0, 3, 5) == 2);
  CHECK(h.edge_rank(1, 4, 8) == 23);
}

TEST_CASE("rank and unrank are mutually inverse", "[host]") {
  std::vector<HostGraph> hosts;
  for (int n : {3, 4, 5, 7, 12, 30}) hosts.push_back(HostGraph::complete(n));
  hosts.push_back(HostGraph::tripartite(1, 1, 1));
  hosts.push_back(HostGraph::tripartite(2, 3, 4));
  hosts.push_back(HostGraph::tripartite(10, 10, 10));
  hosts.push_back(HostGraph::tripartite(1, 1, 9));

  for (const auto& h : hosts) {
    for (EdgeId r = 0; r < h.edge_count(); ++r) {
      Edge e = h.edge_unrank(r);
      REQUIRE(h.is_edge(e[0], e[1], e[2]));
      REQUIRE(h.edge_rank(e) == r);
    }
  }
}

TEST_CASE("unrank matches the documented enumeration orders", "[host]") {
  auto h5 = HostGraph::complete(5);
  auto colex = oracle::all_edges_colex(5);
  for (EdgeId r = 0; r < h5.edge_count(); ++r) REQUIRE(h5.edge_unrank(r) == colex[r]);

  auto ht = HostGraph::tripartite(2, 3, 4);
  auto mixed = oracle::all_edges_tripartite(2, 3, 4);
  for (EdgeId r = 0; r < ht.edge_count(); ++r) REQUIRE(ht.edge_unrank(r) == mixed[r]);
}

TEST_CASE("edge helper operations", "[host]") {
  Edge e(4, 0, 2);
  CHECK(e[0] == 0);
  CHECK(e[2] == 4);
  CHECK(e.contains(2));
  CHECK_FALSE(e.contains(3));
  CHECK(e.intersection_size(Edge(0, 2, 5)) == 2);
  CHECK(e.intersection_size(Edge(1, 3, 5)) == 0);
}
