#include <catch2/catch_amalgamated.hpp>

#include "rhl/coloring.hpp"

using rhl::Coloring;
using rhl::Error;
using rhl::HostGraph;

TEST_CASE("normalization renumbers colors in first-appearance order", "[coloring]") {
  auto h = HostGraph::complete(5);
  std::vector<int> raw(h.edge_count(), 7);
  raw[0] = 5;
  raw[1] = 5;
  raw[2] = 9;
  raw[3] = 5;
  raw[4] = 2;
  Coloring c(h, raw);
  REQUIRE_FALSE(c.is_normalized());
  Coloring n = c.normalized();
  REQUIRE(n.is_normalized());
  CHECK(n.colors()[0] == 0);
  CHECK(n.colors()[1] == 0);
  CHECK(n.colors()[2] == 1);
  CHECK(n.colors()[3] == 0);
  CHECK(n.colors()[4] == 2);
  CHECK(n.colors()[5] == 3);
  CHECK(n.palette_size() == c.palette_size());

  // Idempotent.
  CHECK(n.normalized().colors() == n.colors());
}

TEST_CASE("normalization preserves the color partition", "[coloring]") {
  auto h = HostGraph::complete(5);
  std::vector<int> raw;
  for (int e = 0; e < h.edge_count(); ++e) raw.push_back((e * 13 + 5) % 4 + 100);
  Coloring c(h, raw);
  Coloring n = c.normalized();
  for (int e = 0; e < h.edge_count(); ++e)
    for (int f = 0; f < h.edge_count(); ++f)
      CHECK((raw[e] == raw[f]) == (n.colors()[e] == n.colors()[f]));
}

TEST_CASE("relabeling by a host automorphism preserves class sizes", "[coloring]") {
  auto h = HostGraph::complete(6);
  std::vector<int> raw(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) raw[e] = e % 3;
  Coloring c = Coloring(h, raw).normalized();

  std::vector<int> sigma{1, 0, 2, 3, 4, 5};  // swap vertices 0 and 1
  Coloring r = c.relabel_vertices(sigma);
  REQUIRE(r.is_normalized());
  REQUIRE(r.palette_size() == c.palette_size());

  auto class_sizes = [](const Coloring& x) {
    std::map<int, int> m;
    for (int col : x.colors()) m[col]++;
    std::multiset<int> sizes;
    for (auto& [k, v] : m) sizes.insert(v);
    return sizes;
  };
  CHECK(class_sizes(r) == class_sizes(c));

  // Color of an image edge equals color of the source edge.
  for (int e = 0; e < h.edge_count(); ++e) {
    auto ed = h.edge_unrank(e);
    auto img = h.edge_rank(sigma[ed[0]], sigma[ed[1]], sigma[ed[2]]);
    auto part_eq = [&](int x, int y) {
      return (c.colors()[x] == c.colors()[y]) == (r.colors()[h.edge_rank(sigma[h.edge_unrank(x)[0]], sigma[h.edge_unrank(x)[1]], sigma[h.edge_unrank(x)[2]])] == r.colors()[h.edge_rank(sigma[h.edge_unrank(y)[0]], sigma[h.edge_unrank(y)[1]], sigma[h.edge_unrank(y)[2]])]);
    };
    CHECK(part_eq(e, img));
  }
}

TEST_CASE("tripartite relabeling validates part structure", "[coloring]") {
  auto h = HostGraph::tripartite(2, 2, 3);
  std::vector<int> raw(h.edge_count(), 0);
  Coloring c(h, raw);

  // Swap within part 0: fine.
  CHECK_NOTHROW(c.relabel_vertices({1, 0, 2, 3, 4, 5, 6}));
  // Swap parts 0 and 1 wholesale (equal sizes): fine.
  CHECK_NOTHROW(c.relabel_vertices({2, 3, 0, 1, 4, 5, 6}));
  // Mix part 0 into part 2: rejected.
  CHECK_THROWS_MATCHES(c.relabel_vertices({4, 1, 2, 3, 0, 5, 6}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::InvalidPermutation;
                       }));
  // Map part 0 onto part 2 (unequal sizes): rejected.
  CHECK_THROWS_MATCHES(c.relabel_vertices({4, 5, 2, 3, 0, 1, 6}), Error,
                       Catch::Matchers::Predicate<Error>([](const Error& e) {
                         return e.code() == Error::Code::InvalidPermutation;
                       }));
  // Not a bijection.
  CHECK_THROWS_AS(c.relabel_vertices({0, 0, 2, 3, 4, 5, 6}), Error);
  CHECK_THROWS_AS(c.relabel_vertices({0, 1, 2}), Error);
}

TEST_CASE("color summary degrees", "[coloring]") {
  auto h = HostGraph::complete(5);

  Coloring mono(h, std::vector<int>(h.edge_count(), 0));
  auto s1 = rhl::color_summary(mono);
  CHECK(s1.palette_size == 1);
  CHECK(s1.max_color_degree == 1);
  for (int d : s1.vertex_color_degree) CHECK(d == 1);

  std::vector<int> rb(h.edge_count());
  for (int e = 0; e < h.edge_count(); ++e) rb[e] = e;
  auto s2 = rhl::color_summary(Coloring(h, rb));
  CHECK(s2.palette_size == 10);
  CHECK(s2.max_color_degree == 6);  // each vertex lies in C(4,2) edges
  for (int d : s2.vertex_color_degree) CHECK(d == 6);
}

TEST_CASE("coloring construction validation", "[coloring]") {
  auto h = HostGraph::complete(5);
  CHECK_THROWS_AS(Coloring(h, std::vector<int>(3, 0)), Error);
  CHECK_THROWS_AS(Coloring(h, std::vector<int>(h.edge_count(), -1)), Error);
}
