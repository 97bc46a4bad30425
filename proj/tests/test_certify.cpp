#include <catch2/catch_amalgamated.hpp>

#include "rhl/certify.hpp"
#include "rhl/construct.hpp"

using namespace rhl;
using construct::StructureCase;

namespace {

template <class Cert>
const Cert& expect_cert(const CertifyResult<Cert>& r) {
  if (auto* rej = std::get_if<Rejection>(&r)) FAIL("rejected: " << rej->reason);
  return std::get<Cert>(r);
}

template <class Cert>
const Rejection& expect_rejection(const CertifyResult<Cert>& r, Rejection::Kind kind) {
  REQUIRE(std::holds_alternative<Rejection>(r));
  const auto& rej = std::get<Rejection>(r);
  CHECK(rej.kind == kind);
  return rej;
}

Coloring random_coloring(const HostGraph& h, int colors, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> cols(h.edge_count());
  for (auto& c : cols) c = std::uniform_int_distribution<int>(0, colors - 1)(rng);
  return Coloring(h, std::move(cols)).normalized();
}

}  // namespace

TEST_CASE("tight certifier decomposes the lower-bound coloring", "[certify]") {
  auto c = construct::tight_lower_bound(9);
  auto cert = expect_cert(certify_tight(c));
  REQUIRE(cert.parts.size() == 3);
  CHECK(cert.parts[0].vertices == std::vector<Vertex>{0, 1, 2});
  CHECK(cert.parts[1].vertices == std::vector<Vertex>{3, 4, 5});
  CHECK(cert.parts[2].vertices == std::vector<Vertex>{6, 7, 8});
  CHECK(verify_certificate(c, cert).ok);

  // n = 11 leaves two vertices on base-only edges; they join the first part.
  auto c11 = construct::tight_lower_bound(11);
  auto cert11 = expect_cert(certify_tight(c11));
  REQUIRE(cert11.parts.size() == 3);
  CHECK(cert11.parts[0].vertices == std::vector<Vertex>{0, 1, 2, 9, 10});
  CHECK(verify_certificate(c11, cert11).ok);
}

TEST_CASE("tight certifier reports failed preconditions", "[certify]") {
  // Rainbow coloring: every edge its own color.
  auto h = HostGraph::complete(5);
  std::vector<int> all(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) all[e] = static_cast<int>(e);
  auto rej = expect_rejection(certify_tight(Coloring(h, all)),
                              Rejection::Kind::PreconditionFailed);
  REQUIRE(rej.witness.has_value());
  std::set<int> witness_colors;
  Coloring rainbow(h, all);
  for (EdgeId e : rej.witness->edge_images) witness_colors.insert(rainbow.colors()[e]);
  CHECK(witness_colors.size() == 3);  // the witness really is rainbow

  expect_rejection(certify_tight(Coloring(h, std::vector<int>(h.edge_count(), 0))),
                   Rejection::Kind::PreconditionFailed);  // one color
  auto h4 = HostGraph::complete(4);
  expect_rejection(certify_tight(random_coloring(h4, 2, 1)),
                   Rejection::Kind::PreconditionFailed);  // too small
  expect_rejection(certify_tight(random_coloring(HostGraph::tripartite(3, 3, 3), 2, 1)),
                   Rejection::Kind::PreconditionFailed);  // wrong host
}

TEST_CASE("tight certifier handles sampled partitions", "[certify]") {
  for (int n : {7, 9}) {
    auto h = HostGraph::complete(n);
    for (uint64_t seed = 0; seed < 25; ++seed) {
      auto c = construct::sample_structured(StructureCase::TightPartition, h, seed);
      auto cert = expect_cert(certify_tight(c));
      CHECK(verify_certificate(c, cert).ok);
      CHECK(cert.parts.size() + 1 == static_cast<size_t>(c.palette_size()));
    }
  }
}

TEST_CASE("messy certifier: two colors pass, three force a rainbow witness", "[certify]") {
  auto h = HostGraph::complete(7);
  std::vector<int> two(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) two[e] = h.edge_unrank(e).contains(0) ? 0 : 1;
  auto tc = expect_cert(certify_messy(Coloring(h, two)));
  CHECK(std::holds_alternative<TwoColorsCert>(tc));

  for (uint64_t seed = 0; seed < 30; ++seed) {
    auto c = random_coloring(h, 3 + static_cast<int>(seed % 4), seed);
    if (c.palette_size() < 3) continue;
    auto cert = expect_cert(certify_messy(c));
    auto* w = std::get_if<RainbowWitnessCert>(&cert);
    REQUIRE(w != nullptr);
    CHECK(verify_certificate(c, *w).ok);
  }

  expect_rejection(certify_messy(random_coloring(HostGraph::complete(6), 3, 0)),
                   Rejection::Kind::PreconditionFailed);
}

TEST_CASE("loose certifier finds the lowest monochromatic complement", "[certify]") {
  auto h = HostGraph::complete(8);
  std::vector<int> cols(h.edge_count(), 0);
  for (Vertex w = 0; w < 8; ++w) {
    if (w == 2 || w == 5) continue;
    cols[h.edge_rank(Edge(2, 5, w))] = w % 2 ? 1 : 2;
  }
  Coloring c(h, cols);
  auto cert = expect_cert(certify_loose(c));
  auto* mono = std::get_if<MonoMinusVertexCert>(&cert);
  REQUIRE(mono != nullptr);
  CHECK(mono->apex == 2);  // both 2 and 5 qualify; the scan is ascending
  CHECK(mono->mono_color == 0);
  CHECK(verify_certificate(c, cert).ok);
}

TEST_CASE("loose certifier: sampled cases land where they should", "[certify]") {
  auto h = HostGraph::complete(7);
  for (uint64_t seed = 0; seed < 25; ++seed) {
    auto c1 = construct::sample_structured(StructureCase::LooseMonoMinusVertex, h, seed);
    auto r1 = expect_cert(certify_loose(c1));
    CHECK(std::holds_alternative<MonoMinusVertexCert>(r1));
    CHECK(verify_certificate(c1, r1).ok);

    auto c2 = construct::sample_structured(StructureCase::LooseSpecialEdge, h, seed);
    auto r2 = expect_cert(certify_loose(c2));
    auto* se = std::get_if<SpecialEdgeCert>(&r2);
    REQUIRE(se != nullptr);
    CHECK(verify_certificate(c2, r2).ok);
    // The special edge is the unique minority-color edge.
    int count = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (c2.colors()[e] == c2.colors()[h.edge_rank(se->edge)]) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("refined loose certifier: sampled cases land where they should", "[certify]") {
  for (int n : {7, 8}) {
    auto h = HostGraph::complete(n);
    for (uint64_t seed = 0; seed < 25; ++seed) {
      auto ca = construct::sample_structured(StructureCase::LoosePlusTwoApex, h, seed);
      auto ra = expect_cert(certify_loose_plus(ca));
      CHECK(std::holds_alternative<TwoApexCert>(ra));
      CHECK(verify_certificate(ca, ra).ok);

      auto cb = construct::sample_structured(StructureCase::LoosePlusNearMono, h, seed);
      auto rb = expect_cert(certify_loose_plus(cb));
      auto* nm = std::get_if<NearMonoCert>(&rb);
      REQUIRE(nm != nullptr);
      CHECK(verify_certificate(cb, rb).ok);

      auto cc = construct::sample_structured(StructureCase::LoosePlusSpecialEdge, h, seed);
      auto rc = expect_cert(certify_loose_plus(cc));
      CHECK(std::holds_alternative<SpecialEdgeThreeCert>(rc));
      CHECK(verify_certificate(cc, rc).ok);
    }
  }
}

TEST_CASE("tripartite certifier matches constructions to their cases", "[certify]") {
  for (int n : {3, 4}) {
    auto apex = construct::tri_apex_coloring(n);
    auto mt = expect_cert(certify_tripartite(apex, TriTheorem::Messy));
    CHECK(std::holds_alternative<TriApexPartitionCert>(mt));
    CHECK(verify_certificate(apex, mt).ok);
    auto tt = expect_cert(certify_tripartite(apex, TriTheorem::Tight));
    CHECK(std::holds_alternative<TriApexPartitionCert>(tt));

    auto diag = construct::tri_diagonal_coloring(n);
    auto dt = expect_cert(certify_tripartite(diag, TriTheorem::Tight));
    auto* basep = std::get_if<TriBasePartitionCert>(&dt);
    REQUIRE(basep != nullptr);
    CHECK(basep->classes.size() == static_cast<size_t>(n));
    CHECK(verify_certificate(diag, dt).ok);

    auto star = construct::tri_pair_star_coloring(n);
    auto st = expect_cert(certify_tripartite(star, TriTheorem::Loose));
    auto* two = std::get_if<TriTwoApexCert>(&st);
    REQUIRE(two != nullptr);
    CHECK(two->x == 0);
    CHECK(two->y == n);
    CHECK(verify_certificate(star, st).ok);
  }
}

TEST_CASE("tripartite certifier: sampled cases land where they should", "[certify]") {
  for (int n : {3, 4}) {
    auto h = construct::balanced_tripartite(n);
    for (uint64_t seed = 0; seed < 25; ++seed) {
      auto c1 = construct::sample_structured(StructureCase::TriApexPartition, h, seed);
      auto r1 = expect_cert(certify_tripartite(c1, TriTheorem::Messy));
      CHECK(std::holds_alternative<TriApexPartitionCert>(r1));
      CHECK(verify_certificate(c1, r1).ok);

      auto c2 = construct::sample_structured(StructureCase::TriBasePartition, h, seed);
      auto r2 = expect_cert(certify_tripartite(c2, TriTheorem::Tight));
      CHECK(std::holds_alternative<TriBasePartitionCert>(r2));
      CHECK(verify_certificate(c2, r2).ok);

      auto c3 = construct::sample_structured(StructureCase::TriTwoApex, h, seed);
      auto r3 = expect_cert(certify_tripartite(c3, TriTheorem::Loose));
      CHECK(std::holds_alternative<TriTwoApexCert>(r3));
      CHECK(verify_certificate(c3, r3).ok);

      auto c4 = construct::sample_structured(StructureCase::TriUniqueEdge, h, seed);
      auto r4 = expect_cert(certify_tripartite(c4, TriTheorem::Loose));
      CHECK(std::holds_alternative<TriUniqueEdgeCert>(r4));
      CHECK(verify_certificate(c4, r4).ok);

      auto c5 = construct::sample_structured(StructureCase::TriFiveVertex, h, seed);
      auto r5 = expect_cert(certify_tripartite(c5, TriTheorem::Loose));
      CHECK(std::holds_alternative<TriFiveVertexCert>(r5));
      CHECK(verify_certificate(c5, r5).ok);
    }
  }
}

TEST_CASE("verification rejects doctored certificates", "[certify]") {
  auto c = construct::tight_lower_bound(9);
  auto cert = expect_cert(certify_tight(c));

  auto wrong_base = cert;
  wrong_base.base_color = cert.parts[0].color;
  CHECK(!verify_certificate(c, wrong_base).ok);

  auto moved = cert;
  moved.parts[0].vertices.push_back(moved.parts[1].vertices.back());
  moved.parts[1].vertices.pop_back();
  CHECK(!verify_certificate(c, moved).ok);

  auto dropped = cert;
  dropped.parts.pop_back();
  CHECK(!verify_certificate(c, dropped).ok);

  auto h = HostGraph::complete(8);
  auto loose = construct::sample_structured(StructureCase::LooseMonoMinusVertex, h, 3);
  auto lc = expect_cert(certify_loose(loose));
  auto* mono = std::get_if<MonoMinusVertexCert>(&lc);
  REQUIRE(mono != nullptr);
  CHECK(!verify_certificate(loose, MonoMinusVertexCert{mono->apex, mono->mono_color + 1}).ok);

  auto star = construct::tri_pair_star_coloring(3);
  auto st = expect_cert(certify_tripartite(star, TriTheorem::Loose));
  auto* two = std::get_if<TriTwoApexCert>(&st);
  REQUIRE(two != nullptr);
  CHECK(!verify_certificate(star, TriTwoApexCert{two->x, two->y, two->base_color + 1}).ok);
  CHECK(!verify_certificate(star, TriTwoApexCert{two->x, two->x, two->base_color}).ok);
}

TEST_CASE("certificates round-trip through JSON", "[certify][json]") {
  auto c = construct::tight_lower_bound(9);
  auto cert = expect_cert(certify_tight(c));
  auto j = to_json(cert);
  CHECK(j["case"] == "tight-partition");
  auto back = tight_cert_from_json(j);
  CHECK(verify_certificate(c, back).ok);
  CHECK(to_json(back) == j);

  auto h = HostGraph::complete(7);
  auto loose = construct::sample_structured(StructureCase::LooseSpecialEdge, h, 11);
  auto lc = expect_cert(certify_loose(loose));
  auto lj = to_json(lc);
  CHECK(lj["case"] == "special-edge");
  CHECK(verify_certificate(loose, loose_cert_from_json(lj)).ok);
  CHECK(to_json(loose_cert_from_json(lj)) == lj);

  auto plus = construct::sample_structured(StructureCase::LoosePlusNearMono, h, 5);
  auto pc = expect_cert(certify_loose_plus(plus));
  auto pj = to_json(pc);
  CHECK(pj["case"] == "near-mono-minus-vertex");
  CHECK(verify_certificate(plus, loose_plus_cert_from_json(pj)).ok);
  CHECK(to_json(loose_plus_cert_from_json(pj)) == pj);

  auto mc = expect_cert(certify_messy(random_coloring(h, 4, 2)));
  auto mj = to_json(mc);
  CHECK(verify_certificate(random_coloring(h, 4, 2), messy_cert_from_json(mj)).ok);

  auto th = construct::balanced_tripartite(3);
  for (auto sc : {StructureCase::TriApexPartition, StructureCase::TriBasePartition,
                  StructureCase::TriTwoApex, StructureCase::TriUniqueEdge,
                  StructureCase::TriFiveVertex}) {
    auto tc = construct::sample_structured(sc, th, 17);
    TriTheorem thm = sc == StructureCase::TriApexPartition    ? TriTheorem::Messy
                     : sc == StructureCase::TriBasePartition  ? TriTheorem::Tight
                                                              : TriTheorem::Loose;
    auto tcert = expect_cert(certify_tripartite(tc, thm));
    auto tj = to_json(tcert);
    CAPTURE(tj.dump());
    CHECK(verify_certificate(tc, tri_cert_from_json(tj)).ok);
    CHECK(to_json(tri_cert_from_json(tj)) == tj);
  }
}

TEST_CASE("certificate JSON parsing reports malformed input", "[certify][json]") {
  using nlohmann::ordered_json;
  CHECK_THROWS_AS(tight_cert_from_json(ordered_json{{"case", "unknown"}}), Error);
  CHECK_THROWS_AS(tight_cert_from_json(ordered_json{{"base_color", 0}}), Error);
  CHECK_THROWS_AS(loose_cert_from_json(ordered_json{{"case", "mono-minus-vertex"}}), Error);
  CHECK_THROWS_AS(
      loose_cert_from_json(ordered_json{{"case", "special-edge"}, {"edge", "nope"}, {"base_color", 0}}),
      Error);
  CHECK_THROWS_AS(messy_cert_from_json(ordered_json{{"case", "rainbow-witness"},
                                                    {"vertices", {1, 2, 3}}}),
                  Error);
  CHECK_THROWS_AS(tri_cert_from_json(ordered_json{{"case", "five-vertex"},
                                                  {"apex", 0},
                                                  {"y", {1, 2}},
                                                  {"z", 9},
                                                  {"color_a", 0},
                                                  {"color_b", 1},
                                                  {"base_color", 2}}),
                  Error);
}
