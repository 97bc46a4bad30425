#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "oracles.hpp"
#include "rhl/copies.hpp"

using rhl::Coloring;
using rhl::HostGraph;
using rhl::Pattern;
using rhl::PatternId;

namespace {

// Ordered injections realizing the pattern, with no deduplication. Comparing
// against copies * |Aut| validates both numbers at once.
long injection_count(const rhl::HostGraph& host, const Pattern& p) {
  long count = 0;
  int n = host.vertex_count();
  std::vector<int> map(p.vertex_count(), -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == p.vertex_count()) {
      for (const auto& e : p.edges())
        if (!host.is_edge(map[e[0]], map[e[1]], map[e[2]])) return;
      ++count;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[depth] = v;
      self(self, depth + 1);
      used[v] = false;
    }
  };
  if (p.vertex_count() <= n) rec(rec, 0);
  return count;
}

Coloring random_coloring(const HostGraph& h, int palette, std::mt19937_64& rng) {
  std::vector<int> cols(h.edge_count());
  std::uniform_int_distribution<int> d(0, palette - 1);
  for (auto& c : cols) c = d(rng);
  return Coloring(h, cols).normalized();
}

}  // namespace

TEST_CASE("frozen copy counts for the three path shapes", "[copies]") {
  auto T = Pattern::from_catalog(PatternId::TightPath);
  auto M = Pattern::from_catalog(PatternId::MessyPath);
  auto L = Pattern::from_catalog(PatternId::LoosePath);

  CHECK(rhl::count_copies(HostGraph::complete(5), T) == 60);
  CHECK(rhl::count_copies(HostGraph::complete(6), M) == 180);
  CHECK(rhl::count_copies(HostGraph::complete(7), L) == 630);
  CHECK(rhl::count_copies(HostGraph::complete(4), T) == 0);

  // Independent cross-check: injections = copies * automorphisms.
  CHECK(injection_count(HostGraph::complete(5), T) == 60 * T.automorphism_count());
  CHECK(injection_count(HostGraph::complete(6), M) == 180 * M.automorphism_count());
  CHECK(injection_count(HostGraph::complete(7), L) == 630 * L.automorphism_count());
}

TEST_CASE("copy enumeration matches the brute-force oracle", "[copies]") {
  std::vector<HostGraph> hosts = {
      HostGraph::complete(5),
      HostGraph::complete(6),
      HostGraph::tripartite(2, 2, 2),
      HostGraph::tripartite(3, 3, 3),
      HostGraph::tripartite(1, 2, 3),
  };
  for (const auto& host : hosts) {
    for (PatternId id : rhl::pattern_catalog()) {
      Pattern p = Pattern::from_catalog(id);
      if (p.vertex_count() > host.vertex_count()) continue;
      const auto& copies = rhl::enumerate_embeddings(host, p);

      std::set<std::vector<rhl::EdgeId>> lib;
      for (const auto& emb : copies) {
        // Edge images must be valid, sorted, distinct, and consistent with
        // the vertex injection.
        REQUIRE(static_cast<int>(emb.vertex_images.size()) == p.vertex_count());
        REQUIRE(std::is_sorted(emb.edge_images.begin(), emb.edge_images.end()));
        std::vector<rhl::EdgeId> derived;
        for (const auto& e : p.edges())
          derived.push_back(host.edge_rank(emb.vertex_images[e[0]], emb.vertex_images[e[1]],
                                           emb.vertex_images[e[2]]));
        std::sort(derived.begin(), derived.end());
        REQUIRE(derived == emb.edge_images);
        lib.insert(emb.edge_images);
      }
      REQUIRE(lib.size() == copies.size());  // no duplicate edge sets

      auto expect = oracle::copy_images_bruteforce(host, p.vertex_count(), p.edges());
      INFO(p.name() << " in host with " << host.vertex_count() << " vertices");
      CHECK(lib == expect);

      // Enumeration order is lexicographic on edge images.
      for (size_t i = 1; i < copies.size(); ++i)
        REQUIRE(copies[i - 1].edge_images < copies[i].edge_images);
    }
  }
}

TEST_CASE("copy counts grow with the complete host", "[copies]") {
  for (PatternId id : {PatternId::TightPath, PatternId::MessyPath, PatternId::LoosePath}) {
    Pattern p = Pattern::from_catalog(id);
    int prev = 0;
    for (int n = 5; n <= 9; ++n) {
      int now = rhl::count_copies(HostGraph::complete(n), p);
      CHECK(now >= prev);
      prev = now;
    }
  }
}

TEST_CASE("rainbow and monochromatic detectors match the oracle", "[copies]") {
  std::mt19937_64 rng(20260818);
  std::vector<HostGraph> hosts = {
      HostGraph::complete(6),
      HostGraph::complete(7),
      HostGraph::tripartite(2, 2, 2),
      HostGraph::tripartite(3, 3, 3),
  };
  std::vector<PatternId> pats = {PatternId::TightPath, PatternId::MessyPath, PatternId::LoosePath,
                                 PatternId::Matching2, PatternId::LooseStar2};
  for (const auto& host : hosts) {
    std::vector<Coloring> colorings;
    colorings.push_back(Coloring(host, std::vector<int>(host.edge_count(), 0)));  // mono
    std::vector<int> rb(host.edge_count());
    for (int e = 0; e < host.edge_count(); ++e) rb[e] = e;
    colorings.push_back(Coloring(host, rb));  // all distinct
    for (int k = 0; k < 3; ++k) colorings.push_back(random_coloring(host, 3 + k, rng));

    for (PatternId id : pats) {
      Pattern p = Pattern::from_catalog(id);
      if (p.vertex_count() > host.vertex_count()) continue;
      for (const auto& c : colorings) {
        auto lib_rb = rhl::find_rainbow_copy(c, p);
        auto ora_rb = oracle::rainbow_copy_bruteforce(c, p.vertex_count(), p.edges());
        REQUIRE(lib_rb.has_value() == ora_rb.has_value());
        if (lib_rb) {
          // Witness is genuinely rainbow.
          std::set<int> cs;
          for (rhl::EdgeId e : lib_rb->edge_images) cs.insert(c.color_of(e));
          REQUIRE(cs.size() == lib_rb->edge_images.size());
        }

        auto lib_mono = rhl::find_monochromatic_copy(c, p);
        auto ora_mono = oracle::mono_copy_bruteforce(c, p.vertex_count(), p.edges());
        REQUIRE(lib_mono.has_value() == ora_mono.has_value());
        if (lib_mono) {
          std::set<int> cs;
          for (rhl::EdgeId e : lib_mono->edge_images) cs.insert(c.color_of(e));
          REQUIRE(cs.size() == 1);
        }
      }
    }
  }
}

TEST_CASE("rainbow-freeness is invariant under normalization and relabeling", "[copies]") {
  std::mt19937_64 rng(7);
  auto host = HostGraph::complete(6);
  auto T = Pattern::from_catalog(PatternId::TightPath);
  for (int round = 0; round < 20; ++round) {
    Coloring c = random_coloring(host, 2 + round % 4, rng);
    bool free0 = rhl::is_rainbow_free(c, T);
    CHECK(rhl::is_rainbow_free(c.normalized(), T) == free0);

    std::vector<int> sigma{0, 1, 2, 3, 4, 5};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    CHECK(rhl::is_rainbow_free(c.relabel_vertices(sigma), T) == free0);
  }
}

TEST_CASE("detector witnesses are deterministic and lexicographically first", "[copies]") {
  auto host = HostGraph::complete(6);
  std::vector<int> cols(host.edge_count());
  for (int e = 0; e < host.edge_count(); ++e) cols[e] = e % 5;
  Coloring c(host, cols);
  auto T = Pattern::from_catalog(PatternId::TightPath);
  auto w1 = rhl::find_rainbow_copy(c, T);
  auto w2 = rhl::find_rainbow_copy(c, T);
  REQUIRE(w1.has_value());
  CHECK(w1->edge_images == w2->edge_images);

  // No earlier rainbow copy exists in enumeration order.
  for (const auto& emb : rhl::enumerate_embeddings(host, T)) {
    if (emb.edge_images == w1->edge_images) break;
    std::set<int> cs;
    for (rhl::EdgeId e : emb.edge_images) cs.insert(c.color_of(e));
    CHECK(cs.size() < emb.edge_images.size());
  }
}
