#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rhl/certify.hpp"
#include "rhl/constrained.hpp"
#include "rhl/partitions.hpp"
#include "rhl/search.hpp"

namespace rhl::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  bool unproven = false;  // quantitative claim replaced by its sampled fallback
  std::string detail;
  double seconds = 0;
};

// Optional cross-check used by the copy-count criterion: an embedding counter
// implemented independently of the library (it lives in test code).
using IndependentCounter = std::function<int(const HostGraph&, const Pattern&)>;

namespace detail {

// Collects labelled requirements; the criterion passes when all hold.
struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
  template <class T>
  void record(const std::string& key, const T& value) {
    detail << ' ' << key << '=' << value;
  }
};

template <class Body>
CriterionResult timed(int id, const char* name, Body&& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  Check chk;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(chk, r);
  } catch (const std::exception& e) {
    chk.pass = false;
    chk.detail << " FAILED[exception: " << e.what() << "]";
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = chk.pass;
  r.detail = chk.detail.str();
  return r;
}

inline Pattern pat(PatternId id) { return Pattern::from_catalog(id); }

inline Coloring random_surjective(const HostGraph& host, int palette, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, palette - 1);
  for (;;) {
    std::vector<int> cols(host.edge_count());
    for (auto& c : cols) c = pick(rng);
    Coloring col(host, std::move(cols));
    if (col.palette_size() == palette) return col;
  }
}

// The sampled structure cases together with the certifier family and the
// patterns each case is rainbow-free for.
enum class Family { Tight, Loose, LoosePlus, TriMessy, TriTight, TriLoose };

struct CaseSpec {
  construct::StructureCase sc;
  Family family;
  std::vector<PatternId> avoids;
};

inline std::vector<CaseSpec> certified_cases() {
  using construct::StructureCase;
  return {
      {StructureCase::TightPartition, Family::Tight, {PatternId::TightPath}},
      {StructureCase::LooseMonoMinusVertex, Family::Loose, {PatternId::LoosePath}},
      {StructureCase::LooseSpecialEdge, Family::Loose, {PatternId::LoosePath}},
      {StructureCase::LoosePlusTwoApex, Family::LoosePlus, {PatternId::LoosePath}},
      {StructureCase::LoosePlusNearMono, Family::LoosePlus, {PatternId::LoosePath}},
      {StructureCase::LoosePlusSpecialEdge, Family::LoosePlus, {PatternId::LoosePath}},
      {StructureCase::TriApexPartition,
       Family::TriMessy,
       {PatternId::MessyPath, PatternId::TightPath}},
      {StructureCase::TriBasePartition, Family::TriTight, {PatternId::TightPath}},
      {StructureCase::TriTwoApex, Family::TriLoose, {PatternId::LoosePath}},
      {StructureCase::TriUniqueEdge, Family::TriLoose, {PatternId::LoosePath}},
      {StructureCase::TriFiveVertex, Family::TriLoose, {PatternId::LoosePath}},
  };
}

inline HostGraph host_for(Family f) {
  switch (f) {
    case Family::Tight:
      return HostGraph::complete(9);
    case Family::Loose:
      return HostGraph::complete(8);
    case Family::LoosePlus:
      return HostGraph::complete(7);
    default:
      return HostGraph::tripartite(4, 4, 4);
  }
}

struct CertifyOutcome {
  bool accepted = false;
  bool violation = false;
  bool verified = false;
};

inline CertifyOutcome certify_case(Family family, const Coloring& c) {
  CertifyOutcome out;
  auto digest = [&](const auto& result, const Coloring& col) {
    if (auto* rej = std::get_if<Rejection>(&result)) {
      out.violation = rej->kind == Rejection::Kind::TheoremViolation;
      return;
    }
    out.accepted = true;
    std::visit(
        [&](const auto& cert) {
          using T = std::decay_t<decltype(cert)>;
          if constexpr (!std::is_same_v<T, Rejection>)
            out.verified = verify_certificate(col, cert).ok;
        },
        result);
  };
  switch (family) {
    case Family::Tight:
      digest(certify_tight(c), c);
      break;
    case Family::Loose:
      digest(certify_loose(c), c);
      break;
    case Family::LoosePlus:
      digest(certify_loose_plus(c), c);
      break;
    case Family::TriMessy:
      digest(certify_tripartite(c, TriTheorem::Messy), c);
      break;
    case Family::TriTight:
      digest(certify_tripartite(c, TriTheorem::Tight), c);
      break;
    case Family::TriLoose:
      digest(certify_tripartite(c, TriTheorem::Loose), c);
      break;
  }
  return out;
}

// Edges meeting both edges of each 2-star copy, precomputed per host.
struct StarMeets {
  std::vector<std::array<EdgeId, 2>> star;     // the copy's two edges
  std::vector<std::vector<EdgeId>> meets_both;  // third edges touching each
};

inline StarMeets star_meets(const HostGraph& host) {
  StarMeets sm;
  std::vector<uint32_t> mask(host.edge_count());
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    Edge ed = host.edge_unrank(e);
    mask[e] = (1u << ed[0]) | (1u << ed[1]) | (1u << ed[2]);
  }
  for (const auto& emb : enumerate_embeddings(host, pat(PatternId::LooseStar2))) {
    std::array<EdgeId, 2> pair{emb.edge_images[0], emb.edge_images[1]};
    std::vector<EdgeId> meets;
    for (EdgeId f = 0; f < host.edge_count(); ++f) {
      if (f == pair[0] || f == pair[1]) continue;
      if ((mask[f] & mask[pair[0]]) && (mask[f] & mask[pair[1]])) meets.push_back(f);
    }
    sm.star.push_back(pair);
    sm.meets_both.push_back(std::move(meets));
  }
  return sm;
}

// Two-star condition on one coloring: every edge meeting both edges of a
// rainbow 2-star repeats one of the star's colors.
inline bool star_condition_holds(const Coloring& c, const StarMeets& sm) {
  for (size_t i = 0; i < sm.star.size(); ++i) {
    int c1 = c.color_of(sm.star[i][0]), c2 = c.color_of(sm.star[i][1]);
    if (c1 == c2) continue;
    for (EdgeId f : sm.meets_both[i]) {
      int cf = c.color_of(f);
      if (cf != c1 && cf != c2) return false;
    }
  }
  return true;
}

// Deleting two vertices leaves one color, for some vertex pair.
inline bool two_vertex_deletion_mono(const Coloring& c) {
  const auto& host = c.host();
  int n = host.vertex_count();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      int col = -1;
      bool mono = true;
      for (EdgeId e = 0; e < host.edge_count() && mono; ++e) {
        Edge ed = host.edge_unrank(e);
        if (ed[0] == u || ed[1] == u || ed[2] == u) continue;
        if (ed[0] == v || ed[1] == v || ed[2] == v) continue;
        if (col < 0)
          col = c.color_of(e);
        else
          mono = c.color_of(e) == col;
      }
      if (mono) return true;
    }
  return false;
}

}  // namespace detail

// 1. Tight-path anti-Ramsey values: floor(n/3)+2, exact at n=5 (exhaustive
// cross-check) and n=6, lower-bound witnesses for n=7..12.
inline CriterionResult criterion1() {
  using namespace detail;
  return timed(1, "tight-ar", [](Check& chk, CriterionResult&) {
    auto t = pat(PatternId::TightPath);
    int oracle = 0;
    enumerate_color_partitions(HostGraph::complete(5), [&](const Coloring& c) {
      if (is_rainbow_free(c, t)) oracle = std::max(oracle, c.palette_size());
    });
    chk.record("k5_oracle_max", oracle);
    chk.require(oracle == 2, "k5 exhaustive max = 2");

    SearchBudget b5budget;
    b5budget.max_seconds = 60;
    auto b5 = max_rainbow_free_colors(HostGraph::complete(5), t, b5budget);
    chk.require(b5.status == SearchStatus::Proved && b5.max_colors == oracle,
                "k5 search proves the exhaustive value");
    chk.record("k5_ar", b5.max_colors + 1);

    SearchBudget b6budget;
    b6budget.max_seconds = 900;
    auto b6 = max_rainbow_free_colors(HostGraph::complete(6), t, b6budget);
    chk.require(b6.status == SearchStatus::Proved, "k6 search proved");
    chk.require(b6.max_colors + 1 == 4, "ar(6) = 4");
    chk.record("k6_ar", b6.max_colors + 1);

    for (int n = 7; n <= 12; ++n) {
      auto c = construct::tight_lower_bound(n);
      chk.require(c.palette_size() == n / 3 + 1,
                  "lower bound palette at n=" + std::to_string(n));
      chk.require(is_rainbow_free(c, t), "lower bound rainbow-free at n=" + std::to_string(n));
    }
    chk.record("lb_range", "7..12");
  });
}

// 2. Messy-path anti-Ramsey: ar(6)=11 and ar(7)=3, both exact; the 10-color
// matching witness re-verified.
inline CriterionResult criterion2() {
  using namespace detail;
  return timed(2, "messy-ar", [](Check& chk, CriterionResult&) {
    auto m = pat(PatternId::MessyPath);
    SearchBudget budget;
    budget.max_seconds = 1200;
    auto a6 = max_rainbow_free_colors(HostGraph::complete(6), m, budget);
    chk.require(a6.status == SearchStatus::Proved, "k6 proved");
    chk.require(a6.max_colors + 1 == 11, "ar(6) = 11");
    chk.record("k6_ar", a6.max_colors + 1);

    auto a7 = max_rainbow_free_colors(HostGraph::complete(7), m, budget);
    chk.require(a7.status == SearchStatus::Proved, "k7 proved");
    chk.require(a7.max_colors + 1 == 3, "ar(7) = 3");
    chk.record("k7_ar", a7.max_colors + 1);

    auto w = construct::messy_matching_k6();
    chk.require(w.palette_size() == 10, "matching witness has 10 colors");
    chk.require(is_rainbow_free(w, m), "matching witness rainbow-free");
  });
}

// 3. Loose-path anti-Ramsey at n=7: the 6-color witness, then ar(7)=7 exact;
// on budget overrun, falls back to certified sampling with the exact claim
// flagged unproven.
inline CriterionResult criterion3() {
  using namespace detail;
  return timed(3, "loose-ar", [](Check& chk, CriterionResult& res) {
    auto l = pat(PatternId::LoosePath);
    auto w = construct::loose_lower_bound(7);
    chk.require(w.palette_size() == 6, "lower bound has 6 colors");
    chk.require(is_rainbow_free(w, l), "lower bound rainbow-free");

    SearchBudget budget;
    budget.max_seconds = 3600;
    auto a7 = max_rainbow_free_colors(HostGraph::complete(7), l, budget);
    if (a7.status == SearchStatus::Proved) {
      chk.require(a7.max_colors + 1 == 7, "ar(7) = 7");
      chk.record("k7_ar", a7.max_colors + 1);
      return;
    }
    res.unproven = true;
    chk.record("fallback", "sampled");
    auto host = HostGraph::complete(7);
    int failures = 0;
    using construct::StructureCase;
    for (StructureCase sc : {StructureCase::LoosePlusTwoApex, StructureCase::LoosePlusNearMono,
                             StructureCase::LoosePlusSpecialEdge})
      for (uint64_t s = 0; s < 3334; ++s) {
        Coloring c = construct::sample_structured(sc, host, s);
        auto out = certify_case(Family::LoosePlus, c);
        if (!out.accepted || !out.verified || c.palette_size() > 6) ++failures;
      }
    chk.record("sampled", 3 * 3334);
    chk.require(failures == 0, "all samples certified with palette <= 6");
  });
}

// 4. Exhaustive n=5 structure: among all color partitions of the 5-vertex
// host, none with three or more classes avoids a rainbow tight path.
inline CriterionResult criterion4() {
  using namespace detail;
  return timed(4, "tight-exhaustive", [](Check& chk, CriterionResult&) {
    auto t = pat(PatternId::TightPath);
    long total = 0, ge3 = 0, ge3_with_rainbow = 0, free_ge3 = 0;
    enumerate_color_partitions(HostGraph::complete(5), [&](const Coloring& c) {
      ++total;
      if (c.palette_size() < 3) return;
      ++ge3;
      if (find_rainbow_copy(c, t))
        ++ge3_with_rainbow;
      else
        ++free_ge3;
    });
    chk.record("partitions", total);
    chk.record("ge3", ge3);
    chk.record("rainbow_free_ge3", free_ge3);
    chk.require(total == 115975, "Bell(10) partitions enumerated");
    chk.require(free_ge3 == 0, "no rainbow-free coloring with >= 3 classes");
    chk.require(ge3_with_rainbow == ge3, "every >= 3-class partition has a rainbow copy");
  });
}

// 5. Messy structure at n=7: palette cap of 2 (re-proved), and ten thousand
// random 3-color colorings each contain a rainbow messy path.
inline CriterionResult criterion5() {
  using namespace detail;
  return timed(5, "messy-structure", [](Check& chk, CriterionResult&) {
    auto m = pat(PatternId::MessyPath);
    SearchBudget budget;
    budget.max_seconds = 1200;
    auto a7 = max_rainbow_free_colors(HostGraph::complete(7), m, budget);
    chk.require(a7.status == SearchStatus::Proved && a7.max_colors == 2,
                "max rainbow-free palette at n=7 is 2");

    auto host = HostGraph::complete(7);
    std::mt19937_64 rng(501);
    int witnesses = 0;
    for (int s = 0; s < 10000; ++s) {
      Coloring c = random_surjective(host, 3, rng);
      if (find_rainbow_copy(c, m)) ++witnesses;
    }
    chk.record("random_3color", 10000);
    chk.require(witnesses == 10000, "every 3-color sample has a rainbow copy");
  });
}

// 6. Certifier round trips: a thousand samples per structure case are
// accepted, verified, and confirmed rainbow-free; zero theorem violations.
inline CriterionResult criterion6() {
  using namespace detail;
  return timed(6, "certifier-roundtrip", [](Check& chk, CriterionResult&) {
    int violations = 0, rejects = 0, bad_verify = 0, rainbow = 0;
    for (const auto& spec : certified_cases()) {
      HostGraph host = host_for(spec.family);
      for (uint64_t s = 0; s < 1000; ++s) {
        Coloring c = construct::sample_structured(spec.sc, host, s);
        auto out = certify_case(spec.family, c);
        if (out.violation) ++violations;
        if (!out.accepted) ++rejects;
        if (out.accepted && !out.verified) ++bad_verify;
        for (PatternId pid : spec.avoids)
          if (!is_rainbow_free(c, pat(pid))) ++rainbow;
      }
    }
    chk.record("samples", 11000);
    chk.require(violations == 0, "zero theorem violations");
    chk.require(rejects == 0, "every sample certified");
    chk.require(bad_verify == 0, "every certificate verified");
    chk.require(rainbow == 0, "every sample rainbow-free");
  });
}

// 7. Lemma properties over the n=5 partitions and the certified samples:
// the rainbow 2-star observation, the forbidden-companion lemmas, the
// two-star color condition, and two-vertex deletion on loose instances.
inline CriterionResult criterion7() {
  using namespace detail;
  return timed(7, "lemma-properties", [](Check& chk, CriterionResult&) {
    auto t = pat(PatternId::TightPath);
    auto s2 = pat(PatternId::LooseStar2);
    auto ds2 = pat(PatternId::TightStar2);
    auto c3 = pat(PatternId::LooseCycle);
    auto s3 = pat(PatternId::LooseStar3);
    auto ds3 = pat(PatternId::TightStar3);
    auto s2s1 = pat(PatternId::LooseStar2PlusEdge);
    auto l = pat(PatternId::LoosePath);

    long obs_fail = 0, t1_fail = 0, t2_fail = 0, l1_fail = 0, l2_fail = 0;

    auto k5 = HostGraph::complete(5);
    auto sm5 = star_meets(k5);
    enumerate_color_partitions(k5, [&](const Coloring& c) {
      if (c.palette_size() >= 2 &&
          (!find_rainbow_copy(c, s2) || !find_rainbow_copy(c, ds2)))
        ++obs_fail;
      if (!find_rainbow_copy(c, t)) {
        if (find_rainbow_copy(c, c3) || find_rainbow_copy(c, s3) || find_rainbow_copy(c, ds3))
          ++t1_fail;
        if (!star_condition_holds(c, sm5)) ++t2_fail;
      }
    });

    for (const auto& spec : certified_cases()) {
      HostGraph host = host_for(spec.family);
      bool complete = host.kind() == HostKind::Complete;
      StarMeets sm;
      if (spec.family == Family::Tight) sm = star_meets(host);
      for (uint64_t s = 0; s < 1000; ++s) {
        Coloring c = construct::sample_structured(spec.sc, host, s);
        if (c.palette_size() >= 2 &&
            (!find_rainbow_copy(c, s2) || !find_rainbow_copy(c, ds2)))
          ++obs_fail;
        if (complete && !find_rainbow_copy(c, t)) {
          if (find_rainbow_copy(c, c3) || find_rainbow_copy(c, s3) ||
              find_rainbow_copy(c, ds3))
            ++t1_fail;
          if (spec.family == Family::Tight && !star_condition_holds(c, sm)) ++t2_fail;
        }
        if (complete && is_rainbow_free(c, l)) {
          if (find_rainbow_copy(c, c3) || find_rainbow_copy(c, s3) ||
              find_rainbow_copy(c, s2s1))
            ++l1_fail;
          if (spec.family == Family::Loose && c.palette_size() >= 3 &&
              !two_vertex_deletion_mono(c))
            ++l2_fail;
        }
      }
    }

    chk.record("obs_fail", obs_fail);
    chk.record("t1_fail", t1_fail);
    chk.record("t2_fail", t2_fail);
    chk.record("l1_fail", l1_fail);
    chk.record("l2_fail", l2_fail);
    chk.require(obs_fail == 0, "two-star observation");
    chk.require(t1_fail == 0, "tight companion lemma");
    chk.require(t2_fail == 0, "two-star color condition");
    chk.require(l1_fail == 0, "loose companion lemma");
    chk.require(l2_fail == 0, "two-vertex deletion");
  });
}

// 8. Sharpness of the matching threshold: a mono-free 2-coloring exists at
// n=6 but not at n=7, and the constrained check reports both thresholds as 7.
inline CriterionResult criterion8() {
  using namespace detail;
  return timed(8, "constrained-sharpness", [](Check& chk, CriterionResult&) {
    auto m2 = pat(PatternId::Matching2);
    SearchBudget budget;
    budget.max_seconds = 60;
    auto k6 = ramsey2_search(HostGraph::complete(6), m2, budget);
    chk.require(k6.status == SearchStatus::Proved && k6.witness.has_value(),
                "witness exists at n=6");
    auto k7 = ramsey2_search(HostGraph::complete(7), m2, budget);
    chk.require(k7.status == SearchStatus::Proved && k7.arrows, "no witness at n=7");
    chk.record("k7_nodes", k7.nodes);

    auto rep = constrained_ramsey_check(m2, PatternId::MessyPath, SearchBudget{}, 500, 8);
    chk.require(rep.status == ConstrainedStatus::Proved, "reduction proved");
    chk.require(rep.r2 == 7, "R2 = 7");
    chk.require(rep.f == 7, "f = 7");
    chk.require(rep.desk_check_ok, "desk check");
  });
}

// 9. Balanced tripartite anti-Ramsey at t=3: the three lower-bound witnesses,
// then exact values 4, 5, 5; certified sampling as the flagged fallback.
inline CriterionResult criterion9() {
  using namespace detail;
  return timed(9, "multipartite-ar", [](Check& chk, CriterionResult& res) {
    auto host = HostGraph::tripartite(3, 3, 3);
    auto g1 = construct::tri_apex_coloring(3);
    chk.require(g1.palette_size() == 3, "apex witness palette");
    chk.require(is_rainbow_free(g1, pat(PatternId::MessyPath)), "apex witness");
    auto g2 = construct::tri_diagonal_coloring(3);
    chk.require(g2.palette_size() == 4, "diagonal witness palette");
    chk.require(is_rainbow_free(g2, pat(PatternId::TightPath)), "diagonal witness");
    auto g3 = construct::tri_pair_star_coloring(3);
    chk.require(g3.palette_size() == 4, "pair-star witness palette");
    chk.require(is_rainbow_free(g3, pat(PatternId::LoosePath)), "pair-star witness");

    SearchBudget budget;
    budget.max_seconds = 3600;
    struct Target {
      PatternId pid;
      int ar;
      const char* key;
    };
    for (Target tg : {Target{PatternId::MessyPath, 4, "ar_messy"},
                      Target{PatternId::TightPath, 5, "ar_tight"},
                      Target{PatternId::LoosePath, 5, "ar_loose"}}) {
      auto r = max_rainbow_free_colors(host, pat(tg.pid), budget);
      if (r.status == SearchStatus::Proved) {
        chk.require(r.max_colors + 1 == tg.ar, std::string(tg.key) + " exact");
        chk.record(tg.key, r.max_colors + 1);
      } else {
        res.unproven = true;
        chk.record(tg.key, "fallback");
        using construct::StructureCase;
        std::vector<std::pair<StructureCase, Family>> cases;
        if (tg.pid == PatternId::MessyPath)
          cases = {{StructureCase::TriApexPartition, Family::TriMessy}};
        else if (tg.pid == PatternId::TightPath)
          cases = {{StructureCase::TriApexPartition, Family::TriMessy},
                   {StructureCase::TriBasePartition, Family::TriTight}};
        else
          cases = {{StructureCase::TriTwoApex, Family::TriLoose},
                   {StructureCase::TriUniqueEdge, Family::TriLoose},
                   {StructureCase::TriFiveVertex, Family::TriLoose}};
        int failures = 0;
        uint64_t per = 10000 / cases.size();
        for (auto [sc, fam] : cases)
          for (uint64_t s = 0; s < per; ++s) {
            Coloring c = construct::sample_structured(sc, host, s);
            auto out = certify_case(fam, c);
            if (!out.accepted || !out.verified || c.palette_size() >= tg.ar) ++failures;
          }
        chk.require(failures == 0, std::string(tg.key) + " sampled palette bound");
      }
    }
  });
}

// 10. Canonical existence table: single-part projections never show a rainbow
// tight or messy path (t <= 4), the loose path appears at t=3, and every
// two-part projection shows all three paths at t=3.
inline CriterionResult criterion10() {
  using namespace detail;
  return timed(10, "canonical-table", [](Check& chk, CriterionResult&) {
    auto edge = pat(PatternId::SingleEdge);
    for (int t = 1; t <= 4; ++t) {
      for (PatternId g : {PatternId::TightPath, PatternId::MessyPath}) {
        auto table = canonical_existence_check(edge, pat(g), t, CanonicalHostKind::Tripartite);
        for (int mask : {1, 2, 4})
          chk.require(!table.rows[mask].rainbow,
                      "no rainbow at t=" + std::to_string(t) + " |J|=1");
      }
    }
    auto loose = canonical_existence_check(edge, pat(PatternId::LoosePath), 3,
                                           CanonicalHostKind::Tripartite);
    for (int mask : {1, 2, 4})
      chk.require(loose.rows[mask].rainbow, "loose path rainbow at t=3 |J|=1");
    for (PatternId g : {PatternId::TightPath, PatternId::MessyPath, PatternId::LoosePath}) {
      auto table = canonical_existence_check(edge, pat(g), 3, CanonicalHostKind::Tripartite);
      for (int mask : {3, 5, 6})
        chk.require(table.rows[mask].rainbow, "rainbow at t=3 |J|=2");
    }
    chk.record("tables", "t=1..4");
  });
}

// 11. Copy counts for the three paths against frozen values and, when
// provided, an independent brute-force counter.
inline CriterionResult criterion11(const IndependentCounter& independent = {}) {
  using namespace detail;
  return timed(11, "copy-counts", [&](Check& chk, CriterionResult&) {
    struct Row {
      PatternId pid;
      int n;
      int expect;
    };
    for (Row row : {Row{PatternId::TightPath, 5, 60}, Row{PatternId::MessyPath, 6, 180},
                    Row{PatternId::LoosePath, 7, 630}}) {
      auto host = HostGraph::complete(row.n);
      auto p = pat(row.pid);
      int got = count_copies(host, p);
      chk.record(p.name(), got);
      chk.require(got == row.expect, p.name() + " frozen count");
      if (independent)
        chk.require(independent(host, p) == row.expect, p.name() + " independent count");
    }
    chk.record("independent", independent ? "yes" : "frozen-only");
  });
}

inline std::vector<std::string> suite_names() {
  return {"tight-ar",          "messy-ar",         "loose-ar",       "tight-exhaustive",
          "messy-structure",   "certifier-roundtrip", "lemma-properties",
          "constrained-sharpness", "multipartite-ar", "canonical-table", "copy-counts"};
}

inline CriterionResult run_criterion(int id, const IndependentCounter& independent = {}) {
  switch (id) {
    case 1:
      return criterion1();
    case 2:
      return criterion2();
    case 3:
      return criterion3();
    case 4:
      return criterion4();
    case 5:
      return criterion5();
    case 6:
      return criterion6();
    case 7:
      return criterion7();
    case 8:
      return criterion8();
    case 9:
      return criterion9();
    case 10:
      return criterion10();
    case 11:
      return criterion11(independent);
    default:
      throw Error(Error::Code::BadParameters, "criterion ids run 1..11");
  }
}

inline std::vector<CriterionResult> run_all(const IndependentCounter& independent = {}) {
  std::vector<CriterionResult> results;
  for (int id = 1; id <= 11; ++id) results.push_back(run_criterion(id, independent));
  return results;
}

}  // namespace rhl::acceptance
