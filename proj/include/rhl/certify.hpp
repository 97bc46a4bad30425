#pragma once

#include "rhl/certificate.hpp"

namespace rhl {

// Certifiers take a coloring, check the preconditions of the matching
// structure theorem, and either produce a certificate for the case that
// applies (always re-verified before it is returned) or explain why they
// cannot. A TheoremViolation from a certifier on a coloring that satisfies
// the preconditions is a counterexample to the theorem.

struct Rejection {
  enum class Kind { PreconditionFailed, TheoremViolation };
  Kind kind;
  std::string reason;
  std::optional<Embedding> witness;  // rainbow copy behind a failed precondition
};

template <class Cert>
using CertifyResult = std::variant<Cert, Rejection>;

namespace certify_detail {

inline Rejection precondition(std::string reason, std::optional<Embedding> w = {}) {
  return {Rejection::Kind::PreconditionFailed, std::move(reason), std::move(w)};
}

inline Rejection violation(std::string reason) {
  return {Rejection::Kind::TheoremViolation, std::move(reason), {}};
}

// Shared preconditions: complete host of at least `min_n` vertices, at least
// three colors, no rainbow copy of `id`.
inline std::optional<Rejection> check_complete_preconditions(const Coloring& c, int min_n,
                                                             PatternId id) {
  if (c.host().kind() != HostKind::Complete) return precondition("host is not complete");
  if (c.host().vertex_count() < min_n)
    return precondition("host has fewer than " + std::to_string(min_n) + " vertices");
  if (c.palette_size() < 3) return precondition("coloring uses fewer than 3 colors");
  if (auto rb = find_rainbow_copy(c, Pattern::from_catalog(id)))
    return precondition("coloring has a rainbow copy", std::move(rb));
  return std::nullopt;
}

// Colors on edges through each vertex.
inline std::vector<std::set<int>> vertex_palettes(const Coloring& c) {
  std::vector<std::set<int>> sets(c.host().vertex_count());
  for (EdgeId e = 0; e < c.host().edge_count(); ++e) {
    Edge ed = c.host().edge_unrank(e);
    for (int i = 0; i < 3; ++i) sets[ed[i]].insert(c.colors()[e]);
  }
  return sets;
}

// Color ids actually used, ascending (the coloring need not be normalized).
inline std::vector<int> distinct_colors(const Coloring& c) {
  std::set<int> s(c.colors().begin(), c.colors().end());
  return {s.begin(), s.end()};
}

// First (edge, color) pair, in (EdgeId, color id) order, such that the edge
// avoids the color and every other edge off that color meets it in exactly
// two vertices.
inline std::optional<SpecialEdgeCert> find_special_edge(const Coloring& c) {
  const auto& h = c.host();
  auto palette = distinct_colors(c);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    for (int i : palette) {
      if (c.colors()[e] == i) continue;
      bool ok = true;
      for (EdgeId f = 0; f < h.edge_count() && ok; ++f)
        if (f != e && c.colors()[f] != i && h.edge_unrank(f).intersection_size(ed) != 2)
          ok = false;
      if (ok) return SpecialEdgeCert{ed, i};
    }
  }
  return std::nullopt;
}

template <class Cert>
CertifyResult<Cert> verified(const Coloring& c, Cert cert) {
  if (auto res = verify_certificate(c, cert); !res)
    return violation("found structure fails verification: " + res.reason);
  return cert;
}

}  // namespace certify_detail

// Tight-path structure: with three or more colors and no rainbow tight path,
// the vertex set splits into parts, one color per part, with all crossing
// edges in a common base color and each part colored from {base, its color}.
inline CertifyResult<TightPartitionCert> certify_tight(const Coloring& c) {
  using namespace certify_detail;
  if (auto pre = check_complete_preconditions(c, 5, PatternId::TightPath))
    return *pre;

  auto sets = vertex_palettes(c);
  for (Vertex v = 0; v < c.host().vertex_count(); ++v)
    if (sets[v].size() > 2)
      return violation("vertex " + std::to_string(v) + " meets three colors");

  std::set<int> common = sets[0];
  for (const auto& s : sets) {
    std::set<int> next;
    std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                          std::inserter(next, next.begin()));
    common = std::move(next);
  }
  if (common.empty()) return violation("no color is shared by every vertex");
  int base = *common.begin();

  TightPartitionCert cert{base, {}};
  for (int col : distinct_colors(c)) {
    if (col == base) continue;
    TightPartitionCert::Part part{col, {}};
    for (Vertex v = 0; v < c.host().vertex_count(); ++v)
      if (sets[v].count(col)) part.vertices.push_back(v);
    cert.parts.push_back(std::move(part));
  }
  // Vertices meeting only the base color join the first part.
  for (Vertex v = 0; v < c.host().vertex_count(); ++v)
    if (sets[v].size() == 1) cert.parts.front().vertices.push_back(v);
  for (auto& part : cert.parts) std::sort(part.vertices.begin(), part.vertices.end());

  return verified(c, std::move(cert));
}

// Messy-path structure: with three or more colors a rainbow messy path must
// exist; with at most two colors the coloring is consistent as-is.
inline CertifyResult<MessyCert> certify_messy(const Coloring& c) {
  using namespace certify_detail;
  if (c.host().kind() != HostKind::Complete) return precondition("host is not complete");
  if (c.host().vertex_count() < 7) return precondition("host has fewer than 7 vertices");
  if (c.palette_size() <= 2) return MessyCert{TwoColorsCert{}};
  auto rb = find_rainbow_copy(c, Pattern::from_catalog(PatternId::MessyPath));
  if (!rb) return violation("three or more colors but no rainbow messy path");
  RainbowWitnessCert cert{};
  std::copy(rb->vertex_images.begin(), rb->vertex_images.end(), cert.vertices.begin());
  return verified(c, MessyCert{cert});
}

// Loose-path structure: either some vertex sees all the color variety (the
// rest is monochromatic), or a special edge absorbs it.
inline CertifyResult<LooseCert> certify_loose(const Coloring& c) {
  using namespace certify_detail;
  if (auto pre = check_complete_preconditions(c, 7, PatternId::LoosePath))
    return *pre;

  const auto& h = c.host();
  for (Vertex u = 0; u < h.vertex_count(); ++u) {
    int mono = -1;
    bool uniform = true;
    for (EdgeId e = 0; e < h.edge_count() && uniform; ++e) {
      if (h.edge_unrank(e).contains(u)) continue;
      if (mono == -1) mono = c.colors()[e];
      uniform = c.colors()[e] == mono;
    }
    if (uniform) return verified(c, LooseCert{MonoMinusVertexCert{u, mono}});
  }
  if (auto special = find_special_edge(c)) return verified(c, LooseCert{*special});
  return violation("no monochromatic complement and no special edge");
}

// Refined loose-path structure: a pair of apex vertices carrying every
// off-base edge, or a near-monochromatic complement of one vertex (palette 3
// to 5), or a special edge in a 3-coloring.
inline CertifyResult<LoosePlusCert> certify_loose_plus(const Coloring& c) {
  using namespace certify_detail;
  if (auto pre = check_complete_preconditions(c, 7, PatternId::LoosePath))
    return *pre;

  const auto& h = c.host();
  int palette = c.palette_size();

  for (Vertex u = 0; u < h.vertex_count(); ++u)
    for (Vertex v = u + 1; v < h.vertex_count(); ++v) {
      int base = -1;
      bool uniform = true;
      for (EdgeId e = 0; e < h.edge_count() && uniform; ++e) {
        Edge ed = h.edge_unrank(e);
        if (ed.contains(u) && ed.contains(v)) continue;
        if (base == -1) base = c.colors()[e];
        uniform = c.colors()[e] == base;
      }
      if (uniform) return verified(c, LoosePlusCert{TwoApexCert{u, v, base}});
    }

  if (palette <= 5) {
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
      std::map<int, std::vector<EdgeId>> freq;
      for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (!h.edge_unrank(e).contains(u)) freq[c.colors()[e]].push_back(e);
      if (freq.size() == 1) {
        return verified(c, LoosePlusCert{NearMonoCert{u, freq.begin()->first, {}}});
      }
      if (freq.size() == 2) {
        auto a = freq.begin(), b = std::next(a);
        if (a->second.size() > 1 && b->second.size() > 1) continue;
        auto& exc = a->second.size() == 1 ? a : b;
        auto& mono = a->second.size() == 1 ? b : a;
        return verified(c, LoosePlusCert{NearMonoCert{
                               u, mono->first, h.edge_unrank(exc->second.front())}});
      }
    }
  }

  if (palette == 3)
    if (auto special = find_special_edge(c))
      return verified(
          c, LoosePlusCert{SpecialEdgeThreeCert{special->edge, special->base_color}});
  return violation("no apex pair, near-monochromatic complement, or special edge");
}

enum class TriTheorem { Tight, Messy, Loose };

namespace certify_detail {

inline std::optional<TriApexPartitionCert> find_apex_partition(const Coloring& c) {
  const auto& h = c.host();
  for (int part = 0; part < 3; ++part) {
    std::map<Vertex, int> star;  // vertex -> its uniform color
    bool uniform = true;
    for (EdgeId e = 0; e < h.edge_count() && uniform; ++e) {
      Edge ed = h.edge_unrank(e);
      for (int i = 0; i < 3; ++i) {
        if (h.part_of(ed[i]) != part) continue;
        auto [it, fresh] = star.emplace(ed[i], c.colors()[e]);
        if (!fresh && it->second != c.colors()[e]) uniform = false;
      }
    }
    if (!uniform) continue;
    std::map<int, std::vector<Vertex>> by_color;
    for (auto [v, col] : star) by_color[col].push_back(v);
    TriApexPartitionCert cert{part, {}};
    for (auto& [col, vs] : by_color) cert.classes.push_back({col, std::move(vs)});
    return cert;
  }
  return std::nullopt;
}

inline std::optional<TriBasePartitionCert> find_base_partition(const Coloring& c) {
  const auto& h = c.host();
  auto palette = distinct_colors(c);
  for (int base : palette) {
    TriBasePartitionCert cert{base, {}};
    std::set<Vertex> used;
    bool ok = true;
    for (int col : palette) {
      if (col == base || !ok) continue;
      TriBasePartitionCert::Class cls{col, {}};
      for (EdgeId e = 0; e < h.edge_count(); ++e) {
        if (c.colors()[e] != col) continue;
        Edge ed = h.edge_unrank(e);
        for (int i = 0; i < 3; ++i) cls.vertices[h.part_of(ed[i])].push_back(ed[i]);
      }
      for (auto& side : cls.vertices) {
        std::sort(side.begin(), side.end());
        side.erase(std::unique(side.begin(), side.end()), side.end());
        for (Vertex v : side) ok &= used.insert(v).second;
      }
      cert.classes.push_back(std::move(cls));
    }
    if (!ok || cert.classes.size() < 2) continue;
    // Vertices on no off-base edge join the first class of their part.
    for (Vertex v = 0; v < h.vertex_count(); ++v)
      if (!used.count(v)) {
        auto& side = cert.classes.front().vertices[h.part_of(v)];
        side.insert(std::lower_bound(side.begin(), side.end(), v), v);
      }
    if (verify_certificate(c, cert)) return cert;
  }
  return std::nullopt;
}

inline std::optional<TriTwoApexCert> find_tri_two_apex(const Coloring& c) {
  const auto& h = c.host();
  for (Vertex x = 0; x < h.vertex_count(); ++x)
    for (Vertex y = x + 1; y < h.vertex_count(); ++y) {
      if (h.part_of(x) == h.part_of(y)) continue;
      int base = -1;
      bool uniform = true;
      for (EdgeId e = 0; e < h.edge_count() && uniform; ++e) {
        Edge ed = h.edge_unrank(e);
        if (ed.contains(x) && ed.contains(y)) continue;
        if (base == -1) base = c.colors()[e];
        uniform = c.colors()[e] == base;
      }
      if (uniform) return TriTwoApexCert{x, y, base};
    }
  return std::nullopt;
}

inline std::optional<TriUniqueEdgeCert> find_tri_unique_edge(const Coloring& c) {
  const auto& h = c.host();
  std::map<int, std::vector<EdgeId>> by_color;
  for (EdgeId e = 0; e < h.edge_count(); ++e) by_color[c.colors()[e]].push_back(e);
  for (auto& [c1, edges1] : by_color) {
    if (edges1.size() != 1) continue;
    Edge e = h.edge_unrank(edges1.front());
    for (auto& [c2, edges2] : by_color) {
      if (c2 == c1) continue;
      bool ok = true;
      for (EdgeId f : edges2)
        if (h.edge_unrank(f).intersection_size(e) != 2) {
          ok = false;
          break;
        }
      if (ok) return TriUniqueEdgeCert{e, c1, c2};
    }
  }
  return std::nullopt;
}

inline std::optional<TriFiveVertexCert> find_tri_five_vertex(const Coloring& c) {
  const auto& h = c.host();
  // Exactly four off-base edges, all through one apex in a 2x2 pattern.
  for (int base : distinct_colors(c)) {
    std::vector<EdgeId> off;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
      if (c.colors()[e] != base) off.push_back(e);
    if (off.size() != 4) continue;
    std::map<Vertex, int> count;
    for (EdgeId e : off) {
      Edge ed = h.edge_unrank(e);
      for (int i = 0; i < 3; ++i) count[ed[i]]++;
    }
    Vertex apex = -1;
    bool shaped = true;
    std::array<std::vector<Vertex>, 3> twos{};
    for (auto [v, k] : count) {
      if (k == 4 && apex == -1)
        apex = v;
      else if (k == 2)
        twos[h.part_of(v)].push_back(v);
      else
        shaped = false;
    }
    if (!shaped || apex == -1) continue;
    std::vector<std::vector<Vertex>*> sides;
    for (auto& s : twos)
      if (!s.empty()) sides.push_back(&s);
    if (sides.size() != 2 || sides[0]->size() != 2 || sides[1]->size() != 2) continue;
    auto& ys = *sides[0];
    auto& zs = *sides[1];
    TriFiveVertexCert cert{apex,
                           {ys[0], ys[1]},
                           {zs[0], zs[1]},
                           c.colors()[h.edge_rank(Edge(apex, ys[0], zs[0]))],
                           c.colors()[h.edge_rank(Edge(apex, ys[0], zs[1]))],
                           base};
    if (verify_certificate(c, cert)) return cert;
  }
  return std::nullopt;
}

}  // namespace certify_detail

// Tripartite structure theorems over a balanced host with parts of size >= 3.
inline CertifyResult<TriCert> certify_tripartite(const Coloring& c, TriTheorem theorem) {
  using namespace certify_detail;
  const auto& h = c.host();
  auto sizes = h.part_sizes();
  if (h.kind() != HostKind::Tripartite || sizes[0] != sizes[1] || sizes[0] != sizes[2])
    return precondition("host is not a balanced tripartite graph");
  if (sizes[0] < 3) return precondition("host parts have fewer than 3 vertices");
  if (c.palette_size() < 3) return precondition("coloring uses fewer than 3 colors");

  PatternId id = theorem == TriTheorem::Tight    ? PatternId::TightPath
                 : theorem == TriTheorem::Messy  ? PatternId::MessyPath
                                                 : PatternId::LoosePath;
  if (auto rb = find_rainbow_copy(c, Pattern::from_catalog(id)))
    return precondition("coloring has a rainbow copy", std::move(rb));

  switch (theorem) {
    case TriTheorem::Messy:
      if (auto apex = find_apex_partition(c)) return verified(c, TriCert{*apex});
      return violation("no apex part with uniform vertex stars");
    case TriTheorem::Tight:
      if (auto apex = find_apex_partition(c)) return verified(c, TriCert{*apex});
      if (auto base = find_base_partition(c)) return verified(c, TriCert{*base});
      return violation("no apex partition and no aligned base partition");
    case TriTheorem::Loose:
      if (auto pair = find_tri_two_apex(c)) return verified(c, TriCert{*pair});
      if (c.palette_size() == 3) {
        if (auto unique = find_tri_unique_edge(c)) return verified(c, TriCert{*unique});
        if (auto five = find_tri_five_vertex(c)) return verified(c, TriCert{*five});
      }
      return violation("no apex pair, unique edge, or five-vertex pattern");
  }
  return violation("unknown theorem");
}

}  // namespace rhl
