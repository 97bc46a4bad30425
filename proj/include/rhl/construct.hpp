#pragma once

#include <map>
#include <random>
#include <set>

#include "rhl/coloring.hpp"

namespace rhl::construct {

// Triples {3i, 3i+1, 3i+2} get color i+1, everything else the base color.
// Rainbow tight-path free with floor(n/3)+1 colors.
inline Coloring tight_lower_bound(int n) {
  if (n < 5) throw Error(Error::Code::BadParameters, "tight lower bound needs n >= 5");
  auto h = HostGraph::complete(n);
  std::vector<int> cols(h.edge_count(), 0);
  for (int i = 0; 3 * i + 2 < n; ++i)
    cols[h.edge_rank(3 * i, 3 * i + 1, 3 * i + 2)] = i + 1;
  return Coloring(h, std::move(cols)).normalized();
}

// Pairs each K6 edge with its complementary triple; the ten classes are
// perfect matchings and the coloring has no rainbow messy-path.
inline Coloring messy_matching_k6() {
  auto h = HostGraph::complete(6);
  std::vector<int> cols(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < 6; ++v)
      if (!ed.contains(v)) rest.push_back(v);
    EdgeId comp = h.edge_rank(rest[0], rest[1], rest[2]);
    cols[e] = std::min(e, comp);
  }
  return Coloring(h, std::move(cols)).normalized();
}

// Edges {i, n-2, n-1} get color i+1 for i <= n-3, everything else base.
// Rainbow loose-path free with n-1 colors.
inline Coloring loose_lower_bound(int n) {
  if (n < 7) throw Error(Error::Code::BadParameters, "loose lower bound needs n >= 7");
  auto h = HostGraph::complete(n);
  std::vector<int> cols(h.edge_count(), 0);
  for (int i = 0; i <= n - 3; ++i) cols[h.edge_rank(i, n - 2, n - 1)] = i + 1;
  return Coloring(h, std::move(cols)).normalized();
}

// Two classes: the star at vertex 0 and all triples avoiding vertex 0. Both
// classes are intersecting families only up to n = 6, so larger hosts are
// rejected.
inline Coloring star_clique_2(int n) {
  if (n < 4 || n > 6)
    throw Error(Error::Code::BadParameters, "star/clique 2-coloring needs 4 <= n <= 6");
  auto h = HostGraph::complete(n);
  std::vector<int> cols(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) cols[e] = h.edge_unrank(e).contains(0) ? 0 : 1;
  return Coloring(h, std::move(cols)).normalized();
}

// Balanced tripartite host with all parts of size n.
inline HostGraph balanced_tripartite(int n) { return HostGraph::tripartite(n, n, n); }

// Every edge is colored by its part-0 vertex: n colors, no rainbow tight or
// messy path.
inline Coloring tri_apex_coloring(int n) {
  if (n < 3) throw Error(Error::Code::BadParameters, "tripartite constructions need n >= 3");
  auto h = balanced_tripartite(n);
  std::vector<int> cols(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) cols[e] = h.edge_unrank(e)[0];
  return Coloring(h, std::move(cols)).normalized();
}

// Diagonal edges {x_i, y_i, z_i} get color i, everything else base: n+1
// colors.
inline Coloring tri_diagonal_coloring(int n) {
  if (n < 3) throw Error(Error::Code::BadParameters, "tripartite constructions need n >= 3");
  auto h = balanced_tripartite(n);
  std::vector<int> cols(h.edge_count(), n);
  for (int i = 0; i < n; ++i) cols[h.edge_rank(i, n + i, 2 * n + i)] = i;
  return Coloring(h, std::move(cols)).normalized();
}

// Edges {x_0, y_0, z_i} get color i, everything else base: n+1 colors.
inline Coloring tri_pair_star_coloring(int n) {
  if (n < 3) throw Error(Error::Code::BadParameters, "tripartite constructions need n >= 3");
  auto h = balanced_tripartite(n);
  std::vector<int> cols(h.edge_count(), n);
  for (int i = 0; i < n; ++i) cols[h.edge_rank(0, n, 2 * n + i)] = i;
  return Coloring(h, std::move(cols)).normalized();
}

// Part-projection canonical coloring: edges share a color exactly when they
// meet the parts selected by J in the same vertices. J is a subset of
// {0, 1, 2}; the palette is the product of the selected part sizes.
inline Coloring projection_canonical(const HostGraph& host, const std::set<int>& J) {
  if (host.kind() != HostKind::Tripartite)
    throw Error(Error::Code::BadParameters, "projection canonical colorings need a tripartite host");
  for (int j : J)
    if (j < 0 || j > 2) throw Error(Error::Code::BadParameters, "J selects parts 0..2");
  std::map<std::vector<Vertex>, int> ids;
  std::vector<int> cols(host.edge_count());
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    Edge ed = host.edge_unrank(e);
    std::vector<Vertex> key;
    for (int i = 0; i < 3; ++i)
      if (J.count(host.part_of(ed[i]))) key.push_back(ed[i]);
    cols[e] = ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
  }
  return Coloring(host, std::move(cols));
}

// Position-projection canonical coloring on a complete host: edges share a
// color exactly when their sorted vertex lists agree on the positions in J
// (a subset of {0, 1, 2}).
inline Coloring position_canonical(int n, const std::set<int>& J) {
  auto h = HostGraph::complete(n);
  for (int j : J)
    if (j < 0 || j > 2) throw Error(Error::Code::BadParameters, "J selects positions 0..2");
  std::map<std::vector<Vertex>, int> ids;
  std::vector<int> cols(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    std::vector<Vertex> key;
    for (int j : J) key.push_back(ed[j]);
    cols[e] = ids.try_emplace(key, static_cast<int>(ids.size())).first->second;
  }
  return Coloring(h, std::move(cols));
}

// ---------------------------------------------------------------------------
// Seeded samplers for the certified structure families. Each sampler draws a
// random instance of one structural case, shaped so that the corresponding
// certifier accepts it and the coloring stays rainbow-free for its pattern.

enum class StructureCase {
  TightPartition,
  LooseMonoMinusVertex,
  LooseSpecialEdge,
  LoosePlusTwoApex,
  LoosePlusNearMono,
  LoosePlusSpecialEdge,
  TriApexPartition,
  TriBasePartition,
  TriTwoApex,
  TriUniqueEdge,
  TriFiveVertex,
};

namespace detail {

inline void require_complete(const HostGraph& h, int min_n, const char* what) {
  if (h.kind() != HostKind::Complete || h.vertex_count() < min_n)
    throw Error(Error::Code::BadParameters,
                std::string(what) + " needs a complete host with n >= " + std::to_string(min_n));
}

inline void require_balanced_tripartite(const HostGraph& h, const char* what) {
  auto p = h.part_sizes();
  if (h.kind() != HostKind::Tripartite || p[0] != p[1] || p[0] != p[2] || p[0] < 3)
    throw Error(Error::Code::BadParameters,
                std::string(what) + " needs a balanced tripartite host with parts >= 3");
}

inline int rand_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// One base color plus vertex-disjoint parts of size >= 3, part i colored in
// {base, i} with at least one edge of color i.
inline Coloring sample_tight_partition(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.vertex_count();
  int max_parts = n / 3;
  int p = rand_int(rng, 2, max_parts);
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);

  // Random composition of n into p parts, each >= 3.
  std::vector<int> sizes(p, 3);
  int spare = n - 3 * p;
  for (int i = 0; i < spare; ++i) sizes[rand_int(rng, 0, p - 1)]++;

  std::vector<int> part_of(n, -1);
  int at = 0;
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < sizes[i]; ++k) part_of[order[at++]] = i;

  std::vector<int> cols(h.edge_count(), 0);
  for (int i = 0; i < p; ++i) {
    std::vector<EdgeId> internal;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      Edge ed = h.edge_unrank(e);
      if (part_of[ed[0]] == i && part_of[ed[1]] == i && part_of[ed[2]] == i) internal.push_back(e);
    }
    bool has_part_color = false;
    while (!has_part_color) {
      for (EdgeId e : internal) {
        cols[e] = rand_int(rng, 0, 1) ? i + 1 : 0;
        has_part_color |= cols[e] == i + 1;
      }
    }
  }
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_loose_mono_minus_vertex(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.vertex_count();
  Vertex u = rand_int(rng, 0, n - 1);
  std::vector<int> cols(h.edge_count(), 0);
  bool pair_flavor = rand_int(rng, 0, 1) == 0;
  int fresh = rand_int(rng, 2, 4);
  if (pair_flavor) {
    Vertex v = (u + 1 + rand_int(rng, 0, n - 2)) % n;
    std::set<int> seen;
    while (seen.size() < 2) {
      seen.clear();
      for (Vertex w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        int c = rand_int(rng, 0, fresh);  // 0 keeps base
        cols[h.edge_rank(u, v, w)] = c;
        if (c > 0) seen.insert(c);
      }
    }
  } else {
    // Three edges inside a 4-set through u; any two share two vertices.
    std::vector<Vertex> others;
    for (Vertex w = 0; w < n; ++w)
      if (w != u) others.push_back(w);
    std::shuffle(others.begin(), others.end(), rng);
    Vertex a = others[0], b = others[1], c = others[2];
    std::set<int> seen;
    while (seen.size() < 2) {
      seen.clear();
      for (Edge e : {Edge(u, a, b), Edge(u, a, c), Edge(u, b, c)}) {
        int col = rand_int(rng, 0, fresh);
        cols[h.edge_rank(e)] = col;
        if (col > 0) seen.insert(col);
      }
    }
  }
  return Coloring(h, std::move(cols)).normalized();
}

// A special edge in one color, a second color on edges meeting it in exactly
// two vertices, base everywhere else: palette exactly 3. Each pair of the
// special edge carries two second-color edges with different outside
// vertices, so every vertex still has two non-base edges avoiding it and no
// apex-style case can apply.
inline Coloring sample_loose_special_edge(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.vertex_count();
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Vertex a = order[0], b = order[1], c = order[2];
  std::vector<Vertex> outside(order.begin() + 3, order.end());

  std::vector<int> cols(h.edge_count(), 0);
  cols[h.edge_rank(a, b, c)] = 1;
  std::array<std::array<Vertex, 2>, 3> pairs{{{a, b}, {a, c}, {b, c}}};
  for (auto pr : pairs) {
    std::shuffle(outside.begin(), outside.end(), rng);
    int count = 2 + rand_int(rng, 0, 1);
    for (int k = 0; k < count && k < static_cast<int>(outside.size()); ++k)
      cols[h.edge_rank(Edge(pr[0], pr[1], outside[k]))] = 2;
  }
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_loose_plus_two_apex(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.vertex_count();
  Vertex u = rand_int(rng, 0, n - 1);
  Vertex v = (u + 1 + rand_int(rng, 0, n - 2)) % n;
  int fresh = rand_int(rng, 2, std::min(4, n - 2));
  std::vector<int> cols(h.edge_count(), 0);
  std::set<int> seen;
  while (seen.size() < 2) {
    seen.clear();
    for (Vertex w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      int c = rand_int(rng, 0, fresh);
      cols[h.edge_rank(u, v, w)] = c;
      if (c > 0) seen.insert(c);
    }
  }
  return Coloring(h, std::move(cols)).normalized();
}

// All edges away from the apex share one color except at most one exceptional
// edge; the apex star spreads two or three colors over a fixed 4-set so no
// two-apex pair exists.
inline Coloring sample_loose_plus_near_mono(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.vertex_count();
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  Vertex v = order[0], x = order[1], y = order[2], z = order[3];
  std::vector<int> cols(h.edge_count(), 0);
  bool three_fresh = rand_int(rng, 0, 1) == 0;
  cols[h.edge_rank(v, x, y)] = 1;
  cols[h.edge_rank(v, x, z)] = 2;
  cols[h.edge_rank(v, y, z)] = three_fresh ? 3 : 1;
  // The exceptional edge may stay base, reuse an apex color, or bring a new
  // one; palette stays within {3, 4, 5}.
  int exc = rand_int(rng, 0, three_fresh ? 4 : 3);
  cols[h.edge_rank(x, y, z)] = exc;
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_tri_apex_partition(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.part_sizes()[0];
  int part = rand_int(rng, 0, 2);
  int lo = part == 0 ? 0 : (part == 1 ? n : 2 * n);
  int k = rand_int(rng, 3, n);
  // Surjective class assignment for the chosen part.
  std::vector<int> cls(n);
  for (;;) {
    std::set<int> seen;
    for (int i = 0; i < n; ++i) {
      cls[i] = rand_int(rng, 0, k - 1);
      seen.insert(cls[i]);
    }
    if (static_cast<int>(seen.size()) == k) break;
  }
  std::vector<int> cols(h.edge_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    for (int i = 0; i < 3; ++i)
      if (h.part_of(ed[i]) == part) cols[e] = cls[ed[i] - lo];
  }
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_tri_base_partition(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.part_sizes()[0];
  int g = rand_int(rng, 2, n);  // aligned group count; palette g+1
  std::array<std::vector<int>, 3> grp;
  for (int part = 0; part < 3; ++part) {
    grp[part].assign(n, 0);
    for (;;) {
      std::set<int> seen;
      for (int i = 0; i < n; ++i) {
        grp[part][i] = rand_int(rng, 0, g - 1);
        seen.insert(grp[part][i]);
      }
      if (static_cast<int>(seen.size()) == g) break;
    }
  }
  std::vector<int> cols(h.edge_count(), 0);
  std::vector<bool> present(g, false);
  while (true) {
    std::fill(present.begin(), present.end(), false);
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
      Edge ed = h.edge_unrank(e);
      int g0 = grp[0][ed[0]], g1 = grp[1][ed[1] - n], g2 = grp[2][ed[2] - 2 * n];
      if (g0 == g1 && g1 == g2) {
        cols[e] = rand_int(rng, 0, 1) ? 1 + g0 : 0;
        if (cols[e] > 0) present[g0] = true;
      } else {
        cols[e] = 0;
      }
    }
    if (std::all_of(present.begin(), present.end(), [](bool b) { return b; })) break;
  }
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_tri_two_apex(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.part_sizes()[0];
  int pa = rand_int(rng, 0, 2);
  int pb = (pa + 1 + rand_int(rng, 0, 1)) % 3;
  Vertex x = pa * n + rand_int(rng, 0, n - 1);
  Vertex y = pb * n + rand_int(rng, 0, n - 1);
  int pc = 3 - pa - pb;
  int fresh = rand_int(rng, 2, std::min(4, n));
  std::vector<int> cols(h.edge_count(), 0);
  std::set<int> seen;
  while (seen.size() < 2) {
    seen.clear();
    for (int i = 0; i < n; ++i) {
      Vertex z = pc * n + i;
      int c = rand_int(rng, 0, fresh);
      cols[h.edge_rank(Edge(x, y, z))] = c;
      if (c > 0) seen.insert(c);
    }
  }
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_tri_unique_edge(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.part_sizes()[0];
  Vertex x = rand_int(rng, 0, n - 1);
  Vertex y = n + rand_int(rng, 0, n - 1);
  Vertex z = 2 * n + rand_int(rng, 0, n - 1);
  std::vector<int> cols(h.edge_count(), 0);
  cols[h.edge_rank(x, y, z)] = 1;
  // Second color on edges meeting the unique edge in exactly two vertices,
  // using at least two different pairs so no apex pair covers them.
  auto other = [&](int part, Vertex avoid) {
    Vertex w = part * n + rand_int(rng, 0, n - 1);
    while (w == avoid) w = part * n + rand_int(rng, 0, n - 1);
    return w;
  };
  cols[h.edge_rank(Edge(x, y, other(2, z)))] = 2;
  cols[h.edge_rank(Edge(x, other(1, y), z))] = 2;
  if (rand_int(rng, 0, 1)) cols[h.edge_rank(Edge(other(0, x), y, z))] = 2;
  return Coloring(h, std::move(cols)).normalized();
}

inline Coloring sample_tri_five_vertex(const HostGraph& h, std::mt19937_64& rng) {
  int n = h.part_sizes()[0];
  int pa = rand_int(rng, 0, 2);
  std::array<int, 2> rest{};
  for (int p = 0, k = 0; p < 3; ++p)
    if (p != pa) rest[k++] = p;
  Vertex x = pa * n + rand_int(rng, 0, n - 1);
  int y1i = rand_int(rng, 0, n - 1), y2i = rand_int(rng, 0, n - 2);
  if (y2i >= y1i) ++y2i;
  int z1i = rand_int(rng, 0, n - 1), z2i = rand_int(rng, 0, n - 2);
  if (z2i >= z1i) ++z2i;
  Vertex y1 = rest[0] * n + y1i, y2 = rest[0] * n + y2i;
  Vertex z1 = rest[1] * n + z1i, z2 = rest[1] * n + z2i;
  std::vector<int> cols(h.edge_count(), 0);
  cols[h.edge_rank(Edge(x, y1, z1))] = 1;
  cols[h.edge_rank(Edge(x, y2, z2))] = 1;
  cols[h.edge_rank(Edge(x, y1, z2))] = 2;
  cols[h.edge_rank(Edge(x, y2, z1))] = 2;
  return Coloring(h, std::move(cols)).normalized();
}

}  // namespace detail

// Draws a structured coloring of the requested case on the given host.
// Deterministic for a fixed (case, host, seed).
inline Coloring sample_structured(StructureCase sc, const HostGraph& host, uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<uint64_t>(sc) + 1);
  using detail::require_balanced_tripartite;
  using detail::require_complete;
  switch (sc) {
    case StructureCase::TightPartition:
      require_complete(host, 6, "tight partition sampler");
      return detail::sample_tight_partition(host, rng);
    case StructureCase::LooseMonoMinusVertex:
      require_complete(host, 7, "loose sampler");
      return detail::sample_loose_mono_minus_vertex(host, rng);
    case StructureCase::LooseSpecialEdge:
      require_complete(host, 7, "loose sampler");
      return detail::sample_loose_special_edge(host, rng);
    case StructureCase::LoosePlusTwoApex:
      require_complete(host, 7, "loose sampler");
      return detail::sample_loose_plus_two_apex(host, rng);
    case StructureCase::LoosePlusNearMono:
      require_complete(host, 7, "loose sampler");
      return detail::sample_loose_plus_near_mono(host, rng);
    case StructureCase::LoosePlusSpecialEdge:
      require_complete(host, 7, "loose sampler");
      return detail::sample_loose_special_edge(host, rng);
    case StructureCase::TriApexPartition:
      require_balanced_tripartite(host, "tripartite sampler");
      return detail::sample_tri_apex_partition(host, rng);
    case StructureCase::TriBasePartition:
      require_balanced_tripartite(host, "tripartite sampler");
      return detail::sample_tri_base_partition(host, rng);
    case StructureCase::TriTwoApex:
      require_balanced_tripartite(host, "tripartite sampler");
      return detail::sample_tri_two_apex(host, rng);
    case StructureCase::TriUniqueEdge:
      require_balanced_tripartite(host, "tripartite sampler");
      return detail::sample_tri_unique_edge(host, rng);
    case StructureCase::TriFiveVertex:
      require_balanced_tripartite(host, "tripartite sampler");
      return detail::sample_tri_five_vertex(host, rng);
  }
  throw Error(Error::Code::BadParameters, "unknown structure case");
}

}  // namespace rhl::construct
