#pragma once

#include <array>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rhl/host.hpp"

namespace rhl {

enum class PatternId {
  TightPath,       // 5 vertices, consecutive edges share 2
  MessyPath,       // 6 vertices, one tight join and one loose join
  LoosePath,       // 7 vertices, consecutive edges share 1
  LooseCycle,      // 6 vertices, three edges closing a cycle
  LooseStar2,      // two edges sharing one center
  LooseStar3,      // three edges sharing one center
  TightStar2,      // two edges sharing a pair
  TightStar3,      // three edges sharing a pair
  LooseStar2PlusEdge,
  TightStar2PlusEdge,
  Matching2,       // two disjoint edges
  SingleEdge,
  Custom,
};

// A small 3-uniform template graph. Automorphisms are computed once, by brute
// force over vertex permutations, and reused to deduplicate copy enumeration.
class Pattern {
 public:
  static Pattern from_catalog(PatternId id) {
    switch (id) {
      case PatternId::TightPath:
        return Pattern(id, "tight-path", 5, {{{0, 1, 2}}, {{1, 2, 3}}, {{2, 3, 4}}});
      case PatternId::MessyPath:
        return Pattern(id, "messy-path", 6, {{{0, 1, 2}}, {{1, 2, 3}}, {{3, 4, 5}}});
      case PatternId::LoosePath:
        return Pattern(id, "loose-path", 7, {{{0, 1, 2}}, {{2, 3, 4}}, {{4, 5, 6}}});
      case PatternId::LooseCycle:
        return Pattern(id, "loose-cycle", 6, {{{0, 1, 2}}, {{2, 3, 4}}, {{4, 5, 0}}});
      case PatternId::LooseStar2:
        return Pattern(id, "loose-star-2", 5, {{{0, 1, 2}}, {{0, 3, 4}}});
      case PatternId::LooseStar3:
        return Pattern(id, "loose-star-3", 7, {{{0, 1, 2}}, {{0, 3, 4}}, {{0, 5, 6}}});
      case PatternId::TightStar2:
        return Pattern(id, "tight-star-2", 4, {{{0, 1, 2}}, {{0, 1, 3}}});
      case PatternId::TightStar3:
        return Pattern(id, "tight-star-3", 5, {{{0, 1, 2}}, {{0, 1, 3}}, {{0, 1, 4}}});
      case PatternId::LooseStar2PlusEdge:
        return Pattern(id, "loose-star-2+edge", 8, {{{0, 1, 2}}, {{0, 3, 4}}, {{5, 6, 7}}});
      case PatternId::TightStar2PlusEdge:
        return Pattern(id, "tight-star-2+edge", 7, {{{0, 1, 2}}, {{0, 1, 3}}, {{4, 5, 6}}});
      case PatternId::Matching2:
        return Pattern(id, "matching-2", 6, {{{0, 1, 2}}, {{3, 4, 5}}});
      case PatternId::SingleEdge:
        return Pattern(id, "single-edge", 3, {{{0, 1, 2}}});
      case PatternId::Custom:
        break;
    }
    throw Error(Error::Code::BadParameters, "custom patterns come from a file or edge list");
  }

  static Pattern custom(int vertex_count, std::vector<std::array<int, 3>> edges,
                        const std::string& name = "custom") {
    return Pattern(PatternId::Custom, name, vertex_count, std::move(edges));
  }

  // Pattern file format: "pattern <vertexcount>" then one "e <a> <b> <c>" per
  // edge; '#' comments. Capped at 10 vertices.
  static Pattern parse(std::istream& in, const std::string& name = "custom") {
    auto fail = [](int line, const std::string& why) -> void {
      throw Error(Error::Code::Parse, "line " + std::to_string(line) + ": " + why);
    };
    std::optional<int> vertices;
    std::vector<std::array<int, 3>> edges;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
      ++lineno;
      std::string line = raw.substr(0, raw.find('#'));
      std::istringstream ls(line);
      std::string tag;
      if (!(ls >> tag)) continue;
      if (tag == "pattern") {
        if (vertices) fail(lineno, "duplicate pattern line");
        int v;
        if (!(ls >> v)) fail(lineno, "malformed pattern line");
        vertices = v;
      } else if (tag == "e") {
        if (!vertices) fail(lineno, "edge line before pattern line");
        int a, b, c;
        if (!(ls >> a >> b >> c)) fail(lineno, "malformed edge line (want: e <a> <b> <c>)");
        edges.push_back({a, b, c});
      } else {
        fail(lineno, "unknown directive '" + tag + "'");
      }
    }
    if (!vertices) fail(lineno ? lineno : 1, "missing pattern line");
    return custom(*vertices, std::move(edges), name);
  }

  static Pattern parse(const std::string& text, const std::string& name = "custom") {
    std::istringstream in(text);
    return parse(in, name);
  }

  PatternId id() const { return id_; }
  const std::string& name() const { return name_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::array<int, 3>>& edges() const { return edges_; }

  int automorphism_count() const { return static_cast<int>(automorphisms_.size()); }
  const std::vector<std::vector<int>>& automorphisms() const { return automorphisms_; }

  bool operator==(const Pattern& o) const {
    return vertex_count_ == o.vertex_count_ && edges_ == o.edges_;
  }

  bool connected() const {
    if (vertex_count_ == 0) return false;
    std::vector<int> comp(vertex_count_);
    for (int i = 0; i < vertex_count_; ++i) comp[i] = i;
    auto find = [&](int x) {
      while (comp[x] != x) x = comp[x] = comp[comp[x]];
      return x;
    };
    for (auto& e : edges_) {
      comp[find(e[0])] = find(e[1]);
      comp[find(e[1])] = find(e[2]);
    }
    for (int i = 1; i < vertex_count_; ++i)
      if (find(i) != find(0)) return false;
    return true;
  }

  // Smallest t such that the pattern embeds in the complete tripartite host
  // with all parts of size t; nullopt when no proper 3-partition exists.
  std::optional<int> min_tripartite_part() const {
    std::vector<int> side(vertex_count_, -1);
    int best = -1;
    auto rec = [&](auto&& self, int v) -> void {
      if (v == vertex_count_) {
        std::array<int, 3> sz{0, 0, 0};
        for (int s : side) sz[s]++;
        int t = std::max({sz[0], sz[1], sz[2]});
        if (best < 0 || t < best) best = t;
        return;
      }
      for (int s = 0; s < 3; ++s) {
        side[v] = s;
        bool ok = true;
        for (auto& e : edges_) {
          if (e[0] > v || e[1] > v || e[2] > v) continue;
          if (side[e[0]] == side[e[1]] || side[e[0]] == side[e[2]] || side[e[1]] == side[e[2]]) {
            ok = false;
            break;
          }
        }
        if (ok) self(self, v + 1);
      }
      side[v] = -1;
    };
    rec(rec, 0);
    if (best < 0) return std::nullopt;
    return best;
  }

 private:
  Pattern(PatternId id, std::string name, int vertex_count, std::vector<std::array<int, 3>> edges)
      : id_(id), name_(std::move(name)), vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 3 || vertex_count_ > 10)
      throw Error(Error::Code::BadParameters, "patterns support 3..10 vertices");
    if (edges_.empty()) throw Error(Error::Code::BadParameters, "pattern needs at least one edge");
    std::vector<bool> used(vertex_count_, false);
    for (auto& e : edges_) {
      std::sort(e.begin(), e.end());
      if (e[0] < 0 || e[2] >= vertex_count_)
        throw Error(Error::Code::BadParameters, "pattern edge vertex out of range");
      if (e[0] == e[1] || e[1] == e[2])
        throw Error(Error::Code::BadParameters, "pattern edge has repeated vertices");
      for (int x : e) used[x] = true;
    }
    std::vector<std::array<int, 3>> sorted_edges = edges_;
    std::sort(sorted_edges.begin(), sorted_edges.end());
    if (std::adjacent_find(sorted_edges.begin(), sorted_edges.end()) != sorted_edges.end())
      throw Error(Error::Code::BadParameters, "duplicate pattern edge");
    for (int v = 0; v < vertex_count_; ++v)
      if (!used[v])
        throw Error(Error::Code::BadParameters, "pattern vertex " + std::to_string(v) +
                                                    " lies in no edge");
    edges_ = std::move(sorted_edges);
    compute_automorphisms();
  }

  void compute_automorphisms() {
    std::vector<int> perm(vertex_count_);
    for (int i = 0; i < vertex_count_; ++i) perm[i] = i;
    do {
      std::vector<std::array<int, 3>> mapped;
      mapped.reserve(edges_.size());
      for (auto& e : edges_) {
        std::array<int, 3> m{perm[e[0]], perm[e[1]], perm[e[2]]};
        std::sort(m.begin(), m.end());
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      if (mapped == edges_) automorphisms_.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  PatternId id_;
  std::string name_;
  int vertex_count_;
  std::vector<std::array<int, 3>> edges_;
  std::vector<std::vector<int>> automorphisms_;
};

inline const std::vector<PatternId>& pattern_catalog() {
  static const std::vector<PatternId> ids = {
      PatternId::TightPath,          PatternId::MessyPath,   PatternId::LoosePath,
      PatternId::LooseCycle,         PatternId::LooseStar2,  PatternId::LooseStar3,
      PatternId::TightStar2,         PatternId::TightStar3,  PatternId::LooseStar2PlusEdge,
      PatternId::TightStar2PlusEdge, PatternId::Matching2,   PatternId::SingleEdge,
  };
  return ids;
}

}  // namespace rhl
