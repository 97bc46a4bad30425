#pragma once

#include <numeric>
#include <set>
#include <unordered_map>
#include <vector>

#include "rhl/host.hpp"

namespace rhl {

// A total edge coloring of a host, indexed by EdgeId. Color ids are
// non-negative ints; the normalized form renumbers them in first-appearance
// order along increasing EdgeId, so two colorings with the same underlying
// partition of E normalize identically.
class Coloring {
 public:
  Coloring(HostGraph host, std::vector<int> colors)
      : host_(host), colors_(std::move(colors)) {
    if (static_cast<int>(colors_.size()) != host_.edge_count())
      throw Error(Error::Code::BadParameters, "coloring must assign every host edge");
    for (int c : colors_)
      if (c < 0) throw Error(Error::Code::BadParameters, "color ids must be non-negative");
  }

  const HostGraph& host() const { return host_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_of(EdgeId e) const { return colors_.at(e); }
  int color_of(const Edge& e) const { return colors_[host_.edge_rank(e)]; }

  int palette_size() const {
    std::set<int> s(colors_.begin(), colors_.end());
    return static_cast<int>(s.size());
  }

  bool is_normalized() const {
    int next = 0;
    std::unordered_map<int, int> seen;
    for (int c : colors_) {
      auto it = seen.find(c);
      if (it == seen.end()) {
        if (c != next) return false;
        seen.emplace(c, next++);
      }
    }
    return true;
  }

  Coloring normalized() const {
    std::vector<int> out(colors_.size());
    std::unordered_map<int, int> remap;
    int next = 0;
    for (size_t i = 0; i < colors_.size(); ++i) {
      auto [it, fresh] = remap.try_emplace(colors_[i], next);
      if (fresh) ++next;
      out[i] = it->second;
    }
    return Coloring(host_, std::move(out));
  }

  // Applies a host automorphism: the returned coloring gives edge f the color
  // the input gave sigma^-1(f). Complete hosts accept any vertex bijection;
  // tripartite hosts require parts to map onto parts (of equal size).
  // The result is renormalized.
  Coloring relabel_vertices(const std::vector<Vertex>& sigma) const {
    validate_automorphism(sigma);
    std::vector<int> out(colors_.size());
    for (EdgeId e = 0; e < host_.edge_count(); ++e) {
      Edge ed = host_.edge_unrank(e);
      EdgeId img = host_.edge_rank(sigma[ed[0]], sigma[ed[1]], sigma[ed[2]]);
      out[img] = colors_[e];
    }
    return Coloring(host_, std::move(out)).normalized();
  }

 private:
  void validate_automorphism(const std::vector<Vertex>& sigma) const {
    int n = host_.vertex_count();
    if (static_cast<int>(sigma.size()) != n)
      throw Error(Error::Code::InvalidPermutation, "permutation has wrong length");
    std::vector<bool> hit(n, false);
    for (Vertex x : sigma) {
      if (x < 0 || x >= n || hit[x])
        throw Error(Error::Code::InvalidPermutation, "not a bijection on the vertex set");
      hit[x] = true;
    }
    if (host_.kind() == HostKind::Tripartite) {
      // Each part must land inside a single part of the same size.
      for (int p = 0; p < 3; ++p) {
        int lo = 0;
        for (int q = 0; q < p; ++q) lo += host_.part_sizes()[q];
        int hi = lo + host_.part_sizes()[p];
        if (lo == hi) continue;
        int target = host_.part_of(sigma[lo]);
        for (int v = lo; v < hi; ++v)
          if (host_.part_of(sigma[v]) != target)
            throw Error(Error::Code::InvalidPermutation, "parts must map onto parts");
        if (host_.part_sizes()[target] != hi - lo)
          throw Error(Error::Code::InvalidPermutation, "parts must map onto parts of equal size");
      }
    }
  }

  HostGraph host_;
  std::vector<int> colors_;
};

struct ColorSummary {
  int palette_size = 0;
  std::vector<int> vertex_color_degree;  // distinct colors incident to each vertex
  int max_color_degree = 0;
};

inline ColorSummary color_summary(const Coloring& c) {
  const HostGraph& h = c.host();
  std::vector<std::set<int>> seen(h.vertex_count());
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    for (int i = 0; i < 3; ++i) seen[ed[i]].insert(c.color_of(e));
  }
  ColorSummary s;
  s.palette_size = c.palette_size();
  s.vertex_color_degree.reserve(seen.size());
  for (auto& t : seen) {
    s.vertex_color_degree.push_back(static_cast<int>(t.size()));
    s.max_color_degree = std::max(s.max_color_degree, s.vertex_color_degree.back());
  }
  return s;
}

}  // namespace rhl
