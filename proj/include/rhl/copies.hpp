#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

#include "rhl/coloring.hpp"
#include "rhl/pattern.hpp"

namespace rhl {

// One copy of a pattern in a host: the vertex injection that realizes it and
// the resulting edge ids (ascending). Copies are identified with their edge
// sets; automorphic injections are collapsed to the lexicographically least
// vertex map.
struct Embedding {
  std::vector<Vertex> vertex_images;
  std::vector<EdgeId> edge_images;
};

// All copies of a pattern in a host, ordered lexicographically by edge_images.
class CopyTable {
 public:
  CopyTable(const HostGraph& host, const Pattern& pattern) : host_(host), pattern_(pattern) {
    enumerate();
  }

  const HostGraph& host() const { return host_; }
  const Pattern& pattern() const { return pattern_; }
  const std::vector<Embedding>& copies() const { return copies_; }
  int copy_count() const { return static_cast<int>(copies_.size()); }

  // Shared cache; hosts and patterns are small value types, so the key is
  // their full description.
  static const CopyTable& cached(const HostGraph& host, const Pattern& pattern) {
    using Key = std::tuple<HostKind, std::array<int, 3>, int, std::vector<std::array<int, 3>>>;
    static std::map<Key, std::unique_ptr<CopyTable>> cache;
    static std::mutex mu;
    Key key{host.kind(), host.part_sizes(), pattern.vertex_count(), pattern.edges()};
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(std::move(key), std::make_unique<CopyTable>(host, pattern)).first;
    return *it->second;
  }

 private:
  void enumerate() {
    int pv = pattern_.vertex_count();
    if (pv > host_.vertex_count()) return;

    // Check template edges as soon as their last endpoint is mapped.
    std::vector<std::vector<int>> edges_closing_at(pv);
    for (int i = 0; i < pattern_.edge_count(); ++i) {
      const auto& e = pattern_.edges()[i];
      edges_closing_at[std::max({e[0], e[1], e[2]})].push_back(i);
    }

    std::vector<Vertex> map(pv, -1);
    std::vector<bool> used(host_.vertex_count(), false);
    auto rec = [&](auto&& self, int depth) -> void {
      if (depth == pv) {
        // Keep only the automorphism-least injection for each edge set.
        for (const auto& alpha : pattern_.automorphisms()) {
          for (int i = 0; i < pv; ++i) {
            Vertex a = map[alpha[i]];
            if (a < map[i]) goto next_alpha;
            if (a > map[i]) break;
          }
          continue;
        next_alpha:
          return;
        }
        Embedding emb;
        emb.vertex_images = map;
        emb.edge_images.reserve(pattern_.edge_count());
        for (const auto& e : pattern_.edges())
          emb.edge_images.push_back(host_.edge_rank(map[e[0]], map[e[1]], map[e[2]]));
        std::sort(emb.edge_images.begin(), emb.edge_images.end());
        copies_.push_back(std::move(emb));
        return;
      }
      for (Vertex v = 0; v < host_.vertex_count(); ++v) {
        if (used[v]) continue;
        map[depth] = v;
        bool ok = true;
        for (int i : edges_closing_at[depth]) {
          const auto& e = pattern_.edges()[i];
          if (!host_.is_edge(map[e[0]], map[e[1]], map[e[2]])) {
            ok = false;
            break;
          }
        }
        if (ok) {
          used[v] = true;
          self(self, depth + 1);
          used[v] = false;
        }
      }
      map[depth] = -1;
    };
    rec(rec, 0);

    std::sort(copies_.begin(), copies_.end(),
              [](const Embedding& a, const Embedding& b) { return a.edge_images < b.edge_images; });
  }

  HostGraph host_;
  Pattern pattern_;
  std::vector<Embedding> copies_;
};

inline const std::vector<Embedding>& enumerate_embeddings(const HostGraph& host,
                                                          const Pattern& pattern) {
  return CopyTable::cached(host, pattern).copies();
}

inline int count_copies(const HostGraph& host, const Pattern& pattern) {
  return CopyTable::cached(host, pattern).copy_count();
}

// First copy (in enumeration order) whose edges have pairwise distinct colors.
inline std::optional<Embedding> find_rainbow_copy(const Coloring& c, const Pattern& pattern) {
  const auto& copies = CopyTable::cached(c.host(), pattern).copies();
  for (const auto& emb : copies) {
    bool rainbow = true;
    int k = static_cast<int>(emb.edge_images.size());
    for (int i = 0; i < k && rainbow; ++i)
      for (int j = i + 1; j < k; ++j)
        if (c.color_of(emb.edge_images[i]) == c.color_of(emb.edge_images[j])) {
          rainbow = false;
          break;
        }
    if (rainbow) return emb;
  }
  return std::nullopt;
}

// First copy (in enumeration order) whose edges all share one color.
inline std::optional<Embedding> find_monochromatic_copy(const Coloring& c, const Pattern& pattern) {
  const auto& copies = CopyTable::cached(c.host(), pattern).copies();
  for (const auto& emb : copies) {
    int col = c.color_of(emb.edge_images[0]);
    bool mono = true;
    for (EdgeId e : emb.edge_images)
      if (c.color_of(e) != col) {
        mono = false;
        break;
      }
    if (mono) return emb;
  }
  return std::nullopt;
}

inline bool is_rainbow_free(const Coloring& c, const Pattern& pattern) {
  return !find_rainbow_copy(c, pattern).has_value();
}

}  // namespace rhl
