#pragma once

#include <array>
#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rhl {

using Vertex = int;
using EdgeId = int;

class Error : public std::runtime_error {
 public:
  enum class Code {
    NotAnEdge,
    OutOfRange,
    InvalidPermutation,
    BadParameters,
    TooLarge,
    Parse,
  };

  Error(Code code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// A 3-element edge, stored with ascending vertex ids.
struct Edge {
  std::array<Vertex, 3> v;

  Edge() : v{-1, -1, -1} {}
  Edge(Vertex a, Vertex b, Vertex c) : v{a, b, c} { std::sort(v.begin(), v.end()); }

  Vertex operator[](int i) const { return v[i]; }
  auto operator<=>(const Edge&) const = default;

  bool contains(Vertex x) const { return v[0] == x || v[1] == x || v[2] == x; }
  int intersection_size(const Edge& o) const {
    int k = 0;
    for (Vertex x : v) k += o.contains(x) ? 1 : 0;
    return k;
  }
};

enum class HostKind { Complete, Tripartite };

// Edge-indexed 3-uniform host: either the complete K_n^(3) or the complete
// tripartite K_{n1,n2,n3}^(3) with one vertex per part in every edge.
// Parts occupy contiguous vertex ranges [0,n1), [n1,n1+n2), [n1+n2,N).
class HostGraph {
 public:
  static HostGraph complete(int n) {
    if (n < 3) throw Error(Error::Code::BadParameters, "complete host needs n >= 3");
    if (n > 128) throw Error(Error::Code::TooLarge, "complete host capped at n = 128");
    HostGraph h;
    h.kind_ = HostKind::Complete;
    h.parts_ = {n, 0, 0};
    h.vertex_count_ = n;
    h.edge_count_ = n * (n - 1) * (n - 2) / 6;
    return h;
  }

  static HostGraph tripartite(int n1, int n2, int n3) {
    if (n1 < 1 || n2 < 1 || n3 < 1)
      throw Error(Error::Code::BadParameters, "tripartite host needs all parts >= 1");
    if (n1 + n2 + n3 > 128) throw Error(Error::Code::TooLarge, "tripartite host capped at 128 vertices");
    HostGraph h;
    h.kind_ = HostKind::Tripartite;
    h.parts_ = {n1, n2, n3};
    h.vertex_count_ = n1 + n2 + n3;
    h.edge_count_ = n1 * n2 * n3;
    return h;
  }

  HostKind kind() const { return kind_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return edge_count_; }
  std::array<int, 3> part_sizes() const { return parts_; }

  bool operator==(const HostGraph& o) const {
    return kind_ == o.kind_ && parts_ == o.parts_;
  }

  // Tripartite only: which part a vertex belongs to (0, 1 or 2).
  int part_of(Vertex x) const {
    if (x < 0 || x >= vertex_count_) throw Error(Error::Code::OutOfRange, "vertex out of range");
    if (x < parts_[0]) return 0;
    if (x < parts_[0] + parts_[1]) return 1;
    return 2;
  }

  bool is_vertex(Vertex x) const { return x >= 0 && x < vertex_count_; }

  bool is_edge(Vertex a, Vertex b, Vertex c) const {
    if (!is_vertex(a) || !is_vertex(b) || !is_vertex(c)) return false;
    if (a == b || a == c || b == c) return false;
    if (kind_ == HostKind::Complete) return true;
    int pa = part_of(a), pb = part_of(b), pc = part_of(c);
    return pa != pb && pa != pc && pb != pc;
  }

  // Complete: colexicographic rank of the sorted triple.
  // Tripartite: mixed-radix rank of the part-local indices.
  EdgeId edge_rank(Vertex a, Vertex b, Vertex c) const {
    if (!is_edge(a, b, c)) {
      throw Error(Error::Code::NotAnEdge,
                  "not a host edge: " + std::to_string(a) + " " + std::to_string(b) + " " +
                      std::to_string(c));
    }
    if (kind_ == HostKind::Complete) {
      Edge e(a, b, c);
      int x = e[0], y = e[1], z = e[2];
      return x + y * (y - 1) / 2 + z * (z - 1) * (z - 2) / 6;
    }
    int idx[3];
    for (Vertex x : {a, b, c}) idx[part_of(x)] = local_index(x);
    return idx[0] + parts_[0] * (idx[1] + parts_[1] * idx[2]);
  }

  EdgeId edge_rank(const Edge& e) const { return edge_rank(e[0], e[1], e[2]); }

  Edge edge_unrank(EdgeId r) const {
    if (r < 0 || r >= edge_count_) throw Error(Error::Code::OutOfRange, "edge id out of range");
    if (kind_ == HostKind::Complete) {
      int z = 2;
      while ((z + 1) * z * (z - 1) / 6 <= r) ++z;
      r -= z * (z - 1) * (z - 2) / 6;
      int y = 1;
      while ((y + 1) * y / 2 <= r) ++y;
      r -= y * (y - 1) / 2;
      return Edge(r, y, z);
    }
    int i1 = r % parts_[0];
    int i2 = (r / parts_[0]) % parts_[1];
    int i3 = r / (parts_[0] * parts_[1]);
    return Edge(i1, parts_[0] + i2, parts_[0] + parts_[1] + i3);
  }

 private:
  int local_index(Vertex x) const {
    int p = part_of(x);
    return p == 0 ? x : (p == 1 ? x - parts_[0] : x - parts_[0] - parts_[1]);
  }

  HostKind kind_ = HostKind::Complete;
  std::array<int, 3> parts_{0, 0, 0};
  int vertex_count_ = 0;
  int edge_count_ = 0;
};

}  // namespace rhl
