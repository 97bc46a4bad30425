#pragma once

#include <optional>
#include <variant>

#include <json.hpp>

#include "rhl/copies.hpp"

namespace rhl {

// Structural certificates. Each type records the data of one case of a
// structure theorem; verify_certificate re-checks the claim edge by edge
// against a coloring, independently of how the certificate was produced.

struct TightPartitionCert {
  struct Part {
    int color;
    std::vector<Vertex> vertices;
  };
  int base_color;
  std::vector<Part> parts;  // ascending color
};

struct MonoMinusVertexCert {
  Vertex apex;
  int mono_color;
};

struct SpecialEdgeCert {
  Edge edge;
  int base_color;  // every other edge off this color meets `edge` in two vertices
};

using LooseCert = std::variant<MonoMinusVertexCert, SpecialEdgeCert>;

struct TwoApexCert {
  Vertex u, v;
  int base_color;
};

struct NearMonoCert {
  Vertex apex;
  int mono_color;
  std::optional<Edge> exceptional;  // the one edge off `apex` allowed another color
};

struct SpecialEdgeThreeCert {
  Edge edge;
  int base_color;
};

using LoosePlusCert = std::variant<TwoApexCert, NearMonoCert, SpecialEdgeThreeCert>;

struct TwoColorsCert {};

struct RainbowWitnessCert {
  std::array<Vertex, 6> vertices;  // images of the messy-path vertices
};

using MessyCert = std::variant<TwoColorsCert, RainbowWitnessCert>;

struct TriApexPartitionCert {
  struct Class {
    int color;
    std::vector<Vertex> vertices;
  };
  int part;
  std::vector<Class> classes;  // ascending color, partitioning the part
};

struct TriBasePartitionCert {
  struct Class {
    int color;
    std::array<std::vector<Vertex>, 3> vertices;  // slice per part
  };
  int base_color;
  std::vector<Class> classes;  // ascending color, aligned across the parts
};

struct TriTwoApexCert {
  Vertex x, y;  // in different parts
  int base_color;
};

struct TriUniqueEdgeCert {
  Edge edge;
  int unique_color;       // color with `edge` as its only member
  int constrained_color;  // every edge of this color meets `edge` in two vertices
};

struct TriFiveVertexCert {
  Vertex apex;
  std::array<Vertex, 2> y;  // one part
  std::array<Vertex, 2> z;  // the other part
  int color_a, color_b;     // c(apex,y0,z0)=c(apex,y1,z1)=a, crossed pairs b
  int base_color;
};

using TriCert = std::variant<TriApexPartitionCert, TriBasePartitionCert, TriTwoApexCert,
                             TriUniqueEdgeCert, TriFiveVertexCert>;

struct VerifyResult {
  bool ok;
  std::string reason;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline VerifyResult fail(std::string reason) { return {false, std::move(reason)}; }
inline VerifyResult pass() { return {true, {}}; }

inline bool valid_vertex(const HostGraph& h, Vertex v) {
  return v >= 0 && v < h.vertex_count();
}

inline bool valid_edge(const HostGraph& h, const Edge& e) {
  return valid_vertex(h, e[0]) && valid_vertex(h, e[2]) && h.is_edge(e[0], e[1], e[2]);
}

}  // namespace detail

inline VerifyResult verify_certificate(const Coloring& c, const TightPartitionCert& cert) {
  using detail::fail;
  const auto& h = c.host();
  if (h.kind() != HostKind::Complete) return fail("host is not complete");
  if (cert.parts.size() < 2) return fail("certificate needs at least two parts");

  std::vector<int> part_of(h.vertex_count(), -1);
  std::set<int> colors{cert.base_color};
  for (size_t i = 0; i < cert.parts.size(); ++i) {
    const auto& part = cert.parts[i];
    if (part.color == cert.base_color) return fail("part color equals the base color");
    if (!colors.insert(part.color).second) return fail("part colors repeat");
    if (part.vertices.empty()) return fail("empty part");
    for (Vertex v : part.vertices) {
      if (!detail::valid_vertex(h, v)) return fail("part vertex out of range");
      if (part_of[v] != -1) return fail("parts overlap");
      part_of[v] = static_cast<int>(i);
    }
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (part_of[v] == -1) return fail("parts do not cover every vertex");

  std::set<int> present(c.colors().begin(), c.colors().end());
  if (present != colors) return fail("base and part colors do not match the palette");

  std::vector<bool> internal_color_seen(cert.parts.size(), false);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    int p0 = part_of[ed[0]], p1 = part_of[ed[1]], p2 = part_of[ed[2]];
    int col = c.colors()[e];
    if (p0 == p1 && p1 == p2) {
      if (col != cert.base_color && col != cert.parts[p0].color)
        return fail("internal edge off its part color");
      if (col == cert.parts[p0].color) internal_color_seen[p0] = true;
    } else if (col != cert.base_color) {
      return fail("crossing edge off the base color");
    }
  }
  for (size_t i = 0; i < cert.parts.size(); ++i)
    if (!internal_color_seen[i]) return fail("part color never used inside its part");
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const MonoMinusVertexCert& cert) {
  const auto& h = c.host();
  if (!detail::valid_vertex(h, cert.apex)) return detail::fail("apex out of range");
  for (EdgeId e = 0; e < h.edge_count(); ++e)
    if (!h.edge_unrank(e).contains(cert.apex) && c.colors()[e] != cert.mono_color)
      return detail::fail("edge avoiding the apex is off the claimed color");
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const SpecialEdgeCert& cert) {
  const auto& h = c.host();
  if (!detail::valid_edge(h, cert.edge)) return detail::fail("special edge is not a host edge");
  EdgeId id = h.edge_rank(cert.edge);
  if (c.colors()[id] == cert.base_color)
    return detail::fail("special edge carries the base color");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (e == id || c.colors()[e] == cert.base_color) continue;
    if (h.edge_unrank(e).intersection_size(cert.edge) != 2)
      return detail::fail("off-base edge does not meet the special edge in two vertices");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const LooseCert& cert) {
  return std::visit([&](const auto& x) { return verify_certificate(c, x); }, cert);
}

inline VerifyResult verify_certificate(const Coloring& c, const TwoApexCert& cert) {
  const auto& h = c.host();
  if (!detail::valid_vertex(h, cert.u) || !detail::valid_vertex(h, cert.v) ||
      cert.u == cert.v)
    return detail::fail("apex pair invalid");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (c.colors()[e] == cert.base_color) continue;
    Edge ed = h.edge_unrank(e);
    if (!ed.contains(cert.u) || !ed.contains(cert.v))
      return detail::fail("off-base edge misses the apex pair");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const NearMonoCert& cert) {
  const auto& h = c.host();
  if (!detail::valid_vertex(h, cert.apex)) return detail::fail("apex out of range");
  int palette = c.palette_size();
  if (palette < 3 || palette > 5) return detail::fail("palette outside 3..5");
  std::optional<EdgeId> exc;
  if (cert.exceptional) {
    if (!detail::valid_edge(h, *cert.exceptional))
      return detail::fail("exceptional edge is not a host edge");
    if (cert.exceptional->contains(cert.apex))
      return detail::fail("exceptional edge touches the apex");
    exc = h.edge_rank(*cert.exceptional);
  }
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (exc && e == *exc) continue;
    if (!h.edge_unrank(e).contains(cert.apex) && c.colors()[e] != cert.mono_color)
      return detail::fail("second edge avoiding the apex is off the claimed color");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const SpecialEdgeThreeCert& cert) {
  if (c.palette_size() != 3) return detail::fail("palette is not exactly 3");
  return verify_certificate(c, SpecialEdgeCert{cert.edge, cert.base_color});
}

inline VerifyResult verify_certificate(const Coloring& c, const LoosePlusCert& cert) {
  return std::visit([&](const auto& x) { return verify_certificate(c, x); }, cert);
}

inline VerifyResult verify_certificate(const Coloring& c, const TwoColorsCert&) {
  if (c.palette_size() > 2) return detail::fail("palette exceeds two colors");
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const RainbowWitnessCert& cert) {
  const auto& h = c.host();
  std::set<Vertex> distinct(cert.vertices.begin(), cert.vertices.end());
  if (distinct.size() != 6) return detail::fail("witness vertices repeat");
  for (Vertex v : cert.vertices)
    if (!detail::valid_vertex(h, v)) return detail::fail("witness vertex out of range");
  auto m = Pattern::from_catalog(PatternId::MessyPath);
  std::set<int> cols;
  for (const auto& pe : m.edges()) {
    Vertex a = cert.vertices[pe[0]], b = cert.vertices[pe[1]], v = cert.vertices[pe[2]];
    if (!h.is_edge(a, b, v)) return detail::fail("witness maps an edge outside the host");
    cols.insert(c.colors()[h.edge_rank(Edge(a, b, v))]);
  }
  if (cols.size() != m.edges().size()) return detail::fail("witness edges repeat a color");
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const MessyCert& cert) {
  return std::visit([&](const auto& x) { return verify_certificate(c, x); }, cert);
}

inline VerifyResult verify_certificate(const Coloring& c, const TriApexPartitionCert& cert) {
  using detail::fail;
  const auto& h = c.host();
  if (h.kind() != HostKind::Tripartite) return fail("host is not tripartite");
  if (cert.part < 0 || cert.part > 2) return fail("part index out of range");
  std::map<Vertex, int> cls;  // vertex -> class color
  std::set<int> colors;
  for (const auto& k : cert.classes) {
    if (!colors.insert(k.color).second) return fail("class colors repeat");
    if (k.vertices.empty()) return fail("empty class");
    for (Vertex v : k.vertices) {
      if (!detail::valid_vertex(h, v) || h.part_of(v) != cert.part)
        return fail("class vertex outside the apex part");
      if (!cls.emplace(v, k.color).second) return fail("classes overlap");
    }
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (h.part_of(v) == cert.part && !cls.count(v))
      return fail("classes do not cover the apex part");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    for (int i = 0; i < 3; ++i)
      if (h.part_of(ed[i]) == cert.part && c.colors()[e] != cls[ed[i]])
        return fail("edge off its apex-class color");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const TriBasePartitionCert& cert) {
  using detail::fail;
  const auto& h = c.host();
  if (h.kind() != HostKind::Tripartite) return fail("host is not tripartite");
  if (cert.classes.size() < 2) return fail("certificate needs at least two classes");
  std::vector<int> cls(h.vertex_count(), -1);
  std::set<int> colors{cert.base_color};
  for (size_t i = 0; i < cert.classes.size(); ++i) {
    const auto& k = cert.classes[i];
    if (k.color == cert.base_color) return fail("class color equals the base color");
    if (!colors.insert(k.color).second) return fail("class colors repeat");
    for (int part = 0; part < 3; ++part) {
      if (k.vertices[part].empty()) return fail("class misses a part");
      for (Vertex v : k.vertices[part]) {
        if (!detail::valid_vertex(h, v) || h.part_of(v) != part)
          return fail("class vertex listed under the wrong part");
        if (cls[v] != -1) return fail("classes overlap");
        cls[v] = static_cast<int>(i);
      }
    }
  }
  for (Vertex v = 0; v < h.vertex_count(); ++v)
    if (cls[v] == -1) return fail("classes do not cover every vertex");

  std::set<int> present(c.colors().begin(), c.colors().end());
  if (present != colors) return fail("base and class colors do not match the palette");

  std::vector<bool> internal_color_seen(cert.classes.size(), false);
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    Edge ed = h.edge_unrank(e);
    int col = c.colors()[e];
    if (cls[ed[0]] == cls[ed[1]] && cls[ed[1]] == cls[ed[2]]) {
      int i = cls[ed[0]];
      if (col != cert.base_color && col != cert.classes[i].color)
        return fail("internal edge off its class color");
      if (col == cert.classes[i].color) internal_color_seen[i] = true;
    } else if (col != cert.base_color) {
      return fail("crossing edge off the base color");
    }
  }
  for (size_t i = 0; i < cert.classes.size(); ++i)
    if (!internal_color_seen[i]) return fail("class color never used inside its class");
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const TriTwoApexCert& cert) {
  const auto& h = c.host();
  if (h.kind() != HostKind::Tripartite) return detail::fail("host is not tripartite");
  if (!detail::valid_vertex(h, cert.x) || !detail::valid_vertex(h, cert.y) ||
      h.part_of(cert.x) == h.part_of(cert.y))
    return detail::fail("apex pair must span two parts");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (c.colors()[e] == cert.base_color) continue;
    Edge ed = h.edge_unrank(e);
    if (!ed.contains(cert.x) || !ed.contains(cert.y))
      return detail::fail("off-base edge misses the apex pair");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const TriUniqueEdgeCert& cert) {
  const auto& h = c.host();
  if (h.kind() != HostKind::Tripartite) return detail::fail("host is not tripartite");
  if (c.palette_size() != 3) return detail::fail("palette is not exactly 3");
  if (cert.unique_color == cert.constrained_color)
    return detail::fail("unique and constrained colors coincide");
  if (!detail::valid_edge(h, cert.edge)) return detail::fail("edge is not a host edge");
  EdgeId id = h.edge_rank(cert.edge);
  if (c.colors()[id] != cert.unique_color)
    return detail::fail("edge does not carry the unique color");
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    if (e != id && c.colors()[e] == cert.unique_color)
      return detail::fail("unique color repeats");
    if (c.colors()[e] == cert.constrained_color &&
        h.edge_unrank(e).intersection_size(cert.edge) != 2)
      return detail::fail("constrained edge does not meet the unique edge in two vertices");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const TriFiveVertexCert& cert) {
  using detail::fail;
  const auto& h = c.host();
  if (h.kind() != HostKind::Tripartite) return fail("host is not tripartite");
  if (c.palette_size() != 3) return fail("palette is not exactly 3");
  for (Vertex v : {cert.apex, cert.y[0], cert.y[1], cert.z[0], cert.z[1]})
    if (!detail::valid_vertex(h, v)) return fail("vertex out of range");
  int pa = h.part_of(cert.apex), py = h.part_of(cert.y[0]), pz = h.part_of(cert.z[0]);
  if (cert.y[0] == cert.y[1] || cert.z[0] == cert.z[1]) return fail("vertices repeat");
  if (h.part_of(cert.y[1]) != py || h.part_of(cert.z[1]) != pz || pa == py || pa == pz ||
      py == pz)
    return fail("vertices do not span the parts as claimed");
  if (cert.color_a == cert.color_b || cert.base_color == cert.color_a ||
      cert.base_color == cert.color_b)
    return fail("the three colors must differ");
  std::map<EdgeId, int> want;
  want[h.edge_rank(Edge(cert.apex, cert.y[0], cert.z[0]))] = cert.color_a;
  want[h.edge_rank(Edge(cert.apex, cert.y[1], cert.z[1]))] = cert.color_a;
  want[h.edge_rank(Edge(cert.apex, cert.y[0], cert.z[1]))] = cert.color_b;
  want[h.edge_rank(Edge(cert.apex, cert.y[1], cert.z[0]))] = cert.color_b;
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    auto it = want.find(e);
    int expect = it == want.end() ? cert.base_color : it->second;
    if (c.colors()[e] != expect) return fail("edge off the five-vertex pattern");
  }
  return detail::pass();
}

inline VerifyResult verify_certificate(const Coloring& c, const TriCert& cert) {
  return std::visit([&](const auto& x) { return verify_certificate(c, x); }, cert);
}

// --- JSON serialization -----------------------------------------------------

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json edge_json(const Edge& e) { return ordered_json{e[0], e[1], e[2]}; }

inline Edge edge_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_integer())
    throw Error(Error::Code::Parse, "certificate: expected an edge as [a, b, c]");
  return Edge(j[0].get<Vertex>(), j[1].get<Vertex>(), j[2].get<Vertex>());
}

inline const ordered_json& field(const ordered_json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end())
    throw Error(Error::Code::Parse, std::string("certificate: missing field '") + key + "'");
  return *it;
}

inline int int_field(const ordered_json& j, const char* key) {
  const auto& f = field(j, key);
  if (!f.is_number_integer())
    throw Error(Error::Code::Parse, std::string("certificate: field '") + key + "' must be an integer");
  return f.get<int>();
}

}  // namespace detail

inline ordered_json to_json(const TightPartitionCert& cert) {
  ordered_json parts = ordered_json::array();
  for (const auto& p : cert.parts)
    parts.push_back({{"color", p.color}, {"vertices", p.vertices}});
  return {{"case", "tight-partition"}, {"base_color", cert.base_color}, {"parts", parts}};
}

inline ordered_json to_json(const LooseCert& cert) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MonoMinusVertexCert>)
          return {{"case", "mono-minus-vertex"}, {"apex", x.apex}, {"mono_color", x.mono_color}};
        else
          return {{"case", "special-edge"},
                  {"edge", detail::edge_json(x.edge)},
                  {"base_color", x.base_color}};
      },
      cert);
}

inline ordered_json to_json(const LoosePlusCert& cert) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwoApexCert>) {
          return {{"case", "two-apex"}, {"u", x.u}, {"v", x.v}, {"base_color", x.base_color}};
        } else if constexpr (std::is_same_v<T, NearMonoCert>) {
          ordered_json exc;
          if (x.exceptional) exc = detail::edge_json(*x.exceptional);
          return {{"case", "near-mono-minus-vertex"},
                  {"apex", x.apex},
                  {"mono_color", x.mono_color},
                  {"exceptional_edge", exc}};
        } else {
          return {{"case", "special-edge-three-colors"},
                  {"edge", detail::edge_json(x.edge)},
                  {"base_color", x.base_color}};
        }
      },
      cert);
}

inline ordered_json to_json(const MessyCert& cert) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TwoColorsCert>)
          return {{"case", "two-colors"}};
        else
          return {{"case", "rainbow-witness"},
                  {"vertices", std::vector<Vertex>(x.vertices.begin(), x.vertices.end())}};
      },
      cert);
}

inline ordered_json to_json(const TriCert& cert) {
  return std::visit(
      [](const auto& x) -> ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TriApexPartitionCert>) {
          ordered_json classes = ordered_json::array();
          for (const auto& k : x.classes)
            classes.push_back({{"color", k.color}, {"vertices", k.vertices}});
          return {{"case", "apex-partition"}, {"part", x.part}, {"classes", classes}};
        } else if constexpr (std::is_same_v<T, TriBasePartitionCert>) {
          ordered_json classes = ordered_json::array();
          for (const auto& k : x.classes)
            classes.push_back({{"color", k.color},
                               {"vertices", {k.vertices[0], k.vertices[1], k.vertices[2]}}});
          return {{"case", "base-partition"},
                  {"base_color", x.base_color},
                  {"classes", classes}};
        } else if constexpr (std::is_same_v<T, TriTwoApexCert>) {
          return {{"case", "two-apex"}, {"x", x.x}, {"y", x.y}, {"base_color", x.base_color}};
        } else if constexpr (std::is_same_v<T, TriUniqueEdgeCert>) {
          return {{"case", "unique-edge"},
                  {"edge", detail::edge_json(x.edge)},
                  {"unique_color", x.unique_color},
                  {"constrained_color", x.constrained_color}};
        } else {
          return {{"case", "five-vertex"},
                  {"apex", x.apex},
                  {"y", {x.y[0], x.y[1]}},
                  {"z", {x.z[0], x.z[1]}},
                  {"color_a", x.color_a},
                  {"color_b", x.color_b},
                  {"base_color", x.base_color}};
        }
      },
      cert);
}

inline std::string certificate_case(const ordered_json& j) {
  const auto& c = detail::field(j, "case");
  if (!c.is_string()) throw Error(Error::Code::Parse, "certificate: 'case' must be a string");
  return c.get<std::string>();
}

inline TightPartitionCert tight_cert_from_json(const ordered_json& j) {
  if (certificate_case(j) != "tight-partition")
    throw Error(Error::Code::Parse, "certificate: not a tight-partition certificate");
  TightPartitionCert cert;
  cert.base_color = detail::int_field(j, "base_color");
  for (const auto& p : detail::field(j, "parts")) {
    TightPartitionCert::Part part;
    part.color = detail::int_field(p, "color");
    for (const auto& v : detail::field(p, "vertices")) part.vertices.push_back(v.get<Vertex>());
    cert.parts.push_back(std::move(part));
  }
  return cert;
}

inline LooseCert loose_cert_from_json(const ordered_json& j) {
  auto c = certificate_case(j);
  if (c == "mono-minus-vertex")
    return MonoMinusVertexCert{detail::int_field(j, "apex"), detail::int_field(j, "mono_color")};
  if (c == "special-edge")
    return SpecialEdgeCert{detail::edge_from_json(detail::field(j, "edge")),
                           detail::int_field(j, "base_color")};
  throw Error(Error::Code::Parse, "certificate: unknown loose case '" + c + "'");
}

inline LoosePlusCert loose_plus_cert_from_json(const ordered_json& j) {
  auto c = certificate_case(j);
  if (c == "two-apex")
    return TwoApexCert{detail::int_field(j, "u"), detail::int_field(j, "v"),
                       detail::int_field(j, "base_color")};
  if (c == "near-mono-minus-vertex") {
    NearMonoCert cert{detail::int_field(j, "apex"), detail::int_field(j, "mono_color"), {}};
    const auto& exc = detail::field(j, "exceptional_edge");
    if (!exc.is_null()) cert.exceptional = detail::edge_from_json(exc);
    return cert;
  }
  if (c == "special-edge-three-colors")
    return SpecialEdgeThreeCert{detail::edge_from_json(detail::field(j, "edge")),
                                detail::int_field(j, "base_color")};
  throw Error(Error::Code::Parse, "certificate: unknown loose-plus case '" + c + "'");
}

inline MessyCert messy_cert_from_json(const ordered_json& j) {
  auto c = certificate_case(j);
  if (c == "two-colors") return TwoColorsCert{};
  if (c == "rainbow-witness") {
    const auto& vs = detail::field(j, "vertices");
    if (!vs.is_array() || vs.size() != 6)
      throw Error(Error::Code::Parse, "certificate: witness needs six vertices");
    RainbowWitnessCert cert{};
    for (int i = 0; i < 6; ++i) cert.vertices[i] = vs[i].get<Vertex>();
    return cert;
  }
  throw Error(Error::Code::Parse, "certificate: unknown messy case '" + c + "'");
}

inline TriCert tri_cert_from_json(const ordered_json& j) {
  auto c = certificate_case(j);
  if (c == "apex-partition") {
    TriApexPartitionCert cert;
    cert.part = detail::int_field(j, "part");
    for (const auto& k : detail::field(j, "classes")) {
      TriApexPartitionCert::Class cls;
      cls.color = detail::int_field(k, "color");
      for (const auto& v : detail::field(k, "vertices")) cls.vertices.push_back(v.get<Vertex>());
      cert.classes.push_back(std::move(cls));
    }
    return cert;
  }
  if (c == "base-partition") {
    TriBasePartitionCert cert;
    cert.base_color = detail::int_field(j, "base_color");
    for (const auto& k : detail::field(j, "classes")) {
      TriBasePartitionCert::Class cls;
      cls.color = detail::int_field(k, "color");
      const auto& sides = detail::field(k, "vertices");
      if (!sides.is_array() || sides.size() != 3)
        throw Error(Error::Code::Parse, "certificate: class needs three vertex lists");
      for (int part = 0; part < 3; ++part)
        for (const auto& v : sides[part]) cls.vertices[part].push_back(v.get<Vertex>());
      cert.classes.push_back(std::move(cls));
    }
    return cert;
  }
  if (c == "two-apex")
    return TriTwoApexCert{detail::int_field(j, "x"), detail::int_field(j, "y"),
                          detail::int_field(j, "base_color")};
  if (c == "unique-edge")
    return TriUniqueEdgeCert{detail::edge_from_json(detail::field(j, "edge")),
                             detail::int_field(j, "unique_color"),
                             detail::int_field(j, "constrained_color")};
  if (c == "five-vertex") {
    const auto& y = detail::field(j, "y");
    const auto& z = detail::field(j, "z");
    if (!y.is_array() || y.size() != 2 || !z.is_array() || z.size() != 2)
      throw Error(Error::Code::Parse, "certificate: five-vertex case needs y and z pairs");
    return TriFiveVertexCert{detail::int_field(j, "apex"),
                             {y[0].get<Vertex>(), y[1].get<Vertex>()},
                             {z[0].get<Vertex>(), z[1].get<Vertex>()},
                             detail::int_field(j, "color_a"),
                             detail::int_field(j, "color_b"),
                             detail::int_field(j, "base_color")};
  }
  throw Error(Error::Code::Parse, "certificate: unknown tripartite case '" + c + "'");
}

}  // namespace rhl
