// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. The copy-count cross-check below enumerates embeddings from
// scratch so the library's pattern machinery is not grading itself.

#include <cstdio>
#include <set>
#include <vector>

#include "rhl/acceptance.hpp"

namespace {

int brute_force_copies(const rhl::HostGraph& host, const rhl::Pattern& pattern) {
  int n = host.vertex_count();
  int k = pattern.vertex_count();
  std::vector<int> image(k, -1);
  std::vector<bool> used(n, false);
  std::set<std::set<rhl::EdgeId>> seen;

  auto edges_ok = [&](int placed) {
    for (const auto& e : pattern.edges()) {
      if (e[0] >= placed || e[1] >= placed || e[2] >= placed) continue;
      if (!host.is_edge(image[e[0]], image[e[1]], image[e[2]])) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      std::set<rhl::EdgeId> ids;
      for (const auto& e : pattern.edges())
        ids.insert(host.edge_rank(rhl::Edge(image[e[0]], image[e[1]], image[e[2]])));
      seen.insert(std::move(ids));
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      image[depth] = v;
      used[v] = true;
      if (edges_ok(depth + 1)) self(self, depth + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
  return static_cast<int>(seen.size());
}

}  // namespace

int main() {
  auto results = rhl::acceptance::run_all(brute_force_copies);
  int failed = 0;
  for (const auto& r : results) {
    std::printf("CRITERION %2d %s %-22s (%.2fs)%s%s\n", r.id, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds, r.unproven ? " [sampled-fallback]" : "",
                r.detail.c_str());
    std::fflush(stdout);
    if (!r.pass) ++failed;
  }
  std::printf("ACCEPTANCE %s (%d/11)\n", failed == 0 ? "PASS" : "FAIL",
              11 - failed);
  return failed == 0 ? 0 : 1;
}
