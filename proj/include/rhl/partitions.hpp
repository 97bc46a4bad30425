#pragma once

#include <functional>

#include "rhl/coloring.hpp"

namespace rhl {

// Visits every color partition of the host's edge set exactly once, as
// canonical restricted-growth colorings in EdgeId order (edge 0 always gets
// color 0, each later edge reuses an earlier color or opens the next one).
// The count is the Bell number of the edge count, so hosts with more than 12
// edges are rejected.
inline void enumerate_color_partitions(const HostGraph& host,
                                       const std::function<void(const Coloring&)>& fn) {
  EdgeId m = host.edge_count();
  if (m > 12) throw Error(Error::Code::TooLarge, "partition enumeration is capped at 12 edges");
  std::vector<int> rgs(m, 0);
  auto rec = [&](auto&& self, EdgeId pos, int used) -> void {
    if (pos == m) {
      fn(Coloring(host, rgs));
      return;
    }
    for (int c = 0; c <= used; ++c) {
      rgs[pos] = c;
      self(self, pos + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
}

}  // namespace rhl
