#pragma once

#include <chrono>
#include <cmath>
#include <limits>

#include "rhl/copies.hpp"

namespace rhl {

struct SearchBudget {
  uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
  double max_seconds = std::numeric_limits<double>::infinity();
};

enum class SearchStatus { Proved, Inconclusive };

// Result of maximizing the number of color classes subject to having no
// rainbow copy of a pattern. `Proved` means the search space was exhausted
// and `max_colors` is exact; `Inconclusive` means the budget ran out and
// `max_colors` is only a lower bound. The witness (when any rainbow-free
// coloring exists) attains `max_colors` classes.
struct MaxColorsResult {
  SearchStatus status;
  int max_colors;
  std::optional<Coloring> witness;
  uint64_t nodes;
};

// Result of searching for a 2-coloring without a monochromatic copy.
// `arrows` is the Ramsey-style verdict: true means every 2-coloring has a
// monochromatic copy (no witness exists).
struct Ramsey2Result {
  SearchStatus status;
  bool arrows;
  std::optional<Coloring> witness;
  uint64_t nodes;
};

namespace search_detail {

// Copies rewritten from edge ids to search positions, with by-position
// indexes for the two events the search reacts to: a copy's last edge being
// colored (rainbow check) and its second-to-last edge being colored (the
// last position may stop accepting fresh colors).
struct PreppedCopies {
  std::vector<std::vector<int>> positions;  // per copy, ascending
  std::vector<std::vector<int>> by_last;
  std::vector<std::vector<int>> by_second;
  std::vector<int> single_edge_last;  // one-edge copies block their position outright
};

// Orders edges so that copies close as early as possible: repeatedly take
// the edge completing the most copies, breaking ties by how many copies it
// brings within one (then two) edges of closing, then by lowest EdgeId. The
// plain EdgeId order leaves long constraint-free prefixes (early edges span
// too few vertices to contain any copy), which makes canonical enumeration
// blow up; this order lets the rainbow checks and bounds engage immediately.
inline std::vector<EdgeId> constraint_dense_order(const HostGraph& host,
                                                  const CopyTable& copies) {
  EdgeId m = host.edge_count();
  std::vector<std::vector<int>> copies_of_edge(m);
  for (size_t i = 0; i < copies.copies().size(); ++i)
    for (EdgeId e : copies.copies()[i].edge_images)
      copies_of_edge[e].push_back(static_cast<int>(i));
  std::vector<int> missing(copies.copies().size());
  for (size_t i = 0; i < missing.size(); ++i)
    missing[i] = static_cast<int>(copies.copies()[i].edge_images.size());

  std::vector<EdgeId> order;
  std::vector<bool> taken(m, false);
  order.reserve(m);
  for (EdgeId step = 0; step < m; ++step) {
    EdgeId pick = 0;
    std::array<long, 3> best{-1, -1, -1};
    for (EdgeId e = 0; e < m; ++e) {
      if (taken[e]) continue;
      std::array<long, 3> gain{0, 0, 0};
      for (int ci : copies_of_edge[e])
        if (missing[ci] >= 1 && missing[ci] <= 3) gain[missing[ci] - 1]++;
      if (gain > best) {
        best = gain;
        pick = e;
      }
    }
    taken[pick] = true;
    order.push_back(pick);
    for (int ci : copies_of_edge[pick]) missing[ci]--;
  }
  return order;
}

inline PreppedCopies prep_copies(const CopyTable& copies, const std::vector<EdgeId>& order) {
  EdgeId m = static_cast<EdgeId>(order.size());
  std::vector<int> pos_of(m);
  for (EdgeId k = 0; k < m; ++k) pos_of[order[k]] = static_cast<int>(k);
  PreppedCopies prep;
  prep.by_last.resize(m);
  prep.by_second.resize(m);
  for (const auto& emb : copies.copies()) {
    std::vector<int> ps;
    ps.reserve(emb.edge_images.size());
    for (EdgeId e : emb.edge_images) ps.push_back(pos_of[e]);
    std::sort(ps.begin(), ps.end());
    int idx = static_cast<int>(prep.positions.size());
    if (ps.size() == 1) {
      prep.single_edge_last.push_back(ps.back());
    } else {
      prep.by_last[ps.back()].push_back(idx);
      prep.by_second[ps[ps.size() - 2]].push_back(idx);
    }
    prep.positions.push_back(std::move(ps));
  }
  return prep;
}

class DeadlineClock {
 public:
  explicit DeadlineClock(const SearchBudget& budget)
      : max_nodes_(budget.max_nodes), start_(std::chrono::steady_clock::now()) {
    if (std::isfinite(budget.max_seconds))
      deadline_ = start_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(budget.max_seconds));
  }

  // Cheap enough to consult every node: the clock is only read every 4096th.
  bool exhausted(uint64_t nodes) {
    if (nodes > max_nodes_) return true;
    if (deadline_ && (nodes & 4095) == 0 &&
        std::chrono::steady_clock::now() > *deadline_)
      expired_ = true;
    return expired_;
  }

 private:
  uint64_t max_nodes_;
  std::chrono::steady_clock::time_point start_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  bool expired_ = false;
};

struct MaxColorsSearch {
  const HostGraph& host;
  const PreppedCopies& prep;
  std::vector<EdgeId> order;
  EdgeId m;
  DeadlineClock clock;

  std::vector<int> rgs;           // color per position
  std::vector<int> blocked;       // per position: copies forcing "no fresh color here"
  std::vector<std::vector<int>> trail_pool;  // per depth, reused across siblings
  int best = 0;
  std::vector<int> best_rgs;
  uint64_t nodes = 0;
  bool out_of_budget = false;

  MaxColorsSearch(const HostGraph& h, const PreppedCopies& p, std::vector<EdgeId> ord,
                  const SearchBudget& budget)
      : host(h), prep(p), order(std::move(ord)), m(h.edge_count()), clock(budget),
        rgs(m, -1), blocked(m, 0), trail_pool(m) {
    for (int p1 : prep.single_edge_last) blocked[p1]++;
  }

  // True when coloring position `pos` with `col` completes an all-distinct
  // copy. Only closed copies need checking, and only for reused colors: a
  // fresh color can complete one exactly when `pos` is blocked.
  bool completes_rainbow(int pos, int col) const {
    for (int ci : prep.by_last[pos]) {
      const auto& ps = prep.positions[ci];
      bool distinct = true;
      for (size_t i = 0; i < ps.size() && distinct; ++i) {
        int a = ps[i] == pos ? col : rgs[ps[i]];
        for (size_t j = i + 1; j < ps.size() && distinct; ++j)
          distinct = a != (ps[j] == pos ? col : rgs[ps[j]]);
      }
      if (distinct) return true;
    }
    return false;
  }

  // Copies whose second-to-last position is `pos` may now pin their last
  // position: once the other edges carry pairwise-distinct colors, any fresh
  // color there would finish a rainbow copy, forever in this subtree.
  void block_completions(int pos, int ahead, std::vector<int>& trail, int& ahead_out) {
    ahead_out = ahead;
    for (int ci : prep.by_second[pos]) {
      const auto& ps = prep.positions[ci];
      bool distinct = true;
      for (size_t i = 0; i + 1 < ps.size() && distinct; ++i)
        for (size_t j = i + 1; j + 1 < ps.size() && distinct; ++j)
          distinct = rgs[ps[i]] != rgs[ps[j]];
      if (!distinct) continue;
      int last = ps.back();
      if (blocked[last]++ == 0 && last > pos) ahead_out--;
      trail.push_back(last);
    }
  }

  void run(int pos, int used, int ahead) {
    if (clock.exhausted(++nodes)) {
      out_of_budget = true;
      return;
    }
    if (pos == static_cast<int>(m)) {
      if (used > best) {
        best = used;
        best_rgs = rgs;
      }
      return;
    }
    int openable = (blocked[pos] == 0 ? 1 : 0) + ahead;
    if (used + openable <= best) return;

    bool check_rainbow = used >= 2;  // no copy closes all-distinct with fewer classes
    for (int col = 0; col <= used; ++col) {
      bool fresh = col == used;
      if (fresh && blocked[pos] > 0) continue;
      if (!fresh && check_rainbow && completes_rainbow(pos, col)) continue;
      rgs[pos] = col;
      auto& trail = trail_pool[pos];
      trail.clear();
      int child_ahead;
      block_completions(pos, ahead, trail, child_ahead);
      if (pos + 1 < static_cast<int>(m) && blocked[pos + 1] == 0) child_ahead--;
      run(pos + 1, used + (fresh ? 1 : 0), child_ahead);
      for (int p1 : trail) --blocked[p1];
      rgs[pos] = -1;
      if (out_of_budget) return;
    }
  }
};

}  // namespace search_detail

// Maximum number of color classes over all colorings of `host` with no
// rainbow copy of `pattern`, by branch-and-bound over canonical colorings
// (first edge in class 0, every later edge reusing a class or opening the
// next). Deterministic for fixed inputs.
inline MaxColorsResult max_rainbow_free_colors(const HostGraph& host, const Pattern& pattern,
                                               const SearchBudget& budget = {}) {
  using namespace search_detail;
  const CopyTable& copies = CopyTable::cached(host, pattern);
  auto order = constraint_dense_order(host, copies);
  auto prep = prep_copies(copies, order);

  MaxColorsSearch search(host, prep, order, budget);
  int ahead0 = 0;
  for (EdgeId p = 1; p < host.edge_count(); ++p)
    if (search.blocked[p] == 0) ahead0++;
  search.run(0, 0, ahead0);

  MaxColorsResult result{search.out_of_budget ? SearchStatus::Inconclusive
                                              : SearchStatus::Proved,
                         search.best, std::nullopt, search.nodes};
  if (search.best > 0) {
    std::vector<int> colors(host.edge_count());
    for (EdgeId k = 0; k < host.edge_count(); ++k) colors[order[k]] = search.best_rgs[k];
    Coloring witness = Coloring(host, std::move(colors)).normalized();
    if (witness.palette_size() != search.best || !is_rainbow_free(witness, pattern))
      throw Error(Error::Code::BadParameters, "search produced an invalid witness");
    result.witness = std::move(witness);
  }
  return result;
}

// Anti-Ramsey value: one more color than the largest rainbow-free coloring.
// Inherits Inconclusive status (then the value is only a lower bound).
inline MaxColorsResult anti_ramsey(const HostGraph& host, const Pattern& pattern,
                                   const SearchBudget& budget = {}) {
  auto r = max_rainbow_free_colors(host, pattern, budget);
  r.max_colors += 1;
  return r;
}

namespace search_detail {

struct Ramsey2Search {
  const PreppedCopies& prep;
  EdgeId m;
  DeadlineClock clock;
  std::vector<int> rgs;
  uint64_t nodes = 0;
  bool out_of_budget = false;

  Ramsey2Search(EdgeId m_, const PreppedCopies& p, const SearchBudget& budget)
      : prep(p), m(m_), clock(budget), rgs(m_, -1) {}

  bool completes_mono(int pos, int col) const {
    for (int ci : prep.by_last[pos]) {
      const auto& ps = prep.positions[ci];
      bool mono = true;
      for (size_t i = 0; i + 1 < ps.size() && mono; ++i) mono = rgs[ps[i]] == col;
      if (mono) return true;
    }
    return false;
  }

  bool run(int pos) {
    if (clock.exhausted(++nodes)) {
      out_of_budget = true;
      return false;
    }
    if (pos == static_cast<int>(m)) return true;
    int limit = pos == 0 ? 0 : 1;  // color swap symmetry: first edge in class 0
    for (int col = 0; col <= limit; ++col) {
      if (!prep.single_edge_last.empty()) {
        // A one-edge pattern is monochromatic wherever it lands.
        bool hit = false;
        for (int p1 : prep.single_edge_last) hit |= p1 == pos;
        if (hit) continue;
      }
      if (completes_mono(pos, col)) continue;
      rgs[pos] = col;
      if (run(pos + 1)) return true;
      rgs[pos] = -1;
      if (out_of_budget) return false;
    }
    return false;
  }
};

}  // namespace search_detail

// Searches for a 2-coloring of the host without a monochromatic copy of the
// pattern. Exhausting the space proves the host "arrows" the pattern.
inline Ramsey2Result ramsey2_search(const HostGraph& host, const Pattern& pattern,
                                    const SearchBudget& budget = {}) {
  using namespace search_detail;
  const CopyTable& copies = CopyTable::cached(host, pattern);
  auto order = constraint_dense_order(host, copies);
  auto prep = prep_copies(copies, order);

  Ramsey2Search search(host.edge_count(), prep, budget);
  bool found = search.run(0);

  Ramsey2Result result{search.out_of_budget ? SearchStatus::Inconclusive
                                            : SearchStatus::Proved,
                       !found && !search.out_of_budget, std::nullopt, search.nodes};
  if (found) {
    std::vector<int> colors(host.edge_count());
    for (EdgeId k = 0; k < host.edge_count(); ++k) colors[order[k]] = search.rgs[k];
    Coloring witness = Coloring(host, std::move(colors)).normalized();
    if (find_monochromatic_copy(witness, pattern))
      throw Error(Error::Code::BadParameters, "search produced an invalid witness");
    result.witness = std::move(witness);
  }
  return result;
}

}  // namespace rhl
