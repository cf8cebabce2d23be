#pragma once

// Shared fixtures for the unit and acceptance tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "emst/faces.hpp"
#include "emst/io.hpp"
#include "emst/kruskal.hpp"
#include "emst/rng.hpp"

namespace emst::test {

inline std::vector<EdgeKey> edges_in(const std::vector<EdgeKey>& all, const GraphView& gv) {
  std::vector<EdgeKey> out;
  for (const EdgeKey& e : all) {
    if (gv.contains(e)) out.push_back(e);
  }
  return out;
}

// Plain union-find over site ids, independent of the workspace-metered one.
struct Components {
  std::vector<std::size_t> parent;
  explicit Components(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Everything the main loop sees for one batch, before Kruskal runs on H.
struct BatchStage {
  const EdgeBatch& batch;
  const SNet& old_net;
  const FSet& f;
  const AuxGraph& h;
  GraphView gv;
};

// The main loop spelled out step by step so tests can look between stages.
// Emits the same edges as emst_main.
inline std::vector<EdgeKey> drive_main(RunContext& ctx, const std::function<void(const BatchStage&)>& before_kruskal,
                                       const BoundaryHook& after_rebuild = {}) {
  std::vector<EdgeKey> out;
  SNet net(ctx.meter(), ctx.s(), ctx.spacing());
  std::optional<EdgeKey> prev;
  while (true) {
    EdgeBatch batch = next_edge_batch(ctx, prev);
    if (batch.empty()) break;
    const GraphView gv = GraphView::below(batch.front());
    FSet f = build_f_set(ctx, net, batch, gv);
    const std::uint64_t before = ctx.counters().walk_steps;
    AuxGraph h = run_walks_and_build_h(ctx, f, gv);
    const std::uint64_t steps = ctx.counters().walk_steps - before;
    if (before_kruskal) before_kruskal({batch, net, f, h, gv});
    net.release();
    process_batch(ctx, h, f, batch, [&](const EdgeKey& e) { out.push_back(e); });
    const GraphView gv_next = GraphView::through(batch.back());
    net = rebuild(ctx, h, gv_next);
    if (after_rebuild) after_rebuild({batch, net, h, gv_next, f.edges.size(), steps});
    prev = batch.back();
  }
  return out;
}

// Integer lattice side x side with unit spacing: ties everywhere.
inline std::vector<Vec2> exact_grid(int side) {
  std::vector<Vec2> pts;
  for (int y = 0; y < side; ++y) {
    for (int x = 0; x < side; ++x) pts.push_back({static_cast<double>(x), static_cast<double>(y)});
  }
  return pts;
}

}  // namespace emst::test
