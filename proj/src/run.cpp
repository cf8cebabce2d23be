#include "emst/run.hpp"

#include <optional>
#include <string>

namespace emst {

Algo parse_algo(std::string_view name) {
  if (name == "net") return Algo::net;
  if (name == "simple") return Algo::simple;
  throw InputError("unknown algorithm '" + std::string(name) + "'");
}

RunOutput run_emst(const PointSet& ps, std::size_t s, Algo algo, MeterOptions opts, const BoundaryHook& on_boundary,
                   const EmitFn& on_edge) {
  RunContext ctx(ps, s, opts);
  RunOutput out;
  const EmitFn emit = [&](const EdgeKey& e) {
    out.edges.push_back(e);
    if (on_edge) on_edge(e);
  };
  if (algo == Algo::net) {
    emst_main(ctx, emit, on_boundary);
  } else {
    emst_simple(ctx, emit);
  }
  const CostCounters& c = ctx.counters();
  out.metrics = {ps.size(), s, c.site_reads, c.walk_steps, c.batches, c.net_rebuilds,
                 ctx.meter().peak_words(), out.edges.size()};
  out.diagnostics = ctx.diagnostics();
  return out;
}

std::vector<EdgeKey> enumerate_rng(const PointSet& ps, std::size_t s, MeterOptions opts) {
  RunContext ctx(ps, s, opts);
  std::vector<EdgeKey> edges;
  std::optional<EdgeKey> prev;
  while (true) {
    const EdgeBatch batch = next_edge_batch(ctx, prev);
    if (batch.empty()) break;
    edges.insert(edges.end(), batch.edges.begin(), batch.edges.end());
    prev = batch.back();
  }
  return edges;
}

}  // namespace emst
