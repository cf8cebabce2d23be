#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "emst/kruskal.hpp"

namespace emst {

enum class Algo { net, simple };

// Throws InputError on anything but "net" or "simple".
Algo parse_algo(std::string_view name);

struct RunMetrics {
  std::size_t n = 0;
  std::size_t s = 0;
  std::uint64_t site_reads = 0;
  std::uint64_t walk_steps = 0;
  std::uint64_t batches = 0;
  std::uint64_t net_rebuilds = 0;
  std::size_t peak_words = 0;
  std::size_t edges_emitted = 0;
};

struct RunOutput {
  std::vector<EdgeKey> edges;
  RunMetrics metrics;
  RunDiagnostics diagnostics;
};

// One complete run. The hook only fires for Algo::net. `on_edge`, when set,
// sees every edge as it is emitted (before the run finishes).
RunOutput run_emst(const PointSet& ps, std::size_t s, Algo algo, MeterOptions opts = {},
                   const BoundaryHook& on_boundary = {}, const EmitFn& on_edge = {});

// All RNG edges in order, produced batch by batch with workspace s.
std::vector<EdgeKey> enumerate_rng(const PointSet& ps, std::size_t s, MeterOptions opts = {});

}  // namespace emst
