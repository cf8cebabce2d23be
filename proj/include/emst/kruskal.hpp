#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "emst/aux_graph.hpp"
#include "emst/memmodel.hpp"
#include "emst/rng.hpp"
#include "emst/snet.hpp"
#include "emst/walk.hpp"

namespace emst {

// Disjoint-set forest with path compression and union by rank.
class UnionFind {
 public:
  UnionFind(WorkspaceMeter& meter, std::size_t n);

  std::size_t find(std::size_t x);
  // False when x and y were already in the same set.
  bool unite(std::size_t x, std::size_t y);

 private:
  WsBuffer<std::uint32_t> parent_;
  WsBuffer<std::uint8_t> rank_;
};

// Write-once output stream for EMST edges.
using EmitFn = std::function<void(const EdgeKey&)>;

// Full-memory Kruskal over all pairs; the n - 1 EMST edges in order.
std::vector<EdgeKey> emst_oracle(const PointSet& ps);

// Batches of s RNG edges; edge e_j is accepted iff a walk from its successor
// in RNG_j around the face comes back to its predecessor without meeting the
// other endpoint.
void emst_simple(RunContext& ctx, const EmitFn& emit);

inline constexpr std::int32_t kNoSuccessor = -1;

// F: the old net plus the successors (in RNG_i) of every batch edge at both
// endpoints, sorted and deduplicated. successor_of[j] holds the F index of
// the successor at e_j.u and e_j.v, or kNoSuccessor.
struct FSet {
  WsBuffer<HalfEdge> edges;
  WsBuffer<std::array<std::int32_t, 2>> successor_of;

  bool contains(const HalfEdge& h) const;
  std::int32_t index_of(const HalfEdge& h) const;
};

// Capacity of F for a given s: the net bound plus two successors per batch edge.
inline std::size_t f_capacity(std::size_t s) { return SNet::capacity_for(s) + 2 * s; }

FSet build_f_set(RunContext& ctx, const SNet& net, const EdgeBatch& batch, const GraphView& gv);

// One walk per F member along its face-cycle up to the next F member; each
// walk becomes a compressed dart labeled with the half-edges it skipped.
// Throws InvariantViolation when a walk exceeds 2 floor(n/s) + kGapSlack steps.
AuxGraph run_walks_and_build_h(RunContext& ctx, const FSet& f, const GraphView& gv);

// Kruskal on the auxiliary graph: inserts the batch edges in order, emits
// those joining two components, and splices each into the face permutation.
void process_batch(RunContext& ctx, AuxGraph& h, const FSet& f, const EdgeBatch& batch, const EmitFn& emit);

// Observation point after each net rebuild.
struct BatchBoundary {
  const EdgeBatch& batch;
  const SNet& net;       // net for the graph through batch.back()
  const AuxGraph& h;     // with the batch edges inserted
  GraphView gv_next;
  std::size_t f_size;
  std::uint64_t walk_steps_in_h;  // face steps spent building h
};
using BoundaryHook = std::function<void(const BatchBoundary&)>;

// The s-net driven algorithm: per batch, build F, walk, build H, run Kruskal
// on H, rebuild the net.
void emst_main(RunContext& ctx, const EmitFn& emit, const BoundaryHook& on_boundary = {});

}  // namespace emst
