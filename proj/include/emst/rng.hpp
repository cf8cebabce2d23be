#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "emst/geom.hpp"
#include "emst/memmodel.hpp"

namespace emst {

inline constexpr std::size_t kMaxDegree = 6;

// The relative-neighborhood-graph neighbors of one site.
struct NeighborSet {
  SiteId owner = 0;
  std::uint32_t count = 0;
  std::array<SiteId, kMaxDegree> ids{};

  std::span<const SiteId> neighbors() const { return {ids.data(), count}; }
};
inline constexpr std::size_t kNeighborSetWords = 2 + kMaxDegree;

using NeighborBatch = WsBuffer<NeighborSet>;

// Binary search over a batch sorted by owner; nullptr when absent.
const NeighborSet* find_owner(const NeighborBatch& batch, SiteId owner);

// A run of consecutive edges e_i, ..., e_{i+k-1} of the length-sorted RNG
// edge sequence (ranks are 1-based).
struct EdgeBatch {
  WsBuffer<EdgeKey> edges;
  std::size_t start_rank = 0;

  bool empty() const { return edges.empty(); }
  std::size_t size() const { return edges.size(); }
  const EdgeKey& front() const { return edges.front(); }
  const EdgeKey& back() const { return edges.back(); }
};

// Full-memory reference: every pair with an empty lens, sorted by edge_less.
// O(n^3); test and verification use only.
std::vector<EdgeKey> rng_oracle(const PointSet& ps);

// RNG(V) neighbors of every site in q (deduplicated; |q| <= s), returned
// sorted by owner. Streams V in chunks of s sites, keeping at most six
// candidates per query site, then confirms the survivors with a second pass.
// Throws std::invalid_argument when |q| > s.
NeighborBatch batch_neighbors(RunContext& ctx, std::span<const SiteId> q);

// The (up to) s smallest RNG edges strictly after prev, in increasing order.
// Throws InvariantViolation when prev is not an RNG edge.
EdgeBatch next_edge_batch(RunContext& ctx, std::optional<EdgeKey> prev);

}  // namespace emst
