#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "emst/geom.hpp"
#include "emst/walk.hpp"

namespace emst {

// Full-memory half-edge structure of a plane straight-line graph, with
// rotations ordered by atan2. Serves as the reference for face traversal;
// deliberately shares no code with the limited-workspace walk.
class PlaneHalfEdges {
 public:
  PlaneHalfEdges(std::span<const Site> sites, std::span<const EdgeKey> edges);

  std::size_t size() const { return half_edges_.size(); }
  const HalfEdge& half_edge(std::size_t id) const { return half_edges_[id]; }
  std::optional<std::size_t> id_of(const HalfEdge& h) const;

  // Successor of a half-edge on its face-cycle.
  std::size_t next(std::size_t id) const { return next_[id]; }

  // Orbits of next(), each listed from its smallest id.
  std::vector<std::vector<std::size_t>> faces() const;

  // Connected components among vertices with at least one edge.
  std::size_t nontrivial_components() const;

 private:
  std::vector<HalfEdge> half_edges_;  // sorted by (tail, head)
  std::vector<std::size_t> next_;
};

}  // namespace emst
