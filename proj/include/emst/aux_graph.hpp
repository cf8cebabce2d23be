#pragma once

#include <cstddef>
#include <cstdint>

#include "emst/memmodel.hpp"
#include "emst/walk.hpp"

namespace emst {

enum class DartKind : std::uint8_t { f_edge, compressed, batch };

// One directed element of a compressed face-cycle. F-edges and batch edges
// are real half-edges of length 1; a compressed dart stands for the `length`
// half-edges a walk passed between two F-edges.
struct Dart {
  HalfEdge he;                // compressed: head of its F-edge -> tail of the F-edge it reached
  std::uint32_t length = 1;
  std::uint32_t next = 0;
  std::uint32_t prev = 0;
  std::uint32_t origin = 0;   // compressed: id of the F-edge it follows
  DartKind kind = DartKind::f_edge;
};
inline constexpr std::size_t kDartWords = kHalfEdgeWords + 4;

// The auxiliary graph of one batch. Darts [0, f) are the F-edges, dart f + k
// is the compressed edge that follows F-edge k, and batch edges are appended
// in pairs (u -> v, v -> u) as they are inserted. next/prev form the face
// permutation; vertices are kept sorted for component bookkeeping.
struct AuxGraph {
  AuxGraph(WorkspaceMeter& meter, std::size_t f_capacity, std::size_t s)
      : darts(meter, 2 * f_capacity + 2 * s, kDartWords),
        vertices(meter, 2 * f_capacity + 2 * s, kIndexWords) {}

  WsBuffer<Dart> darts;
  WsBuffer<SiteId> vertices;
  std::size_t f_count = 0;

  std::size_t vertex_index(SiteId v) const;
};

}  // namespace emst
