#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "emst/geom.hpp"
#include "emst/memmodel.hpp"
#include "emst/rng.hpp"

namespace emst {

// Directed copy of an RNG edge; its face lies to the left.
struct HalfEdge {
  SiteId tail = 0;
  SiteId head = 0;

  HalfEdge reversed() const { return {head, tail}; }
  friend auto operator<=>(const HalfEdge&, const HalfEdge&) = default;
};

// The implicit prefix graph RNG_i: every RNG edge that passes the threshold.
// Nothing is materialized; incident edges are recomputed on demand.
class GraphView {
 public:
  enum class Bound { below, through, all };

  // Edges strictly before e (the usual RNG_i with e = e_i).
  static GraphView below(const EdgeKey& e) { return {e, Bound::below}; }
  // Edges up to and including e.
  static GraphView through(const EdgeKey& e) { return {e, Bound::through}; }
  static GraphView all() { return {EdgeKey{}, Bound::all}; }

  bool contains(const EdgeKey& e) const {
    switch (bound_) {
      case Bound::below: return edge_less(e, limit_);
      case Bound::through: return !edge_less(limit_, e);
      case Bound::all: return true;
    }
    return false;
  }

  const EdgeKey& limit() const { return limit_; }
  Bound bound() const { return bound_; }

 private:
  GraphView(EdgeKey limit, Bound bound) : limit_(limit), bound_(bound) {}
  EdgeKey limit_;
  Bound bound_;
};
inline constexpr std::size_t kGraphViewWords = kEdgeWords + 1;

// Half-edges w -> v of the view, given w's RNG(V) neighbor set.
std::vector<HalfEdge> incident_below(RunContext& ctx, const GraphView& gv, const NeighborSet& w_nbrs);
std::vector<HalfEdge> incident_below(RunContext& ctx, const GraphView& gv, SiteId w);

// Next half-edge on f's face-cycle: the edge out of head(f) with the smallest
// clockwise angle from f reversed; f reversed itself ranks last (full turn).
// Throws InvariantViolation when f is not a half-edge of the view.
HalfEdge face_step(RunContext& ctx, const GraphView& gv, const HalfEdge& f, const NeighborSet& head_nbrs);
HalfEdge face_step(RunContext& ctx, const GraphView& gv, const HalfEdge& f);

// First half-edge out of w met sweeping clockwise from e around w, and first
// half-edge into w met sweeping counterclockwise. e itself never counts.
// Empty when w has no incident edge in the view. Throws std::invalid_argument
// when w is not an endpoint of e.
std::optional<HalfEdge> successor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w,
                                  const NeighborSet& w_nbrs);
std::optional<HalfEdge> predecessor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w,
                                    const NeighborSet& w_nbrs);
std::optional<HalfEdge> successor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w);
std::optional<HalfEdge> predecessor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w);

struct WalkSpec {
  GraphView gv;
  HalfEdge start;
};
inline constexpr std::size_t kWalkSpecWords = kGraphViewWords + kHalfEdgeWords;

struct WalkResult {
  HalfEdge last;
  std::size_t steps = 0;
  bool capped = false;
};
inline constexpr std::size_t kWalkResultWords = kHalfEdgeWords + 2;

// Called with (walk index, current half-edge, steps taken so far); true ends
// the walk. It is evaluated on the start half-edge too, with steps == 0.
using WalkStop = std::function<bool(std::size_t, const HalfEdge&, std::size_t)>;

// Advances every active walk by one face_step per round. All heads of a round
// share the neighbor sweeps (chunks of at most s sites). A walk that reaches
// step_cap without stopping is returned with capped = true. Bookkeeping is
// reserved for `capacity` walks (>= walks.size()), so the charge does not
// depend on how many walks a particular call happens to run.
WsBuffer<WalkResult> run_parallel_walks(RunContext& ctx, std::span<const WalkSpec> walks, std::size_t capacity,
                                        const WalkStop& stop, std::size_t step_cap);

}  // namespace emst
