#include "emst/walk.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace emst {

namespace {

struct Around {
  Site center;
  std::array<Site, kMaxDegree> sites{};
  std::uint32_t count = 0;
};

Around gather(RunContext& ctx, const GraphView& gv, const NeighborSet& nbrs) {
  Around a;
  a.center = ctx.read(nbrs.owner);
  for (SiteId id : nbrs.neighbors()) {
    const Site x = ctx.read(id);
    if (gv.contains(make_edge(a.center, x))) a.sites[a.count++] = x;
  }
  return a;
}

// Candidate around a.center with the smallest (or largest) clockwise angle
// from base. Collinear candidates fall back to the shorter edge.
const Site* pick(const Around& a, Vec2 base, std::optional<SiteId> exclude, bool largest) {
  const Site* best = nullptr;
  std::optional<CwAngleRank> best_rank;
  for (std::uint32_t k = 0; k < a.count; ++k) {
    const Site& c = a.sites[k];
    if (exclude && c.idx == *exclude) continue;
    const CwAngleRank r = cw_angle_rank(base, c.pos() - a.center.pos());
    bool better = false;
    if (!best_rank) {
      better = true;
    } else if (same_angle(r, *best_rank)) {
      better = edge_less(make_edge(a.center, c), make_edge(a.center, *best));
    } else {
      better = largest ? *best_rank < r : r < *best_rank;
    }
    if (better) {
      best = &c;
      best_rank = r;
    }
  }
  return best;
}

SiteId other_endpoint(const EdgeKey& e, SiteId w) {
  if (w == e.u) return e.v;
  if (w == e.v) return e.u;
  throw std::invalid_argument("site " + std::to_string(w) + " is not an endpoint of edge (" + std::to_string(e.u) +
                              ", " + std::to_string(e.v) + ")");
}

NeighborSet lookup(RunContext& ctx, SiteId w) {
  const SiteId q[] = {w};
  return batch_neighbors(ctx, q)[0];
}

}  // namespace

std::vector<HalfEdge> incident_below(RunContext& ctx, const GraphView& gv, const NeighborSet& w_nbrs) {
  const Around a = gather(ctx, gv, w_nbrs);
  std::vector<HalfEdge> out;
  for (std::uint32_t k = 0; k < a.count; ++k) out.push_back({a.center.idx, a.sites[k].idx});
  return out;
}

std::vector<HalfEdge> incident_below(RunContext& ctx, const GraphView& gv, SiteId w) {
  return incident_below(ctx, gv, lookup(ctx, w));
}

HalfEdge face_step(RunContext& ctx, const GraphView& gv, const HalfEdge& f, const NeighborSet& head_nbrs) {
  if (head_nbrs.owner != f.head) throw std::invalid_argument("face_step: neighbor set is not for head(f)");
  const Around a = gather(ctx, gv, head_nbrs);
  const Site* tail = nullptr;
  for (std::uint32_t k = 0; k < a.count; ++k) {
    if (a.sites[k].idx == f.tail) tail = &a.sites[k];
  }
  if (tail == nullptr) {
    throw InvariantViolation("face_step: (" + std::to_string(f.tail) + " -> " + std::to_string(f.head) +
                             ") is not a half-edge of the current graph");
  }
  ++ctx.counters().walk_steps;
  const Site* next = pick(a, tail->pos() - a.center.pos(), std::nullopt, false);
  return {f.head, next->idx};
}

HalfEdge face_step(RunContext& ctx, const GraphView& gv, const HalfEdge& f) {
  return face_step(ctx, gv, f, lookup(ctx, f.head));
}

std::optional<HalfEdge> successor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w,
                                  const NeighborSet& w_nbrs) {
  const SiteId other = other_endpoint(e, w);
  const Around a = gather(ctx, gv, w_nbrs);
  const Site* x = pick(a, ctx.read(other).pos() - a.center.pos(), other, false);
  if (x == nullptr) return std::nullopt;
  return HalfEdge{w, x->idx};
}

std::optional<HalfEdge> predecessor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w,
                                    const NeighborSet& w_nbrs) {
  const SiteId other = other_endpoint(e, w);
  const Around a = gather(ctx, gv, w_nbrs);
  const Site* y = pick(a, ctx.read(other).pos() - a.center.pos(), other, true);
  if (y == nullptr) return std::nullopt;
  return HalfEdge{y->idx, w};
}

std::optional<HalfEdge> successor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w) {
  other_endpoint(e, w);
  return successor(ctx, gv, e, w, lookup(ctx, w));
}

std::optional<HalfEdge> predecessor(RunContext& ctx, const GraphView& gv, const EdgeKey& e, SiteId w) {
  other_endpoint(e, w);
  return predecessor(ctx, gv, e, w, lookup(ctx, w));
}

WsBuffer<WalkResult> run_parallel_walks(RunContext& ctx, std::span<const WalkSpec> walks, std::size_t capacity,
                                        const WalkStop& stop, std::size_t step_cap) {
  if (walks.size() > capacity) throw std::invalid_argument("more walks than the reserved capacity");
  auto& meter = ctx.meter();
  WsBuffer<WalkResult> results(meter, capacity, kWalkResultWords);
  WsBuffer<std::uint32_t> active(meter, capacity, kIndexWords);
  for (std::uint32_t i = 0; i < walks.size(); ++i) {
    results.push_back({walks[i].start, 0, false});
    if (!stop(i, walks[i].start, 0)) active.push_back(i);
  }

  WsBuffer<SiteId> heads(meter, capacity, kIndexWords);
  // Every active walk has taken exactly `round` steps when a round starts.
  for (std::size_t round = 0; !active.empty(); ++round) {
    heads.clear();
    for (std::uint32_t i : active) heads.push_back(results[i].last.head);
    std::sort(heads.begin(), heads.end());
    heads.truncate(static_cast<std::size_t>(std::unique(heads.begin(), heads.end()) - heads.begin()));

    for (std::size_t start = 0; start < heads.size(); start += ctx.s()) {
      const std::size_t len = std::min(ctx.s(), heads.size() - start);
      const auto chunk = heads.span().subspan(start, len);
      const NeighborBatch nbrs = batch_neighbors(ctx, chunk);
      for (std::uint32_t i : active) {
        WalkResult& r = results[i];
        if (r.steps > round || !std::binary_search(chunk.begin(), chunk.end(), r.last.head)) continue;
        r.last = face_step(ctx, walks[i].gv, r.last, *find_owner(nbrs, r.last.head));
        ++r.steps;
      }
    }

    std::size_t kept = 0;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const std::uint32_t i = active[k];
      WalkResult& r = results[i];
      if (stop(i, r.last, r.steps)) continue;
      if (r.steps >= step_cap) {
        r.capped = true;
        continue;
      }
      active[kept++] = i;
    }
    active.truncate(kept);
  }
  return results;
}

}  // namespace emst
