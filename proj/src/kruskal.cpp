#include "emst/kruskal.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

namespace emst {

UnionFind::UnionFind(WorkspaceMeter& meter, std::size_t n)
    : parent_(meter, n, kIndexWords), rank_(meter, n, kIndexWords) {
  for (std::size_t i = 0; i < n; ++i) {
    parent_.push_back(static_cast<std::uint32_t>(i));
    rank_.push_back(0);
  }
}

std::size_t UnionFind::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const std::size_t up = parent_[x];
    parent_[x] = static_cast<std::uint32_t>(root);
    x = up;
  }
  return root;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  std::size_t a = find(x);
  std::size_t b = find(y);
  if (a == b) return false;
  if (rank_[a] < rank_[b]) std::swap(a, b);
  parent_[b] = static_cast<std::uint32_t>(a);
  if (rank_[a] == rank_[b]) ++rank_[a];
  return true;
}

std::vector<EdgeKey> emst_oracle(const PointSet& ps) {
  const auto sites = ps.unmetered();
  std::vector<EdgeKey> all;
  all.reserve(sites.size() * (sites.size() - 1) / 2);
  for (std::size_t a = 0; a < sites.size(); ++a) {
    for (std::size_t b = a + 1; b < sites.size(); ++b) all.push_back(make_edge(sites[a], sites[b]));
  }
  std::sort(all.begin(), all.end(), EdgeLess{});
  std::vector<std::size_t> parent(sites.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<EdgeKey> tree;
  for (const EdgeKey& e : all) {
    const std::size_t a = find(e.u);
    const std::size_t b = find(e.v);
    if (a == b) continue;
    parent[a] = b;
    tree.push_back(e);
    if (tree.size() + 1 == sites.size()) break;
  }
  return tree;
}

void emst_simple(RunContext& ctx, const EmitFn& emit) {
  auto& meter = ctx.meter();
  const std::size_t s = ctx.s();
  const std::size_t cap = 2 * ctx.n() + 4;

  enum class Verdict : std::uint8_t { pending, accept, reject };
  struct Job {
    HalfEdge pred;
    SiteId target = 0;
    Verdict verdict = Verdict::pending;
  };

  std::optional<EdgeKey> prev;
  while (true) {
    EdgeBatch batch = next_edge_batch(ctx, prev);
    if (batch.empty()) break;
    ++ctx.counters().batches;

    WsBuffer<Job> jobs(meter, s, kHalfEdgeWords + 2);
    WsBuffer<WalkSpec> specs(meter, s, kWalkSpecWords);
    WsBuffer<std::uint32_t> job_of_walk(meter, s, kIndexWords);
    {
      WsBuffer<SiteId> starts(meter, s, kIndexWords);
      for (const EdgeKey& e : batch.edges) starts.push_back(e.u);
      const NeighborBatch nbrs = batch_neighbors(ctx, starts.span());
      for (std::uint32_t j = 0; j < batch.size(); ++j) {
        const EdgeKey& e = batch.edges[j];
        const GraphView gv = GraphView::below(e);
        const NeighborSet& ns = *find_owner(nbrs, e.u);
        const auto succ = successor(ctx, gv, e, e.u, ns);
        if (!succ) {
          jobs.push_back({HalfEdge{}, e.v, Verdict::accept});  // u is isolated in RNG_j
          continue;
        }
        jobs.push_back({*predecessor(ctx, gv, e, e.u, ns), e.v, Verdict::pending});
        specs.push_back({gv, *succ});
        job_of_walk.push_back(j);
      }
    }

    const auto results = run_parallel_walks(
        ctx, specs.span(), specs.capacity(),
        [&](std::size_t i, const HalfEdge& cur, std::size_t) {
          const Job& job = jobs[job_of_walk[i]];
          return cur.head == job.target || cur == job.pred;
        },
        cap);
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (results[i].capped) throw InvariantViolation("face walk exceeded 2n + 4 steps");
      Job& job = jobs[job_of_walk[i]];
      job.verdict = results[i].last.head == job.target ? Verdict::reject : Verdict::accept;
    }
    for (std::size_t j = 0; j < batch.size(); ++j) {
      if (jobs[j].verdict == Verdict::accept) emit(batch.edges[j]);
    }
    prev = batch.back();
  }
}

bool FSet::contains(const HalfEdge& h) const { return std::binary_search(edges.begin(), edges.end(), h); }

std::int32_t FSet::index_of(const HalfEdge& h) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), h);
  if (it == edges.end() || *it != h) return kNoSuccessor;
  return static_cast<std::int32_t>(it - edges.begin());
}

FSet build_f_set(RunContext& ctx, const SNet& net, const EdgeBatch& batch, const GraphView& gv) {
  auto& meter = ctx.meter();
  const std::size_t s = ctx.s();
  FSet f{WsBuffer<HalfEdge>(meter, f_capacity(s), kHalfEdgeWords),
         WsBuffer<std::array<std::int32_t, 2>>(meter, s, 2)};
  for (const NetEdge& ne : net.edges()) f.edges.push_back(ne.edge);

  // Successor per (batch edge, endpoint); a loop half-edge marks "none".
  WsBuffer<HalfEdge> succ(meter, 2 * s, kHalfEdgeWords);
  for (const EdgeKey& e : batch.edges) {
    succ.push_back({e.u, e.u});
    succ.push_back({e.v, e.v});
  }
  {
    WsBuffer<SiteId> ends(meter, 2 * s, kIndexWords);
    for (const EdgeKey& e : batch.edges) {
      ends.push_back(e.u);
      ends.push_back(e.v);
    }
    std::sort(ends.begin(), ends.end());
    ends.truncate(static_cast<std::size_t>(std::unique(ends.begin(), ends.end()) - ends.begin()));
    for (std::size_t start = 0; start < ends.size(); start += s) {
      const auto chunk = ends.span().subspan(start, std::min(s, ends.size() - start));
      const NeighborBatch nbrs = batch_neighbors(ctx, chunk);
      for (std::size_t j = 0; j < batch.size(); ++j) {
        const EdgeKey& e = batch.edges[j];
        const SiteId endpoints[2] = {e.u, e.v};
        for (int side = 0; side < 2; ++side) {
          const NeighborSet* ns = find_owner(nbrs, endpoints[side]);
          if (ns == nullptr) continue;
          if (const auto h = successor(ctx, gv, e, endpoints[side], *ns)) succ[2 * j + side] = *h;
        }
      }
    }
  }
  for (const HalfEdge& h : succ) {
    if (h.tail != h.head) f.edges.push_back(h);
  }
  std::sort(f.edges.begin(), f.edges.end());
  f.edges.truncate(static_cast<std::size_t>(std::unique(f.edges.begin(), f.edges.end()) - f.edges.begin()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const HalfEdge& hu = succ[2 * j];
    const HalfEdge& hv = succ[2 * j + 1];
    f.successor_of.push_back({hu.tail != hu.head ? f.index_of(hu) : kNoSuccessor,
                              hv.tail != hv.head ? f.index_of(hv) : kNoSuccessor});
  }
  return f;
}

AuxGraph run_walks_and_build_h(RunContext& ctx, const FSet& f, const GraphView& gv) {
  auto& meter = ctx.meter();
  const std::size_t cap = 2 * ctx.spacing() + kGapSlack;
  const std::size_t fc = f.edges.size();
  AuxGraph h(meter, f_capacity(ctx.s()), ctx.s());
  h.f_count = fc;

  const std::uint64_t before = ctx.counters().walk_steps;
  {
    WsBuffer<WalkSpec> specs(meter, f_capacity(ctx.s()), kWalkSpecWords);
    for (const HalfEdge& he : f.edges) specs.push_back({gv, he});
    const auto results = run_parallel_walks(
        ctx, specs.span(), specs.capacity(),
        [&](std::size_t, const HalfEdge& cur, std::size_t steps) { return steps > 0 && f.contains(cur); }, cap);

    for (std::uint32_t k = 0; k < fc; ++k) {
      h.darts.push_back({f.edges[k], 1, static_cast<std::uint32_t>(fc + k), 0, 0, DartKind::f_edge});
    }
    for (std::uint32_t k = 0; k < fc; ++k) {
      const WalkResult& r = results[k];
      if (r.capped) {
        throw InvariantViolation("s-net walk from (" + std::to_string(f.edges[k].tail) + " -> " +
                                 std::to_string(f.edges[k].head) + ") exceeded " + std::to_string(cap) +
                                 " steps; the net does not cover its face");
      }
      const auto end = static_cast<std::uint32_t>(f.index_of(r.last));
      const auto label = static_cast<std::uint32_t>(r.steps - 1);
      h.darts.push_back({HalfEdge{f.edges[k].head, f.edges[end].tail}, label, end, k, k, DartKind::compressed});
      h.darts[end].prev = static_cast<std::uint32_t>(fc + k);
      auto& diag = ctx.diagnostics();
      diag.max_net_walk_steps = std::max(diag.max_net_walk_steps, r.steps);
      diag.max_compressed_label = std::max<std::size_t>(diag.max_compressed_label, label);
    }
  }
  const std::uint64_t spent = ctx.counters().walk_steps - before;
  if (spent > fc * cap) {
    throw InvariantViolation("walk budget exceeded: " + std::to_string(spent) + " steps for |F| = " + std::to_string(fc));
  }

  for (const HalfEdge& he : f.edges) {
    h.vertices.push_back(he.tail);
    h.vertices.push_back(he.head);
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.truncate(static_cast<std::size_t>(std::unique(h.vertices.begin(), h.vertices.end()) - h.vertices.begin()));
  return h;
}

namespace {

// Dart leaving w that follows the new edge (w, other) in clockwise order:
// the RNG_i successor or an already inserted batch dart, whichever comes first.
std::optional<std::uint32_t> out_dart(RunContext& ctx, const AuxGraph& h, std::size_t first_new, SiteId w,
                                      SiteId other, std::int32_t successor_dart) {
  const Site ws = ctx.read(w);
  const Vec2 base = ctx.read(other).pos() - ws.pos();
  std::optional<std::uint32_t> best;
  std::optional<CwAngleRank> best_rank;
  auto consider = [&](std::uint32_t id) {
    const CwAngleRank r = cw_angle_rank(base, ctx.read(h.darts[id].he.head).pos() - ws.pos());
    if (!best_rank || r < *best_rank) {
      best = id;
      best_rank = r;
    }
  };
  if (successor_dart != kNoSuccessor) consider(static_cast<std::uint32_t>(successor_dart));
  for (std::uint32_t id = static_cast<std::uint32_t>(2 * h.f_count); id < first_new; ++id) {
    if (h.darts[id].he.tail == w) consider(id);
  }
  return best;
}

void link(AuxGraph& h, std::uint32_t a, std::uint32_t b) {
  h.darts[a].next = b;
  h.darts[b].prev = a;
}

void splice(RunContext& ctx, AuxGraph& h, const EdgeKey& e, const std::array<std::int32_t, 2>& succ) {
  const auto ab = static_cast<std::uint32_t>(h.darts.size());
  const std::uint32_t ba = ab + 1;
  h.darts.push_back({HalfEdge{e.u, e.v}, 1, ba, ba, 0, DartKind::batch});
  h.darts.push_back({HalfEdge{e.v, e.u}, 1, ab, ab, 0, DartKind::batch});
  const auto at_u = out_dart(ctx, h, ab, e.u, e.v, succ[0]);
  const auto at_v = out_dart(ctx, h, ab, e.v, e.u, succ[1]);
  if (at_u) {
    const std::uint32_t pu = h.darts[*at_u].prev;
    link(h, pu, ab);
    link(h, ba, *at_u);
  }
  if (at_v) {
    const std::uint32_t pv = h.darts[*at_v].prev;
    link(h, pv, ba);
    link(h, ab, *at_v);
  }
}

}  // namespace

void process_batch(RunContext& ctx, AuxGraph& h, const FSet& f, const EdgeBatch& batch, const EmitFn& emit) {
  for (const EdgeKey& e : batch.edges) {
    h.vertices.push_back(e.u);
    h.vertices.push_back(e.v);
  }
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.truncate(static_cast<std::size_t>(std::unique(h.vertices.begin(), h.vertices.end()) - h.vertices.begin()));

  UnionFind uf(ctx.meter(), h.vertices.capacity());
  for (std::size_t id = 0; id < 2 * h.f_count; ++id) {
    uf.unite(h.vertex_index(h.darts[id].he.tail), h.vertex_index(h.darts[id].he.head));
  }
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const EdgeKey& e = batch.edges[j];
    if (uf.unite(h.vertex_index(e.u), h.vertex_index(e.v))) emit(e);
    splice(ctx, h, e, f.successor_of[j]);
  }
}

void emst_main(RunContext& ctx, const EmitFn& emit, const BoundaryHook& on_boundary) {
  SNet net(ctx.meter(), ctx.s(), ctx.spacing());
  std::optional<EdgeKey> prev;
  while (true) {
    EdgeBatch batch = next_edge_batch(ctx, prev);
    if (batch.empty()) break;
    ++ctx.counters().batches;

    const GraphView gv = GraphView::below(batch.front());
    FSet f = build_f_set(ctx, net, batch, gv);
    net.release();

    const std::uint64_t before = ctx.counters().walk_steps;
    AuxGraph h = run_walks_and_build_h(ctx, f, gv);
    const std::uint64_t steps_in_h = ctx.counters().walk_steps - before;
    process_batch(ctx, h, f, batch, emit);

    const GraphView gv_next = GraphView::through(batch.back());
    net = rebuild(ctx, h, gv_next);
    ++ctx.counters().net_rebuilds;
    if (on_boundary) on_boundary({batch, net, h, gv_next, f.edges.size(), steps_in_h});
    prev = batch.back();
  }
}

}  // namespace emst
