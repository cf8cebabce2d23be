#include "emst/rng.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace emst {

namespace {

struct Candidates {
  std::array<Site, kMaxDegree> sites{};
  std::uint32_t count = 0;
};
constexpr std::size_t kCandidateWords = kMaxDegree * kSiteWords + 1;

struct Ranked {
  double sq = 0.0;
  std::uint32_t pos = 0;
};

// Neighbors of u in the RNG of the pool. Candidates are visited by increasing
// tie-broken distance from u, so every potential witness precedes the
// candidate it would block.
void neighbors_in_pool(const Site& u, std::span<const Site> pool, WsBuffer<Ranked>& order, Candidates& out) {
  order.clear();
  for (std::uint32_t i = 0; i < pool.size(); ++i) {
    if (pool[i].idx != u.idx) order.push_back({sq_dist(u, pool[i]), i});
  }
  std::sort(order.begin(), order.end(), [&](const Ranked& a, const Ranked& b) {
    if (a.sq != b.sq) return a.sq < b.sq;
    return edge_less(make_edge(u, pool[a.pos]), make_edge(u, pool[b.pos]));
  });

  out.count = 0;
  std::array<std::uint32_t, kMaxDegree> accepted{};
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Site& v = pool[order[k].pos];
    const EdgeKey uv = make_edge(u, v);
    // Earlier entries already satisfy key(u, w) < key(u, v).
    auto blocks = [&](const Site& w) { return edge_less(make_edge(v, w), uv); };
    bool blocked = false;
    for (std::uint32_t a = 0; a < out.count && !blocked; ++a) blocked = blocks(pool[accepted[a]]);
    for (std::size_t j = 0; j < k && !blocked; ++j) blocked = blocks(pool[order[j].pos]);
    if (blocked) continue;
    if (out.count == kMaxDegree) {
      throw InvariantViolation("site " + std::to_string(u.idx) + " has more than six RNG neighbors in a pool");
    }
    accepted[out.count] = order[k].pos;
    out.sites[out.count++] = v;
  }
}

void read_chunk(RunContext& ctx, std::size_t start, WsBuffer<Site>& chunk) {
  chunk.clear();
  const std::size_t end = std::min(ctx.n(), start + ctx.s());
  for (std::size_t i = start; i < end; ++i) chunk.push_back(ctx.read(static_cast<SiteId>(i)));
}

}  // namespace

const NeighborSet* find_owner(const NeighborBatch& batch, SiteId owner) {
  auto it = std::lower_bound(batch.begin(), batch.end(), owner,
                             [](const NeighborSet& ns, SiteId id) { return ns.owner < id; });
  return it != batch.end() && it->owner == owner ? &*it : nullptr;
}

std::vector<EdgeKey> rng_oracle(const PointSet& ps) {
  const auto sites = ps.unmetered();
  std::vector<EdgeKey> edges;
  for (std::size_t a = 0; a < sites.size(); ++a) {
    for (std::size_t b = a + 1; b < sites.size(); ++b) {
      bool empty = true;
      for (std::size_t c = 0; c < sites.size() && empty; ++c) {
        if (c != a && c != b && in_lens_ordered(sites[c], sites[a], sites[b])) empty = false;
      }
      if (empty) edges.push_back(make_edge(sites[a], sites[b]));
    }
  }
  std::sort(edges.begin(), edges.end(), EdgeLess{});
  return edges;
}

NeighborBatch batch_neighbors(RunContext& ctx, std::span<const SiteId> q) {
  const std::size_t s = ctx.s();
  if (q.size() > s) {
    throw std::invalid_argument("batch_neighbors: |Q| = " + std::to_string(q.size()) + " exceeds s = " +
                                std::to_string(s));
  }
  auto& meter = ctx.meter();

  WsBuffer<SiteId> ids(meter, s, kIndexWords);
  for (SiteId id : q) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  ids.truncate(static_cast<std::size_t>(std::unique(ids.begin(), ids.end()) - ids.begin()));

  WsBuffer<Site> owners(meter, s, kSiteWords);
  for (SiteId id : ids) owners.push_back(ctx.read(id));
  ids.release();

  WsBuffer<Candidates> cands(meter, s, kCandidateWords);
  for (std::size_t k = 0; k < owners.size(); ++k) cands.push_back({});

  WsBuffer<Site> chunk(meter, s, kSiteWords);
  // Q, one chunk, and at most six candidates per query site.
  WsBuffer<Site> pool(meter, (2 + kMaxDegree) * s, kSiteWords);
  WsBuffer<Ranked> order(meter, (2 + kMaxDegree) * s, 2);

  for (std::size_t start = 0; start < ctx.n(); start += s) {
    read_chunk(ctx, start, chunk);
    pool.clear();
    for (const Site& u : owners) pool.push_back(u);
    for (const Site& w : chunk) pool.push_back(w);
    for (const Candidates& c : cands) {
      for (std::uint32_t k = 0; k < c.count; ++k) pool.push_back(c.sites[k]);
    }
    std::sort(pool.begin(), pool.end(), [](const Site& a, const Site& b) { return a.idx < b.idx; });
    pool.truncate(static_cast<std::size_t>(
        std::unique(pool.begin(), pool.end(), [](const Site& a, const Site& b) { return a.idx == b.idx; }) -
        pool.begin()));
    for (std::size_t k = 0; k < owners.size(); ++k) neighbors_in_pool(owners[k], pool.span(), order, cands[k]);
  }
  order.release();
  pool.release();

  // Second pass: confirm each surviving candidate against all of V.
  for (std::size_t start = 0; start < ctx.n(); start += s) {
    read_chunk(ctx, start, chunk);
    for (std::size_t k = 0; k < owners.size(); ++k) {
      const Site& u = owners[k];
      Candidates& c = cands[k];
      std::uint32_t kept = 0;
      for (std::uint32_t i = 0; i < c.count; ++i) {
        const Site& v = c.sites[i];
        bool empty = true;
        for (const Site& w : chunk) {
          if (w.idx != u.idx && w.idx != v.idx && in_lens_ordered(w, u, v)) {
            empty = false;
            break;
          }
        }
        if (empty) c.sites[kept++] = v;
      }
      c.count = kept;
    }
  }
  chunk.release();

  NeighborBatch out(meter, s, kNeighborSetWords);
  for (std::size_t k = 0; k < owners.size(); ++k) {
    NeighborSet ns;
    ns.owner = owners[k].idx;
    ns.count = cands[k].count;
    for (std::uint32_t i = 0; i < ns.count; ++i) ns.ids[i] = cands[k].sites[i].idx;
    std::sort(ns.ids.begin(), ns.ids.begin() + ns.count);
    out.push_back(ns);
  }
  return out;
}

EdgeBatch next_edge_batch(RunContext& ctx, std::optional<EdgeKey> prev) {
  const std::size_t s = ctx.s();
  auto& meter = ctx.meter();
  WsBuffer<EdgeKey> acc(meter, 2 * s + 1, kEdgeWords);
  WsBuffer<SiteId> q(meter, s, kIndexWords);

  auto keep_smallest = [&] {
    std::nth_element(acc.begin(), acc.begin() + static_cast<std::ptrdiff_t>(s) - 1, acc.end(), EdgeLess{});
    acc.truncate(s);
  };

  bool seen_prev = false;
  std::size_t at_or_below_prev = 0;
  for (std::size_t start = 0; start < ctx.n(); start += s) {
    q.clear();
    for (std::size_t i = start; i < std::min(ctx.n(), start + s); ++i) q.push_back(static_cast<SiteId>(i));
    const NeighborBatch nbrs = batch_neighbors(ctx, q.span());
    for (const NeighborSet& ns : nbrs) {
      const Site u = ctx.read(ns.owner);
      for (SiteId vid : ns.neighbors()) {
        if (vid < ns.owner) continue;  // each undirected edge once, from its lower endpoint
        const EdgeKey e = make_edge(u, ctx.read(vid));
        if (prev && !edge_less(*prev, e)) {
          seen_prev = seen_prev || e == *prev;
          ++at_or_below_prev;
          continue;
        }
        acc.push_back(e);
        ctx.diagnostics().max_accumulator = std::max(ctx.diagnostics().max_accumulator, acc.size());
        if (acc.size() > 2 * s) keep_smallest();
      }
    }
  }
  if (prev && !seen_prev) {
    throw InvariantViolation("next_edge_batch: previous edge (" + std::to_string(prev->u) + ", " +
                             std::to_string(prev->v) + ") is not an RNG edge");
  }
  q.release();
  if (acc.size() > s) keep_smallest();
  std::sort(acc.begin(), acc.end(), EdgeLess{});

  EdgeBatch batch{WsBuffer<EdgeKey>(meter, s, kEdgeWords), at_or_below_prev + 1};
  for (const EdgeKey& e : acc) batch.edges.push_back(e);
  return batch;
}

}  // namespace emst
