#include "emst/snet.hpp"

#include <algorithm>
#include <optional>

#include "emst/faces.hpp"
#include "emst/rng.hpp"

namespace emst {

std::size_t AuxGraph::vertex_index(SiteId v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) {
    throw InvariantViolation("auxiliary graph has no vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - vertices.begin());
}

SNet::SNet(WorkspaceMeter& meter, std::size_t s, std::size_t spacing)
    : edges_(meter, capacity_for(s), kNetEdgeWords),
      starts_(meter, capacity_for(s), kIndexWords),
      spacing_(spacing) {}

void SNet::begin_cycle() { starts_.push_back(static_cast<std::uint32_t>(edges_.size())); }

std::span<const NetEdge> SNet::cycle(std::size_t c) const {
  const std::size_t lo = starts_[c];
  const std::size_t hi = c + 1 < starts_.size() ? starts_[c + 1] : edges_.size();
  return edges_.span().subspan(lo, hi - lo);
}

void SNet::release() {
  edges_.release();
  starts_.release();
}

Spread spread_positions(std::size_t face_length, std::size_t spacing) {
  Spread sp;
  sp.step = spacing + 1;
  sp.count = face_length / sp.step;
  if (sp.count > 0) sp.last_gap = face_length - (sp.count - 1) * sp.step - 1;
  return sp;
}

SNet rebuild(RunContext& ctx, const AuxGraph& h, const GraphView& gv_next) {
  const std::size_t d = ctx.spacing();
  auto& meter = ctx.meter();
  SNet net(meter, ctx.s(), d);

  struct Target {
    std::uint32_t slot;
    std::uint32_t origin;
    std::uint32_t steps;
  };
  WsBuffer<Target> targets(meter, SNet::capacity_for(ctx.s()), 3);
  WsBuffer<std::uint8_t> visited(meter, h.darts.capacity(), kIndexWords);
  for (std::size_t i = 0; i < h.darts.size(); ++i) visited.push_back(0);

  const auto& darts = h.darts;
  for (std::uint32_t id = 0; id < darts.size(); ++id) {
    if (visited[id]) continue;
    std::size_t length = 0;
    std::optional<std::uint32_t> start;
    std::size_t guard = 0;
    std::uint32_t cur = id;
    do {
      if (++guard > darts.size()) {
        throw InvariantViolation("auxiliary face through dart " + std::to_string(id) + " does not close");
      }
      visited[cur] = 1;
      length += darts[cur].length;
      if (darts[cur].kind != DartKind::compressed && (!start || darts[cur].he < darts[*start].he)) start = cur;
      cur = darts[cur].next;
    } while (cur != id);
    if (!start) throw InvariantViolation("auxiliary face without an explicit half-edge");

    const Spread sp = spread_positions(length, d);
    if (sp.count == 0) continue;
    net.begin_cycle();
    std::size_t offset = 0;
    std::size_t t = 0;
    cur = *start;
    do {
      const Dart& dart = darts[cur];
      while (t < sp.count && sp.offset(t) < offset + dart.length) {
        const auto gap = static_cast<std::uint32_t>(sp.gap(t));
        if (dart.kind == DartKind::compressed) {
          targets.push_back({static_cast<std::uint32_t>(net.size()), dart.origin,
                             static_cast<std::uint32_t>(sp.offset(t) - offset + 1)});
          net.push({darts[dart.origin].he, gap});  // placeholder until the walk lands
        } else {
          net.push({dart.he, gap});
        }
        ++t;
      }
      offset += dart.length;
      cur = dart.next;
    } while (cur != *start);
  }
  visited.release();

  if (!targets.empty()) {
    WsBuffer<WalkSpec> specs(meter, targets.capacity(), kWalkSpecWords);
    for (const Target& tg : targets) specs.push_back({gv_next, darts[tg.origin].he});
    const auto results = run_parallel_walks(
        ctx, specs.span(), specs.capacity(),
        [&](std::size_t i, const HalfEdge&, std::size_t steps) { return steps >= targets[i].steps; }, 2 * d + kGapSlack);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      if (results[i].capped || results[i].steps != targets[i].steps) {
        throw InvariantViolation("net rebuild walk did not reach its target");
      }
      net.at(targets[i].slot).edge = results[i].last;
      ctx.diagnostics().max_net_walk_steps = std::max(ctx.diagnostics().max_net_walk_steps, results[i].steps);
    }
  }
  ctx.diagnostics().max_net_size = std::max(ctx.diagnostics().max_net_size, net.size());
  return net;
}

NetValidator::NetValidator(const PointSet& ps) : NetValidator(ps, rng_oracle(ps)) {}

NetValidator::NetValidator(const PointSet& ps, std::vector<EdgeKey> rng_edges)
    : ps_(&ps), rng_(std::move(rng_edges)) {}

ValidationReport NetValidator::validate(const SNet& net, const GraphView& gv, std::size_t s) const {
  ValidationReport rep;
  auto fail = [&](std::string msg) { rep.failures.push_back(std::move(msg)); };
  const std::size_t n = ps_->size();
  const std::size_t d = std::max<std::size_t>(1, n / s);
  if (net.spacing() != d) fail("net spacing " + std::to_string(net.spacing()) + " != floor(n/s) = " + std::to_string(d));

  std::vector<EdgeKey> edges;
  for (const EdgeKey& e : rng_) {
    if (gv.contains(e)) edges.push_back(e);
  }
  const PlaneHalfEdges graph(ps_->unmetered(), edges);
  const auto faces = graph.faces();
  rep.faces = faces.size();
  rep.net_edges = net.size();

  std::vector<std::size_t> face_of(graph.size());
  std::vector<std::size_t> pos_of(graph.size());
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (std::size_t k = 0; k < faces[f].size(); ++k) {
      face_of[faces[f][k]] = f;
      pos_of[faces[f][k]] = k;
    }
  }

  if (net.size() > SNet::capacity_for(s)) fail("|N| = " + std::to_string(net.size()) + " exceeds 6s + 6");

  std::vector<bool> is_net(graph.size(), false);
  std::vector<std::optional<std::size_t>> group_of_face(faces.size());
  std::vector<std::size_t> net_on_face(faces.size(), 0);
  bool ids_ok = true;
  for (std::size_t c = 0; c < net.cycle_count(); ++c) {
    const auto cyc = net.cycle(c);
    if (cyc.empty()) {
      fail("empty net cycle group " + std::to_string(c));
      continue;
    }
    std::vector<std::size_t> ids;
    for (const NetEdge& ne : cyc) {
      const auto id = graph.id_of(ne.edge);
      if (!id) {
        fail("net-edge (" + std::to_string(ne.edge.tail) + " -> " + std::to_string(ne.edge.head) +
             ") is not a half-edge of the graph");
        ids_ok = false;
        break;
      }
      if (is_net[*id]) fail("net-edge listed twice");
      is_net[*id] = true;
      ids.push_back(*id);
    }
    if (ids.size() != cyc.size()) continue;
    const std::size_t f = face_of[ids[0]];
    if (group_of_face[f]) fail("face " + std::to_string(f) + " split across two net groups");
    group_of_face[f] = c;
    const std::size_t len = faces[f].size();
    std::size_t travelled = 0;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      if (face_of[ids[k]] != f) {
        fail("net group " + std::to_string(c) + " spans several faces");
        break;
      }
      const std::size_t here = pos_of[ids[k]];
      const std::size_t there = pos_of[ids[(k + 1) % ids.size()]];
      const std::size_t dist = ids.size() == 1 ? len : (there + len - here) % len;
      travelled += dist;
      const std::size_t measured = dist - 1;
      rep.max_gap = std::max(rep.max_gap, measured);
      if (measured != cyc[k].gap) {
        fail("stored gap " + std::to_string(cyc[k].gap) + " != measured gap " + std::to_string(measured));
      }
      if (cyc[k].gap < d || cyc[k].gap > 2 * d) {
        fail("gap " + std::to_string(cyc[k].gap) + " outside [" + std::to_string(d) + ", " + std::to_string(2 * d) + "]");
      }
      if (measured > 2 * d + kGapSlack) fail("measured gap " + std::to_string(measured) + " beyond 2d + K");
    }
    if (travelled != len) fail("net group " + std::to_string(c) + " is not in cyclic order around its face");
    net_on_face[f] += ids.size();
  }
  if (!ids_ok) return rep;

  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::size_t len = faces[f].size();
    if (len >= d + 1) {
      ++rep.big_faces;
      if (net_on_face[f] == 0) fail("face of length " + std::to_string(len) + " has no net-edge");
    }
    // Steps from each half-edge until a net-edge or the start comes around.
    std::size_t next_net = len;  // distance from position len-1 looking forward, filled backwards
    std::optional<std::size_t> first_net;
    for (std::size_t k = 0; k < len; ++k) {
      if (is_net[faces[f][k]]) {
        first_net = k;
        break;
      }
    }
    for (std::size_t k = len; k-- > 0;) {
      std::size_t steps = len;
      if (first_net) {
        // nearest net position strictly after k, cyclically
        steps = k + 1 < len && next_net < len ? next_net - k : (*first_net + len - k);
        steps = std::min(steps, len);
      }
      rep.max_walk_to_net = std::max(rep.max_walk_to_net, steps);
      if (is_net[faces[f][k]]) next_net = k;
    }
  }
  if (rep.max_walk_to_net > 2 * d + kGapSlack) {
    fail("a face walk needs " + std::to_string(rep.max_walk_to_net) + " steps to meet the net (bound " +
         std::to_string(2 * d + kGapSlack) + ")");
  }
  return rep;
}

}  // namespace emst
