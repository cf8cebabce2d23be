#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "emst/aux_graph.hpp"
#include "emst/memmodel.hpp"
#include "emst/walk.hpp"

namespace emst {

// Additive slack allowed on walk lengths bounded by the net.
inline constexpr std::size_t kGapSlack = 4;

struct NetEdge {
  HalfEdge edge;
  std::uint32_t gap = 0;  // half-edges strictly between this net-edge and the next one on its cycle
};
inline constexpr std::size_t kNetEdgeWords = kHalfEdgeWords + 1;

// An s-net: net-edges grouped per face-cycle, each group in cyclic order.
class SNet {
 public:
  SNet() = default;
  SNet(WorkspaceMeter& meter, std::size_t s, std::size_t spacing);

  // |N| <= 6s + 6.
  static std::size_t capacity_for(std::size_t s) { return 6 * s + 6; }

  void begin_cycle();
  void push(const NetEdge& e) { edges_.push_back(e); }
  NetEdge& at(std::size_t i) { return edges_[i]; }

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  std::size_t spacing() const { return spacing_; }
  std::size_t cycle_count() const { return starts_.size(); }
  std::span<const NetEdge> edges() const { return edges_.span(); }
  std::span<const NetEdge> cycle(std::size_t c) const;

  void release();

 private:
  WsBuffer<NetEdge> edges_;
  WsBuffer<std::uint32_t> starts_;
  std::size_t spacing_ = 1;
};

// Where net-edges go along one face of `face_length` half-edges: offsets
// 0, step, 2 step, ... with step = spacing + 1, so every gap lies in
// [spacing, 2 spacing]. count == 0 for faces shorter than spacing + 1.
struct Spread {
  std::size_t count = 0;
  std::size_t step = 0;
  std::size_t last_gap = 0;

  std::size_t offset(std::size_t t) const { return t * step; }
  std::size_t gap(std::size_t t) const { return t + 1 < count ? step - 1 : last_gap; }
};
Spread spread_positions(std::size_t face_length, std::size_t spacing);

// Builds the net for the graph after the batch, from the auxiliary graph
// with all batch edges inserted. Targets inside compressed edges are found by
// parallel walks in gv_next. Throws InvariantViolation on a face of h that
// does not close or a walk that exceeds its bound.
SNet rebuild(RunContext& ctx, const AuxGraph& h, const GraphView& gv_next);

struct ValidationReport {
  std::vector<std::string> failures;
  std::size_t faces = 0;
  std::size_t big_faces = 0;
  std::size_t net_edges = 0;
  std::size_t max_gap = 0;
  std::size_t max_walk_to_net = 0;

  bool ok() const { return failures.empty(); }
};

// Full-memory checker for the s-net properties: every face-cycle with at
// least spacing + 1 half-edges carries a net-edge, stored gaps lie in
// [spacing, 2 spacing] and match the true cycles, grouping and cyclic order
// are right, |N| <= 6s + 6, and every face walk meets a net-edge (or closes)
// within 2 spacing + kGapSlack steps.
class NetValidator {
 public:
  explicit NetValidator(const PointSet& ps);
  NetValidator(const PointSet& ps, std::vector<EdgeKey> rng_edges);

  ValidationReport validate(const SNet& net, const GraphView& gv, std::size_t s) const;
  const std::vector<EdgeKey>& rng_edges() const { return rng_; }

 private:
  const PointSet* ps_;
  std::vector<EdgeKey> rng_;
};

}  // namespace emst
