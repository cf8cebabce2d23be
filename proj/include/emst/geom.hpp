#pragma once

#include <compare>
#include <cstdint>
#include <tuple>

namespace emst {

using SiteId = std::uint32_t;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }

struct Site {
  double x = 0.0;
  double y = 0.0;
  SiteId idx = 0;

  Vec2 pos() const { return {x, y}; }
};

inline double sq_dist(const Site& a, const Site& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Canonical undirected edge. The (sq_len, u, v) triple is a strict total
// order on edges, which stands in for "all edge lengths are distinct".
struct EdgeKey {
  SiteId u = 0;
  SiteId v = 0;
  double sq_len = 0.0;

  friend bool operator==(const EdgeKey& a, const EdgeKey& b) {
    return a.u == b.u && a.v == b.v && a.sq_len == b.sq_len;
  }
};

inline bool edge_less(const EdgeKey& a, const EdgeKey& b) {
  return std::tie(a.sq_len, a.u, a.v) < std::tie(b.sq_len, b.u, b.v);
}

struct EdgeLess {
  bool operator()(const EdgeKey& a, const EdgeKey& b) const { return edge_less(a, b); }
};

inline EdgeKey make_edge(const Site& a, const Site& b) {
  return a.idx < b.idx ? EdgeKey{a.idx, b.idx, sq_dist(a, b)}
                       : EdgeKey{b.idx, a.idx, sq_dist(b, a)};
}

// Strict geometric lens test: w is closer than |uv| to both u and v.
inline bool in_lens(const Site& w, const Site& u, const Site& v) {
  const double uv = sq_dist(u, v);
  return sq_dist(u, w) < uv && sq_dist(v, w) < uv;
}

// Lens test under the tie-broken edge order. Identical to in_lens whenever
// the three distances involved are pairwise distinct; on ties it keeps the
// relative neighborhood graph at degree <= 6 and still a supergraph of the
// (tie-broken) EMST. Requires w distinct from u and v.
inline bool in_lens_ordered(const Site& w, const Site& u, const Site& v) {
  const EdgeKey uv = make_edge(u, v);
  return edge_less(make_edge(u, w), uv) && edge_less(make_edge(v, w), uv);
}

// Clockwise angle from a fixed base direction, comparable without trig.
// Sectors: 0 = (0, pi), 1 = exactly pi, 2 = (pi, 2pi), 3 = full turn (same
// direction as base). Only ranks built against the same base may be compared.
class CwAngleRank {
 public:
  CwAngleRank(int sector, Vec2 dir) : sector_(sector), dir_(dir) {}

  int sector() const { return sector_; }
  Vec2 direction() const { return dir_; }

  friend bool operator<(const CwAngleRank& a, const CwAngleRank& b) {
    if (a.sector_ != b.sector_) return a.sector_ < b.sector_;
    if (a.sector_ == 1 || a.sector_ == 3) return false;
    // Same open half-plane: a comes first iff b is clockwise of a.
    return cross(a.dir_, b.dir_) < 0.0;
  }

  // Equal angle (collinear, same side of the base).
  friend bool same_angle(const CwAngleRank& a, const CwAngleRank& b) { return !(a < b) && !(b < a); }

 private:
  int sector_;
  Vec2 dir_;
};

// Throws InputError on a zero-length direction.
CwAngleRank cw_angle_rank(Vec2 base, Vec2 cand);

}  // namespace emst
