#include "emst/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace emst {

PlaneHalfEdges::PlaneHalfEdges(std::span<const Site> sites, std::span<const EdgeKey> edges) {
  for (const EdgeKey& e : edges) {
    half_edges_.push_back({e.u, e.v});
    half_edges_.push_back({e.v, e.u});
  }
  std::sort(half_edges_.begin(), half_edges_.end());

  // Outgoing half-edges of each tail form a contiguous range; order it
  // counterclockwise by angle.
  std::vector<std::size_t> rot(half_edges_.size());
  std::iota(rot.begin(), rot.end(), 0);
  auto angle = [&](std::size_t id) {
    const Site& t = sites[half_edges_[id].tail];
    const Site& h = sites[half_edges_[id].head];
    return std::atan2(h.y - t.y, h.x - t.x);
  };
  std::vector<std::size_t> pos_in_rot(half_edges_.size());
  next_.assign(half_edges_.size(), 0);
  for (std::size_t lo = 0; lo < rot.size();) {
    std::size_t hi = lo;
    while (hi < rot.size() && half_edges_[hi].tail == half_edges_[lo].tail) ++hi;
    std::sort(rot.begin() + static_cast<std::ptrdiff_t>(lo), rot.begin() + static_cast<std::ptrdiff_t>(hi),
              [&](std::size_t a, std::size_t b) { return angle(a) < angle(b); });
    for (std::size_t k = lo; k < hi; ++k) pos_in_rot[rot[k]] = k;
    lo = hi;
  }
  // next(t -> w) = w -> x where x precedes t in w's counterclockwise rotation.
  for (std::size_t id = 0; id < half_edges_.size(); ++id) {
    const std::size_t twin = *id_of(half_edges_[id].reversed());
    const std::size_t p = pos_in_rot[twin];
    const SiteId w = half_edges_[id].head;
    const auto range = std::equal_range(half_edges_.begin(), half_edges_.end(), HalfEdge{w, 0},
                                        [](const HalfEdge& a, const HalfEdge& b) { return a.tail < b.tail; });
    const std::size_t lo = static_cast<std::size_t>(range.first - half_edges_.begin());
    const std::size_t hi = static_cast<std::size_t>(range.second - half_edges_.begin());
    next_[id] = rot[p == lo ? hi - 1 : p - 1];
  }
}

std::optional<std::size_t> PlaneHalfEdges::id_of(const HalfEdge& h) const {
  auto it = std::lower_bound(half_edges_.begin(), half_edges_.end(), h);
  if (it == half_edges_.end() || *it != h) return std::nullopt;
  return static_cast<std::size_t>(it - half_edges_.begin());
}

std::vector<std::vector<std::size_t>> PlaneHalfEdges::faces() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t id = 0; id < size(); ++id) {
    if (seen[id]) continue;
    std::vector<std::size_t> face;
    for (std::size_t cur = id; !seen[cur]; cur = next_[cur]) {
      seen[cur] = true;
      face.push_back(cur);
    }
    out.push_back(std::move(face));
  }
  return out;
}

std::size_t PlaneHalfEdges::nontrivial_components() const {
  std::vector<SiteId> verts;
  for (const HalfEdge& h : half_edges_) verts.push_back(h.tail);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  auto index = [&](SiteId v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<std::size_t> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t comps = verts.size();
  for (const HalfEdge& h : half_edges_) {
    const std::size_t a = find(index(h.tail));
    const std::size_t b = find(index(h.head));
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

}  // namespace emst
