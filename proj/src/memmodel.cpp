#include "emst/memmodel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace emst {

PointSet::PointSet(std::vector<Vec2> coords) {
  if (coords.empty()) throw InputError("point set is empty");
  sites_.reserve(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Vec2 c = coords[i];
    if (!std::isfinite(c.x) || !std::isfinite(c.y)) {
      throw InputError("site " + std::to_string(i) + " has a non-finite coordinate");
    }
    sites_.push_back({c.x, c.y, static_cast<SiteId>(i)});
  }
  std::vector<Site> sorted = sites_;
  std::sort(sorted.begin(), sorted.end(), [](const Site& a, const Site& b) {
    return a.x != b.x ? a.x < b.x : (a.y != b.y ? a.y < b.y : a.idx < b.idx);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].x == sorted[i - 1].x && sorted[i].y == sorted[i - 1].y) {
      throw InputError("duplicate point: sites " + std::to_string(sorted[i - 1].idx) + " and " +
                       std::to_string(sorted[i].idx));
    }
  }
}

Site PointSet::read_site(std::size_t i) const {
  if (i >= sites_.size()) {
    throw std::out_of_range("read_site: index " + std::to_string(i) + " out of range (n = " +
                            std::to_string(sites_.size()) + ")");
  }
  reads_.fetch_add(1, std::memory_order_relaxed);
  return sites_[i];
}

WorkspaceMeter::WorkspaceMeter(std::size_t s, MeterOptions opts) : s_(s), opts_(opts) {}

void WorkspaceMeter::alloc(std::size_t words, std::source_location where) {
  if (words == 0) return;
  if (opts_.enforce && live_ + words > cap()) {
    throw WorkspaceExceeded("workspace exceeded: " + std::to_string(live_) + " + " + std::to_string(words) +
                            " words > cap " + std::to_string(cap()) + " at " + where.file_name() + ":" +
                            std::to_string(where.line()) + " (" + where.function_name() + ")");
  }
  live_ += words;
  peak_ = std::max(peak_, live_);
}

void WorkspaceMeter::free(std::size_t words) {
  if (words > live_) {
    throw std::logic_error("workspace over-free: " + std::to_string(words) + " > live " + std::to_string(live_));
  }
  live_ -= words;
}

RunContext::RunContext(const PointSet& ps, std::size_t s, MeterOptions opts)
    : ps_(&ps), s_(s), meter_(s, opts) {
  if (s < 1 || s > ps.size()) {
    throw std::invalid_argument("workspace parameter s = " + std::to_string(s) + " outside [1, n = " +
                                std::to_string(ps.size()) + "]");
  }
}

std::size_t RunContext::spacing() const { return std::max<std::size_t>(1, n() / s_); }

}  // namespace emst
