#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <source_location>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emst/errors.hpp"
#include "emst/geom.hpp"

namespace emst {

// Word tariff for workspace accounting.
inline constexpr std::size_t kIndexWords = 1;
inline constexpr std::size_t kSiteWords = 3;
inline constexpr std::size_t kEdgeWords = 3;
inline constexpr std::size_t kHalfEdgeWords = 2;

// Frozen workspace cap: live words never exceed kCapFactor * s + kCapBase.
inline constexpr std::size_t kCapFactor = 384;
inline constexpr std::size_t kCapBase = 1024;

// Read-only input. Sites are validated once (finite, pairwise distinct) and
// never mutated afterwards.
class PointSet {
 public:
  // Throws InputError on empty input, non-finite coordinates or duplicates.
  explicit PointSet(std::vector<Vec2> coords);

  PointSet(const PointSet&) = delete;
  PointSet& operator=(const PointSet&) = delete;

  std::size_t size() const { return sites_.size(); }

  // Counted access; throws std::out_of_range.
  Site read_site(std::size_t i) const;

  std::uint64_t reads() const { return reads_.load(std::memory_order_relaxed); }

  // Uncounted view for full-memory oracles and serialization only.
  std::span<const Site> unmetered() const { return sites_; }

 private:
  std::vector<Site> sites_;
  mutable std::atomic<std::uint64_t> reads_{0};
};

struct MeterOptions {
  bool enforce = true;
  std::size_t cap_factor = kCapFactor;
  std::size_t cap_base = kCapBase;
};

class WorkspaceMeter {
 public:
  explicit WorkspaceMeter(std::size_t s, MeterOptions opts = {});

  void alloc(std::size_t words, std::source_location where = std::source_location::current());
  void free(std::size_t words);

  std::size_t live_words() const { return live_; }
  std::size_t peak_words() const { return peak_; }
  std::size_t s() const { return s_; }
  std::size_t cap() const { return opts_.cap_factor * s_ + opts_.cap_base; }
  const MeterOptions& options() const { return opts_; }

 private:
  std::size_t s_;
  MeterOptions opts_;
  std::size_t live_ = 0;
  std::size_t peak_ = 0;
};

// Scoped charge against a meter.
class WsCharge {
 public:
  WsCharge() = default;
  WsCharge(WorkspaceMeter& meter, std::size_t words,
           std::source_location where = std::source_location::current())
      : meter_(&meter), words_(words) {
    meter.alloc(words, where);
  }
  WsCharge(WsCharge&& o) noexcept : meter_(std::exchange(o.meter_, nullptr)), words_(o.words_) {}
  WsCharge& operator=(WsCharge&& o) noexcept {
    if (this != &o) {
      release();
      meter_ = std::exchange(o.meter_, nullptr);
      words_ = o.words_;
    }
    return *this;
  }
  WsCharge(const WsCharge&) = delete;
  WsCharge& operator=(const WsCharge&) = delete;
  ~WsCharge() { release(); }

  void release() {
    if (meter_ != nullptr) meter_->free(words_);
    meter_ = nullptr;
  }

 private:
  WorkspaceMeter* meter_ = nullptr;
  std::size_t words_ = 0;
};

// Fixed-capacity array living in the workspace. The full capacity is charged
// up front, the way a limited-workspace algorithm reserves an O(s) array;
// growing past it is an invariant violation.
template <class T>
class WsBuffer {
 public:
  WsBuffer() = default;
  WsBuffer(WorkspaceMeter& meter, std::size_t capacity, std::size_t words_per_item,
           std::source_location where = std::source_location::current())
      : charge_(meter, capacity * words_per_item, where), capacity_(capacity) {
    items_.reserve(capacity);
  }

  void push_back(const T& item) {
    if (items_.size() >= capacity_) {
      throw InvariantViolation("workspace buffer overflow (capacity " + std::to_string(capacity_) + ")");
    }
    items_.push_back(item);
  }

  void truncate(std::size_t n) {
    if (n < items_.size()) items_.resize(n);
  }
  void clear() { items_.clear(); }

  std::size_t size() const { return items_.size(); }
  std::size_t capacity() const { return capacity_; }
  bool empty() const { return items_.empty(); }

  T& operator[](std::size_t i) { return items_[i]; }
  const T& operator[](std::size_t i) const { return items_[i]; }
  T& back() { return items_.back(); }
  const T& back() const { return items_.back(); }
  const T& front() const { return items_.front(); }

  auto begin() { return items_.begin(); }
  auto end() { return items_.end(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  std::span<T> span() { return items_; }
  std::span<const T> span() const { return items_; }

  void release() {
    items_.clear();
    items_.shrink_to_fit();
    charge_.release();
    capacity_ = 0;
  }

 private:
  WsCharge charge_;
  std::vector<T> items_;
  std::size_t capacity_ = 0;
};

struct CostCounters {
  std::uint64_t site_reads = 0;
  std::uint64_t walk_steps = 0;
  std::uint64_t batches = 0;
  std::uint64_t net_rebuilds = 0;
};

// Diagnostics that the acceptance checks read back.
struct RunDiagnostics {
  std::size_t max_accumulator = 0;      // largest edge accumulator seen while selecting
  std::size_t max_net_walk_steps = 0;   // longest walk bounded by the s-net
  std::size_t max_compressed_label = 0;
  std::size_t max_net_size = 0;
};

// State of one algorithm run: the input, its parameter s, the workspace
// meter and the cost counters. Single-threaded.
class RunContext {
 public:
  RunContext(const PointSet& ps, std::size_t s, MeterOptions opts = {});

  const PointSet& points() const { return *ps_; }
  std::size_t n() const { return ps_->size(); }
  std::size_t s() const { return s_; }

  // floor(n / s), floored at 1.
  std::size_t spacing() const;

  Site read(SiteId i) {
    ++counters_.site_reads;
    return ps_->read_site(i);
  }

  WorkspaceMeter& meter() { return meter_; }
  const WorkspaceMeter& meter() const { return meter_; }
  CostCounters& counters() { return counters_; }
  const CostCounters& counters() const { return counters_; }
  RunDiagnostics& diagnostics() { return diag_; }
  const RunDiagnostics& diagnostics() const { return diag_; }

 private:
  const PointSet* ps_;
  std::size_t s_;
  WorkspaceMeter meter_;
  CostCounters counters_;
  RunDiagnostics diag_;
};

}  // namespace emst
