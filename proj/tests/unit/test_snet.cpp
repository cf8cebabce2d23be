#include <doctest.h>

#include <functional>
#include <vector>

#include "../support.hpp"
#include "emst/io.hpp"
#include "emst/snet.hpp"

using namespace emst;

namespace {

// Copy of a net with `edit` applied to each net-edge; returning false drops it.
SNet copy_net(WorkspaceMeter& meter, std::size_t s, const SNet& src,
              const std::function<bool(std::size_t, NetEdge&)>& edit) {
  SNet out(meter, s, src.spacing());
  std::size_t k = 0;
  for (std::size_t c = 0; c < src.cycle_count(); ++c) {
    bool opened = false;
    for (NetEdge ne : src.cycle(c)) {
      if (!edit(k++, ne)) continue;
      if (!opened) out.begin_cycle();
      opened = true;
      out.push(ne);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("snet") {
  TEST_CASE("spreading keeps every gap within [d, 2d]") {
    for (std::size_t d = 1; d <= 12; ++d) {
      for (std::size_t len = 1; len <= 80; ++len) {
        const Spread sp = spread_positions(len, d);
        if (len < d + 1) {
          CHECK(sp.count == 0);
          continue;
        }
        REQUIRE(sp.count >= 1);
        std::size_t covered = 0;
        for (std::size_t t = 0; t < sp.count; ++t) {
          CHECK(sp.gap(t) >= d);
          CHECK(sp.gap(t) <= 2 * d);
          if (t + 1 < sp.count) CHECK(sp.offset(t + 1) - sp.offset(t) == sp.gap(t) + 1);
          covered += sp.gap(t) + 1;
        }
        CHECK(covered == len);
      }
    }
  }

  TEST_CASE("a face of exactly 3d half-edges") {
    for (std::size_t d : {2, 5, 9}) {
      const Spread sp = spread_positions(3 * d, d);
      CHECK(sp.count == 2);
      CHECK(sp.offset(0) == 0);
      CHECK(sp.offset(1) == d + 1);
      CHECK(sp.gap(0) == d);
      CHECK(sp.gap(1) == 2 * d - 2);
    }
    // d = 1: every third half-edge is not enough, the step is 2.
    const Spread one = spread_positions(3, 1);
    CHECK(one.count == 1);
    CHECK(one.gap(0) == 2);
  }

  TEST_CASE("empty net on the edgeless prefix passes") {
    PointSet ps(generate_points(20, 1, Distribution::uniform_square));
    const NetValidator val(ps);
    WorkspaceMeter meter(4);
    const SNet net(meter, 4, 5);
    const ValidationReport rep = val.validate(net, GraphView::below(val.rng_edges().front()), 4);
    CHECK(rep.ok());
    CHECK(rep.faces == 0);
  }

  TEST_CASE("empty net passes when every face is short") {
    PointSet ps(generate_points(20, 1, Distribution::uniform_square));
    const NetValidator val(ps);
    WorkspaceMeter meter(1);
    const SNet net(meter, 1, 20);
    const ValidationReport rep = val.validate(net, GraphView::below(val.rng_edges()[3]), 1);
    CHECK(rep.ok());
    CHECK(rep.big_faces == 0);
  }

  TEST_CASE("first rebuild with large spacing yields an empty net") {
    PointSet ps(generate_points(30, 2, Distribution::uniform_square));
    RunContext ctx(ps, 2);
    const NetValidator val(ps);
    std::size_t boundaries = 0;
    test::drive_main(ctx, {}, [&](const BatchBoundary& b) {
      if (boundaries++ == 0) {
        CHECK(b.net.empty());
        CHECK(val.validate(b.net, b.gv_next, 2).ok());
      }
    });
    CHECK(boundaries > 0);
  }

  TEST_CASE("rebuilt nets validate at every batch boundary") {
    for (Distribution d : {Distribution::uniform_square, Distribution::clustered, Distribution::grid_perturbed}) {
      PointSet ps(generate_points(64, 40, d));
      const NetValidator val(ps);
      for (std::size_t s : {1, 3, 8, 64}) {
        RunContext ctx(ps, s);
        std::size_t boundaries = 0;
        std::size_t nonempty = 0;
        test::drive_main(ctx, {}, [&](const BatchBoundary& b) {
          ++boundaries;
          const ValidationReport rep = val.validate(b.net, b.gv_next, s);
          CAPTURE(s);
          CAPTURE(boundaries);
          CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.failures.front()));
          CHECK(b.net.size() <= SNet::capacity_for(s));
          CHECK(rep.max_walk_to_net <= 2 * ctx.spacing() + kGapSlack);
          if (!b.net.empty()) ++nonempty;
        });
        CHECK(boundaries == (val.rng_edges().size() + s - 1) / s);
        if (s >= 8) CHECK(nonempty > 0);
      }
    }
  }

  TEST_CASE("validate catches a wrong gap and a missing net-edge") {
    PointSet ps(generate_points(64, 41, Distribution::uniform_square));
    const NetValidator val(ps);
    const std::size_t s = 8;
    RunContext ctx(ps, s);
    bool checked = false;
    test::drive_main(ctx, {}, [&](const BatchBoundary& b) {
      if (checked || b.net.size() < 2) return;
      checked = true;
      REQUIRE(val.validate(b.net, b.gv_next, s).ok());
      WorkspaceMeter scratch(s, {false});
      const SNet bad_gap = copy_net(scratch, s, b.net, [](std::size_t k, NetEdge& ne) {
        if (k == 0) ne.gap += 1;
        return true;
      });
      CHECK_FALSE(val.validate(bad_gap, b.gv_next, s).ok());
      // Removing every net-edge leaves big faces uncovered.
      const SNet none = copy_net(scratch, s, b.net, [](std::size_t, NetEdge&) { return false; });
      const ValidationReport rep = val.validate(none, b.gv_next, s);
      CHECK_FALSE(rep.ok());
      CHECK(rep.big_faces > 0);
    });
    CHECK(checked);
  }
}
