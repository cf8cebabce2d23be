#include <doctest.h>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "emst/io.hpp"
#include "emst/memmodel.hpp"
#include "emst/rng.hpp"
#include "emst/run.hpp"

using namespace emst;

TEST_SUITE("memmodel") {
  TEST_CASE("read_site counts every access") {
    PointSet ps({{0, 0}, {1, 2}, {3, 1}});
    const Site a = ps.read_site(0);
    const Site b = ps.read_site(0);
    CHECK(a.x == b.x);
    CHECK(a.y == b.y);
    CHECK(a.idx == b.idx);
    CHECK(ps.reads() == 2);
    CHECK_THROWS_AS(ps.read_site(3), std::out_of_range);
  }

  TEST_CASE("n sequential reads") {
    PointSet ps(generate_points(40, 1, Distribution::uniform_square));
    for (std::size_t i = 0; i < ps.size(); ++i) CHECK(ps.read_site(i).idx == i);
    CHECK(ps.reads() == 40);
  }

  TEST_CASE("point sets reject bad input") {
    CHECK_THROWS_AS(PointSet({}), InputError);
    CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {0, 0}}), InputError);
    CHECK_THROWS_AS(PointSet({{0, std::numeric_limits<double>::quiet_NaN()}}), InputError);
    CHECK_THROWS_AS(PointSet({{std::numeric_limits<double>::infinity(), 0}}), InputError);
  }

  TEST_CASE("alloc and free track live and peak words") {
    WorkspaceMeter m(4);
    m.alloc(5);
    m.free(2);
    CHECK(m.live_words() == 3);
    CHECK(m.peak_words() == 5);
    m.alloc(0);
    CHECK(m.live_words() == 3);
    CHECK(m.peak_words() == 5);
    CHECK_THROWS_AS(m.free(4), std::logic_error);
  }

  TEST_CASE("cap arithmetic with C = 64, C0 = 1024") {
    MeterOptions opts;
    opts.cap_factor = 64;
    opts.cap_base = 1024;
    WorkspaceMeter m(4, opts);
    CHECK(m.cap() == 64 * 4 + 1024);
    m.alloc(64 * 4 + 1024);
    m.free(64 * 4 + 1024);
    try {
      m.alloc(64 * 4 + 1025);
      FAIL("expected WorkspaceExceeded");
    } catch (const WorkspaceExceeded& e) {
      CHECK(std::string(e.what()).find("test_memmodel.cpp") != std::string::npos);
    }
  }

  TEST_CASE("an unenforced meter still records the peak") {
    MeterOptions opts;
    opts.enforce = false;
    WorkspaceMeter m(1, opts);
    m.alloc(m.cap() + 100);
    CHECK(m.peak_words() == m.cap() + 100);
  }

  TEST_CASE("buffers charge their capacity up front") {
    WorkspaceMeter m(8);
    {
      WsBuffer<int> buf(m, 10, 3);
      CHECK(m.live_words() == 30);
      for (int i = 0; i < 10; ++i) buf.push_back(i);
      CHECK_THROWS_AS(buf.push_back(10), InvariantViolation);
      WsBuffer<int> moved = std::move(buf);
      CHECK(m.live_words() == 30);
      moved.release();
      CHECK(m.live_words() == 0);
    }
    CHECK(m.live_words() == 0);
    CHECK(m.peak_words() == 30);
  }

  TEST_CASE("run context validates s and derives the spacing") {
    PointSet ps(generate_points(10, 2, Distribution::uniform_square));
    CHECK_THROWS_AS(RunContext(ps, 0), std::invalid_argument);
    CHECK_THROWS_AS(RunContext(ps, 11), std::invalid_argument);
    CHECK(RunContext(ps, 3).spacing() == 3);
    CHECK(RunContext(ps, 10).spacing() == 1);
    RunContext ctx(ps, 4);
    ctx.read(1);
    ctx.read(2);
    CHECK(ctx.counters().site_reads == 2);
  }

  TEST_CASE("peak workspace of a full run does not depend on n") {
    std::vector<std::size_t> peaks;
    for (std::size_t n : {96, 192}) {
      PointSet ps(generate_points(n, 4, Distribution::uniform_square));
      peaks.push_back(run_emst(ps, 8, Algo::net).metrics.peak_words);
    }
    CHECK(peaks[0] == peaks[1]);
    CHECK(peaks[0] <= kCapFactor * 8 + kCapBase);
  }

  TEST_CASE("disabling enforcement never changes the output") {
    for (Distribution d : {Distribution::uniform_square, Distribution::grid_perturbed}) {
      PointSet ps(generate_points(60, 6, d));
      MeterOptions loose;
      loose.enforce = false;
      for (std::size_t s : {1, 5, 60}) {
        const RunOutput a = run_emst(ps, s, Algo::net);
        const RunOutput b = run_emst(ps, s, Algo::net, loose);
        CHECK(a.edges == b.edges);
        CHECK(a.metrics.peak_words == b.metrics.peak_words);
      }
    }
  }
}
