// emst: generate point sets, compute the EMST or RNG under a bounded
// workspace, verify against the full-memory oracles, and benchmark.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emst/io.hpp"
#include "emst/kruskal.hpp"
#include "emst/rng.hpp"
#include "emst/run.hpp"
#include "emst/snet.hpp"

namespace {

using namespace emst;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

constexpr std::uint64_t kDefaultSeed = 42;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EMST_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring EMST_SEED='" << env << "'\n";
    }
  }
  return kDefaultSeed;
}

std::size_t clamp_s(std::size_t s, std::size_t n) {
  if (s > n) {
    std::cerr << "warning: s = " << s << " exceeds n = " << n << "; using s = " << n << "\n";
    return n;
  }
  return s;
}

// One JSON line per rebuild: [tail, head, cycle, gap] for every net-edge.
void dump_net(std::ostream& out, const BatchBoundary& b) {
  nlohmann::ordered_json j;
  j["after_rank"] = b.batch.start_rank + b.batch.size() - 1;
  auto& rows = j["net"] = nlohmann::ordered_json::array();
  for (std::size_t c = 0; c < b.net.cycle_count(); ++c) {
    for (const NetEdge& ne : b.net.cycle(c)) rows.push_back({ne.edge.tail, ne.edge.head, c, ne.gap});
  }
  out << j.dump() << '\n';
}

nlohmann::ordered_json metrics_json(const RunMetrics& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  j["s"] = m.s;
  j["site_reads"] = m.site_reads;
  j["walk_steps"] = m.walk_steps;
  j["batches"] = m.batches;
  j["net_rebuilds"] = m.net_rebuilds;
  j["peak_words"] = m.peak_words;
  j["edges_emitted"] = m.edges_emitted;
  return j;
}

struct EmstArgs {
  std::string input;
  std::size_t s = 1;
  std::string algo = "net";
  bool json = false;
  bool dump = false;
  bool no_enforce = false;
};

int cmd_emst(const EmstArgs& a) {
  PointSet ps(read_points(a.input));
  const std::size_t s = clamp_s(a.s, ps.size());
  MeterOptions opts;
  opts.enforce = !a.no_enforce;
  std::ostringstream out;
  BoundaryHook hook;
  if (a.dump) hook = [&](const BatchBoundary& b) { dump_net(out, b); };
  const RunOutput r = run_emst(ps, s, parse_algo(a.algo), opts, hook,
                               [&](const EdgeKey& e) { out << format_edge(e) << '\n'; });
  if (a.json) out << metrics_json(r.metrics).dump() << '\n';
  std::cout << out.str();
  return kExitOk;
}

int cmd_rng(const std::string& input, std::size_t s_arg) {
  PointSet ps(read_points(input));
  const std::size_t s = clamp_s(s_arg, ps.size());
  for (const EdgeKey& e : enumerate_rng(ps, s)) std::cout << format_edge(e) << '\n';
  return kExitOk;
}

// Index of the first position where the two sequences differ, if any.
std::optional<std::size_t> first_divergence(const std::vector<EdgeKey>& a, const std::vector<EdgeKey>& b) {
  const std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (!(a[i] == b[i])) return i;
  }
  if (a.size() != b.size()) return common;
  return std::nullopt;
}

std::string describe(const std::vector<EdgeKey>& seq, std::size_t i) {
  return i < seq.size() ? format_edge(seq[i]) : std::string("<end>");
}

int cmd_verify(const std::string& input, std::vector<std::size_t> s_list, std::uint64_t seed) {
  PointSet ps(read_points(input));
  const std::size_t n = ps.size();
  if (s_list.empty()) {
    s_list = {1, 2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))), n};
  }
  for (std::size_t& s : s_list) s = clamp_s(s, n);
  std::sort(s_list.begin(), s_list.end());
  s_list.erase(std::unique(s_list.begin(), s_list.end()), s_list.end());

  const std::vector<EdgeKey> oracle = emst_oracle(ps);
  const NetValidator validator(ps);
  bool ok = true;
  auto compare = [&](const std::string& what, const std::vector<EdgeKey>& got, const std::vector<EdgeKey>& want) {
    if (const auto i = first_divergence(got, want)) {
      ok = false;
      std::cout << "FAIL " << what << ": first divergence at position " << *i << ": got " << describe(got, *i)
                << ", expected " << describe(want, *i) << " (seed " << seed << ")\n";
    } else {
      std::cout << "PASS " << what << " (" << got.size() << " edges)\n";
    }
  };

  for (const std::size_t s : s_list) {
    const std::string tag = "s=" + std::to_string(s);
    compare("rng batches " + tag, enumerate_rng(ps, s), validator.rng_edges());

    std::size_t boundaries = 0;
    std::optional<std::string> net_failure;
    const BoundaryHook hook = [&](const BatchBoundary& b) {
      ++boundaries;
      const ValidationReport rep = validator.validate(b.net, b.gv_next, s);
      if (!rep.ok() && !net_failure) {
        net_failure = "after edge rank " + std::to_string(b.batch.start_rank + b.batch.size() - 1) + ": " +
                      rep.failures.front();
      }
    };
    compare("emst net " + tag, run_emst(ps, s, Algo::net, {}, hook).edges, oracle);
    if (net_failure) {
      ok = false;
      std::cout << "FAIL s-net " << tag << " " << *net_failure << " (seed " << seed << ")\n";
    } else {
      std::cout << "PASS s-net " << tag << " (" << boundaries << " batch boundaries)\n";
    }
    compare("emst simple " + tag, run_emst(ps, s, Algo::simple).edges, oracle);
  }
  std::cout << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
  return ok ? kExitOk : kExitMismatch;
}

struct BenchArgs {
  std::vector<std::size_t> n_list;
  std::vector<std::size_t> s_list;
  std::size_t trials = 1;
  std::string dist = "uniform-square";
  std::string algo = "net";
};

int cmd_bench(const BenchArgs& a, std::uint64_t seed) {
  const Distribution dist = parse_distribution(a.dist);
  const Algo algo = parse_algo(a.algo);
  std::cout << "n,s,trial,site_reads,walk_steps,peak_words,wall_time\n";
  for (const std::size_t n : a.n_list) {
    for (const std::size_t s_arg : a.s_list) {
      const std::size_t s = clamp_s(s_arg, n);
      for (std::size_t t = 0; t < a.trials; ++t) {
        PointSet ps(generate_points(n, seed + t, dist));
        const auto t0 = std::chrono::steady_clock::now();
        const RunOutput r = run_emst(ps, s, algo);
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.6f", dt.count());
        std::cout << n << ',' << s << ',' << t << ',' << r.metrics.site_reads << ',' << r.metrics.walk_steps << ','
                  << r.metrics.peak_words << ',' << wall << '\n';
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euclidean minimum spanning trees in bounded workspace"};
  app.require_subcommand(1);
  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed, "seed for generators (default 42, or $EMST_SEED)");

  auto* gen = app.add_subcommand("gen", "write n random distinct points");
  std::size_t gen_n = 0;
  std::string gen_dist = "uniform-square";
  std::string gen_out;
  gen->add_option("-n,--n", gen_n, "number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--dist", gen_dist, "uniform-square | clustered | grid-perturbed");
  gen->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen->add_option("--seed", seed, "generator seed");

  auto* em = app.add_subcommand("emst", "compute the EMST of a point file");
  EmstArgs ea;
  em->add_option("input", ea.input, "point file")->required();
  em->add_option("-s,--s", ea.s, "workspace parameter")->check(CLI::PositiveNumber);
  em->add_option("--algo", ea.algo, "net | simple")->check(CLI::IsMember({"net", "simple"}));
  em->add_flag("--json", ea.json, "append a JSON metrics line");
  em->add_flag("--dump-net", ea.dump, "print the s-net after every rebuild as a JSON line");
  em->add_flag("--no-enforce", ea.no_enforce, "record peak workspace without enforcing the cap");
  em->add_option("--seed", seed, "run seed");

  auto* rg = app.add_subcommand("rng", "list the relative neighborhood graph edges in order");
  std::string rng_input;
  std::size_t rng_s = 1;
  rg->add_option("input", rng_input, "point file")->required();
  rg->add_option("-s,--s", rng_s, "workspace parameter")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "compare both algorithms with the oracles");
  std::string ver_input;
  std::vector<std::size_t> ver_s;
  ver->add_option("input", ver_input, "point file")->required();
  ver->add_option("-s,--s", ver_s, "workspace parameters")->delimiter(',')->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "seed reported with mismatches");

  auto* bench = app.add_subcommand("bench", "CSV sweep over n and s");
  BenchArgs ba;
  bench->add_option("--n", ba.n_list, "instance sizes")->delimiter(',')->required()->check(CLI::PositiveNumber);
  bench->add_option("--s", ba.s_list, "workspace parameters")->delimiter(',')->required()->check(CLI::PositiveNumber);
  bench->add_option("--trials", ba.trials, "instances per cell")->check(CLI::PositiveNumber);
  bench->add_option("--dist", ba.dist, "uniform-square | clustered | grid-perturbed");
  bench->add_option("--algo", ba.algo, "net | simple")->check(CLI::IsMember({"net", "simple"}));
  bench->add_option("--seed", seed, "seed of trial 0; trial t uses seed + t");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*gen) {
      const auto pts = generate_points(gen_n, seed, parse_distribution(gen_dist));
      if (gen_out.empty()) {
        write_points(std::cout, pts);
      } else {
        std::ofstream out(gen_out);
        if (!out) throw InputError("cannot write " + gen_out);
        write_points(out, pts);
        if (!out.flush()) throw InputError("cannot write " + gen_out);
      }
      return kExitOk;
    }
    if (*em) return cmd_emst(ea);
    if (*rg) return cmd_rng(rng_input, rng_s);
    if (*ver) return cmd_verify(ver_input, ver_s, seed);
    if (*bench) return cmd_bench(ba, seed);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const WorkspaceExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  }
  return kExitOk;
}
