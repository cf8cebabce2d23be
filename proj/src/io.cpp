#include "emst/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <set>
#include <utility>

#include "emst/errors.hpp"

namespace emst {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_coord(std::string_view tok, std::size_t line) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw InputError("line " + std::to_string(line) + ": bad coordinate '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::vector<Vec2> parse_points(std::istream& in) {
  std::vector<Vec2> pts;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto gap = text.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw InputError("line " + std::to_string(line) + ": expected two coordinates");
    }
    const std::string_view rest = trim(text.substr(gap));
    if (rest.find_first_of(" \t") != std::string_view::npos) {
      throw InputError("line " + std::to_string(line) + ": expected two coordinates");
    }
    const Vec2 p{parse_coord(text.substr(0, gap), line), parse_coord(rest, line)};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("line " + std::to_string(line) + ": non-finite coordinate");
    }
    pts.push_back(p);
  }
  if (pts.empty()) throw InputError("no points in input");
  return pts;
}

std::vector<Vec2> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_points(in);
}

void write_points(std::ostream& out, std::span<const Vec2> pts) {
  char buf[64];
  for (const Vec2& p : pts) {
    auto r = std::to_chars(buf, buf + sizeof buf, p.x);
    *r.ptr++ = ' ';
    r = std::to_chars(r.ptr, buf + sizeof buf, p.y);
    *r.ptr++ = '\n';
    out.write(buf, r.ptr - buf);
  }
}

std::string format_edge(const EdgeKey& e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%u %u %.9g", e.u, e.v, std::sqrt(e.sq_len));
  return buf;
}

Distribution parse_distribution(std::string_view name) {
  if (name == "uniform-square") return Distribution::uniform_square;
  if (name == "clustered") return Distribution::clustered;
  if (name == "grid-perturbed") return Distribution::grid_perturbed;
  throw InputError("unknown distribution '" + std::string(name) + "'");
}

std::string_view distribution_name(Distribution d) {
  switch (d) {
    case Distribution::uniform_square: return "uniform-square";
    case Distribution::clustered: return "clustered";
    case Distribution::grid_perturbed: return "grid-perturbed";
  }
  return "?";
}

std::vector<Vec2> generate_points(std::size_t n, std::uint64_t seed, Distribution d) {
  std::mt19937_64 gen(seed);
  std::vector<Vec2> pts;
  pts.reserve(n);
  std::set<std::pair<double, double>> seen;
  auto accept = [&](Vec2 p) {
    if (seen.emplace(p.x, p.y).second) pts.push_back(p);
  };

  switch (d) {
    case Distribution::uniform_square: {
      std::uniform_real_distribution<double> coord(0.0, 1000.0);
      while (pts.size() < n) {
        const double x = coord(gen);
        accept({x, coord(gen)});
      }
      break;
    }
    case Distribution::clustered: {
      std::uniform_real_distribution<double> coord(0.0, 1000.0);
      std::vector<Vec2> centers(std::max<std::size_t>(1, n / 16));
      for (Vec2& c : centers) {
        c.x = coord(gen);
        c.y = coord(gen);
      }
      std::uniform_int_distribution<std::size_t> pick(0, centers.size() - 1);
      std::normal_distribution<double> offset(0.0, 15.0);
      while (pts.size() < n) {
        const Vec2 c = centers[pick(gen)];
        const double x = c.x + offset(gen);
        accept({x, c.y + offset(gen)});
      }
      break;
    }
    case Distribution::grid_perturbed: {
      const auto side = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
      std::uniform_int_distribution<int> nudge(-1, 1);
      std::vector<std::int64_t> cells(static_cast<std::size_t>(side * side));
      for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = static_cast<std::int64_t>(i);
      std::shuffle(cells.begin(), cells.end(), gen);
      for (std::size_t k = 0; pts.size() < n; k = (k + 1) % cells.size()) {
        const double x = static_cast<double>(4 * (cells[k] % side) + nudge(gen));
        accept({x, static_cast<double>(4 * (cells[k] / side) + nudge(gen))});
      }
      break;
    }
  }
  return pts;
}

}  // namespace emst
