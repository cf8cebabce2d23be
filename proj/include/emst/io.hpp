#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emst/geom.hpp"

namespace emst {

// One "x y" pair per line. Blank lines and lines starting with '#' are
// skipped. Throws InputError naming the offending line.
std::vector<Vec2> parse_points(std::istream& in);
std::vector<Vec2> read_points(const std::string& path);

// Shortest decimal text that parses back to the same doubles.
void write_points(std::ostream& out, std::span<const Vec2> pts);

// "u v length", length to 9 significant digits.
std::string format_edge(const EdgeKey& e);

enum class Distribution { uniform_square, clustered, grid_perturbed };

// Throws InputError on an unknown name.
Distribution parse_distribution(std::string_view name);
std::string_view distribution_name(Distribution d);

// n pairwise distinct points, deterministic in (n, seed, d).
//   uniform_square: uniform in [0, 1000)^2
//   clustered: Gaussian blobs around about n/16 uniform centers
//   grid_perturbed: integer lattice with spacing 4, each point nudged by
//   -1, 0 or +1 per axis, so equal distances are everywhere
std::vector<Vec2> generate_points(std::size_t n, std::uint64_t seed, Distribution d);

}  // namespace emst
