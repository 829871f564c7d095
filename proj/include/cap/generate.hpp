#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "cap/graph.hpp"

namespace cap {

// Random stream contract for generate_er, so that other tools can
// reproduce instances bit for bit:
//
//   engine  = std::mt19937_64(seed)
//   color() = engine() % k
//   unit()  = (engine() >> 11) * 2^-53            in [0, 1)
//
// Vertex mode draws color() for vertices 0..n-1 first. Edges are then
// emitted in order of (larger endpoint, smaller endpoint): p == 1 takes
// every pair, p == 0 none, otherwise geometric skipping with gap
// floor(log(1 - unit()) / log(1 - p)) between consecutive chosen pairs.
// In edge mode each emitted edge draws its color() right after it is chosen.
namespace detail {

inline double unit_draw(std::mt19937_64& engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

}  // namespace detail

inline ColoredGraph generate_er(Vertex n, double p, ColorId k, ColoringTarget target, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("edge probability must lie in [0, 1]");
  if (k < 1) throw ValidationError("palette size must be at least 1");

  std::mt19937_64 engine(seed);
  auto color = [&] { return static_cast<ColorId>(engine() % k); };

  std::vector<ColorSet> vertex_colors(n);
  if (target == ColoringTarget::vertices)
    for (auto& cs : vertex_colors) cs = ColorSet{color()};

  std::vector<Edge> edges;
  auto emit = [&](Vertex lo, Vertex hi) {
    Edge e{lo, hi, {}};
    if (target == ColoringTarget::edges) e.colors = ColorSet{color()};
    edges.push_back(std::move(e));
  };

  if (p == 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex hi = 1; hi < n; ++hi)
      for (Vertex lo = 0; lo < hi; ++lo) emit(lo, hi);
  } else if (p > 0.0) {
    const double log_q = std::log1p(-p);
    std::int64_t hi = 1;
    std::int64_t lo = -1;
    while (hi < static_cast<std::int64_t>(n)) {
      const double gap = std::floor(std::log1p(-detail::unit_draw(engine)) / log_q);
      // clamp before the integer conversion; anything past n^2 ends the loop
      lo += 1 + static_cast<std::int64_t>(std::min(gap, 4.0e18));
      while (lo >= hi && hi < static_cast<std::int64_t>(n)) {
        lo -= hi;
        ++hi;
      }
      if (hi < static_cast<std::int64_t>(n)) emit(static_cast<Vertex>(lo), static_cast<Vertex>(hi));
    }
  }

  return ColoredGraph(target, n, k, std::move(vertex_colors), std::move(edges));
}

}  // namespace cap
