#pragma once

// Independent brute-force oracles. Nothing here calls the kernels it is used to check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "gridramsey/engine.hpp"
#include "gridramsey/graph.hpp"
#include "gridramsey/grid.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<std::int64_t>>;

inline Matrix adjacency(const gridramsey::Graph& g) {
  Matrix a(g.order(), std::vector<std::int64_t>(g.order(), 0));
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t y = 0; y < g.order(); ++y) a[x][y] = g.adjacent(x, y) ? 1 : 0;
  return a;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const auto n = a.size();
  Matrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// trace(A^4) by explicit matrix powers.
inline std::int64_t trace_a4(const gridramsey::Graph& g) {
  const auto a = adjacency(g);
  const auto a4 = multiply(multiply(multiply(a, a), a), a);
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a4.size(); ++i) t += a4[i][i];
  return t;
}

// Ordered (x, y, z, w) with xy, yz, zw, wx all edges.
inline std::int64_t closed_4_walks(const gridramsey::Graph& g) {
  const auto n = g.order();
  std::int64_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (std::size_t w = 0; w < n; ++w)
          total += g.adjacent(x, y) && g.adjacent(y, z) && g.adjacent(z, w) && g.adjacent(w, x);
  return total;
}

// Rectangles enumerated rows-first, the reverse of the reference kernel's loop order.
inline std::uint64_t count_rectangles_rows_first(const gridramsey::GridColouring& c) {
  std::uint64_t total = 0;
  for (std::size_t j2 = 1; j2 < c.rows(); ++j2)
    for (std::size_t j = 0; j < j2; ++j)
      for (std::size_t i2 = 1; i2 < c.columns(); ++i2)
        for (std::size_t i = 0; i < i2; ++i) {
          const bool hor = c.hor(j, i2, i) == c.hor(j2, i, i2);
          const bool ver = c.ver(i, j2, j) == c.ver(i2, j, j2);
          total += hor && ver;
        }
  return total;
}

// Lexicographically smallest of the 8 rotations/reflections of a coloured cycle.
inline gridramsey::ColouredC4 smallest_representative(std::array<std::size_t, 4> v, std::array<gridramsey::Colour, 4> k) {
  std::vector<gridramsey::ColouredC4> reps;
  for (std::size_t s = 0; s < 4; ++s) {
    // forwards from s: v[s], v[s+1], ...; edge t joins v[s+t], v[s+t+1]
    reps.push_back({{v[s], v[(s + 1) % 4], v[(s + 2) % 4], v[(s + 3) % 4]},
                    {k[s], k[(s + 1) % 4], k[(s + 2) % 4], k[(s + 3) % 4]}});
    // backwards from s: v[s], v[s-1], ...; edge joining v[s-t], v[s-t-1] is k[s-t-1]
    reps.push_back({{v[s], v[(s + 3) % 4], v[(s + 2) % 4], v[(s + 1) % 4]},
                    {k[(s + 3) % 4], k[(s + 2) % 4], k[(s + 1) % 4], k[s]}});
  }
  return *std::min_element(reps.begin(), reps.end());
}

// Rows containing each coloured 4-cycle, walking every ordered 4-tuple of distinct columns
// and every row, then folding the 8 symmetric representatives together.
inline std::map<gridramsey::ColouredC4, std::size_t> c4_frequencies(const gridramsey::GridColouring& c,
                                                                     const std::vector<std::size_t>& a,
                                                                     const std::vector<std::size_t>& b) {
  std::map<gridramsey::ColouredC4, std::set<std::size_t>> rows_of;
  for (auto a1 : a)
    for (auto a2 : a)
      for (auto a3 : a)
        for (auto a4 : a) {
          if (std::set<std::size_t>{a1, a2, a3, a4}.size() != 4) continue;
          for (auto row : b) {
            const std::array<gridramsey::Colour, 4> colours{c.hor(row, a1, a2), c.hor(row, a2, a3), c.hor(row, a3, a4),
                                                           c.hor(row, a4, a1)};
            rows_of[smallest_representative({a1, a2, a3, a4}, colours)].insert(row);
          }
        }
  std::map<gridramsey::ColouredC4, std::size_t> out;
  for (const auto& [pattern, rows] : rows_of) out[pattern] = rows.size();
  return out;
}

inline std::map<gridramsey::ColouredEdge, std::size_t> edge_frequencies(const gridramsey::GridColouring& c,
                                                                        const std::vector<std::size_t>& a,
                                                                        const std::vector<std::size_t>& b) {
  std::map<gridramsey::ColouredEdge, std::size_t> out;
  for (auto b1 : b)
    for (auto b2 : b) {
      if (b1 >= b2) continue;
      for (auto col : a) ++out[{b1, b2, c.ver(col, b1, b2)}];
    }
  return out;
}

}  // namespace oracle
