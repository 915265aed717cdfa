#include "gridramsey/reference.hpp"

#include <map>
#include <vector>

namespace gridramsey::reference {

std::optional<Rectangle> find_alternating_rectangle(const GridColouring& c) {
  for (std::size_t i = 0; i < c.columns(); ++i)
    for (std::size_t i2 = i + 1; i2 < c.columns(); ++i2)
      for (std::size_t j = 0; j < c.rows(); ++j)
        for (std::size_t j2 = j + 1; j2 < c.rows(); ++j2)
          if (c.hor(j, i, i2) == c.hor(j2, i, i2) && c.ver(i, j, j2) == c.ver(i2, j, j2))
            return Rectangle{i, i2, j, j2, c.hor(j, i, i2), c.ver(i, j, j2)};
  return std::nullopt;
}

std::uint64_t count_alternating_rectangles(const GridColouring& c) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < c.columns(); ++i)
    for (std::size_t i2 = i + 1; i2 < c.columns(); ++i2)
      for (std::size_t j = 0; j < c.rows(); ++j)
        for (std::size_t j2 = j + 1; j2 < c.rows(); ++j2)
          total += c.hor(j, i, i2) == c.hor(j2, i, i2) && c.ver(i, j, j2) == c.ver(i2, j, j2);
  return total;
}

std::uint64_t hom_c4(const Graph& g) {
  const auto n = g.order();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      std::uint64_t d = 0;
      for (std::size_t z = 0; z < n; ++z) d += adj[x][z] && adj[y][z];
      total += d * d;
    }
  return total;
}

std::optional<ColouredC4> first_row_pattern(const GridColouring& c, const std::vector<std::size_t>& columns,
                                            const std::vector<std::size_t>& rows, std::size_t min_rows) {
  std::optional<ColouredC4> best;
  for (auto a1 : columns)
    for (auto a2 : columns)
      for (auto a3 : columns)
        for (auto a4 : columns) {
          if (a1 == a2 || a1 == a3 || a1 == a4 || a2 == a3 || a2 == a4 || a3 == a4) continue;
          std::map<std::array<Colour, 4>, std::size_t> tally;
          for (auto b : rows) ++tally[{c.hor(b, a1, a2), c.hor(b, a2, a3), c.hor(b, a3, a4), c.hor(b, a4, a1)}];
          for (const auto& [colours, count] : tally) {
            if (count < min_rows) continue;
            const ColouredC4 candidate{{a1, a2, a3, a4}, colours};
            if (!best || candidate < *best) best = candidate;
          }
        }
  return best;
}

}  // namespace gridramsey::reference
