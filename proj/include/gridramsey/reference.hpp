#pragma once

// Straight-line serial versions of the OpenMP kernels. They share no code with the
// parallel paths and exist for cross-checking in tests and benchmarks.

#include <cstdint>
#include <optional>

#include "gridramsey/engine.hpp"
#include "gridramsey/graph.hpp"
#include "gridramsey/grid.hpp"

namespace gridramsey::reference {

std::optional<Rectangle> find_alternating_rectangle(const GridColouring& c);
std::uint64_t count_alternating_rectangles(const GridColouring& c);

// Sum of squared codegrees over a dense adjacency matrix.
std::uint64_t hom_c4(const Graph& g);

// Smallest qualifying coloured C4 by walking every ordered 4-tuple of distinct columns.
std::optional<ColouredC4> first_row_pattern(const GridColouring& c, const std::vector<std::size_t>& columns,
                                            const std::vector<std::size_t>& rows, std::size_t min_rows);

}  // namespace gridramsey::reference
