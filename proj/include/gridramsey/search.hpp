#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>

#include "gridramsey/grid.hpp"

namespace gridramsey {

enum class SearchResult { kWitness, kExhausted, kTimeout };

const char* to_string(SearchResult result);

struct SearchOptions {
  unsigned colours = 1;
  std::size_t columns = 1;
  std::size_t rows = 1;
  std::chrono::milliseconds timeout{1000};
  // Pins every vertical edge of column 1 and every horizontal edge of row 1 to colour 0.
  bool symmetry_breaking = true;
  std::uint64_t seed = 0;
  std::ostream* progress = nullptr;  // "NODES <n> DEPTH <d>" lines
  std::uint64_t progress_interval = 1 << 20;
};

struct SearchOutcome {
  SearchResult kind = SearchResult::kExhausted;
  std::optional<GridColouring> witness;
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

// Depth-first colouring of the grid in a fixed variable order: all vertical edges column by
// column (row pairs lexicographic), then all horizontal edges row by row. A horizontal edge
// is rejected as soon as it closes an alternating rectangle. The seed only rotates the order
// in which colours are tried per variable.
SearchOutcome exhaustive_search(const SearchOptions& options);

bool verify_witness(const GridColouring& c);

}  // namespace gridramsey
