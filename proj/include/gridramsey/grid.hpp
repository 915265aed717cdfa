#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gridramsey/graph.hpp"

namespace gridramsey {

// Colours are 0-based: [0, r).
using Colour = std::uint16_t;

// Index of the unordered pair {a, b} (a != b) among pairs of [0, n) listed lexicographically.
constexpr std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

constexpr std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// An r-edge-colouring of K_M x K_N. Columns are 0..M-1, rows 0..N-1.
// hor(j, {i, i'}) colours the edge (i, j)(i', j); ver(i, {j, j'}) colours (i, j)(i, j').
class GridColouring {
 public:
  // All edges start with colour 0. Throws std::invalid_argument unless r, M, N >= 1.
  GridColouring(unsigned colours, std::size_t columns, std::size_t rows);

  unsigned colours() const { return colours_; }
  std::size_t columns() const { return columns_; }
  std::size_t rows() const { return rows_; }

  Colour hor(std::size_t row, std::size_t c1, std::size_t c2) const {
    return hor_[row * column_pairs_ + pair_index(columns_, c1, c2)];
  }
  Colour ver(std::size_t column, std::size_t r1, std::size_t r2) const {
    return ver_[column * row_pairs_ + pair_index(rows_, r1, r2)];
  }

  // Checked setters: range of indices and colour.
  void set_hor(std::size_t row, std::size_t c1, std::size_t c2, Colour colour);
  void set_ver(std::size_t column, std::size_t r1, std::size_t r2, Colour colour);

  // Row j's horizontal colours in lexicographic column-pair order.
  std::span<const Colour> hor_record(std::size_t row) const {
    return std::span<const Colour>(hor_).subspan(row * column_pairs_, column_pairs_);
  }
  std::span<const Colour> ver_record(std::size_t column) const {
    return std::span<const Colour>(ver_).subspan(column * row_pairs_, row_pairs_);
  }
  std::span<Colour> hor_record(std::size_t row) {
    return std::span<Colour>(hor_).subspan(row * column_pairs_, column_pairs_);
  }
  std::span<Colour> ver_record(std::size_t column) {
    return std::span<Colour>(ver_).subspan(column * row_pairs_, row_pairs_);
  }

  friend bool operator==(const GridColouring&, const GridColouring&) = default;

 private:
  unsigned colours_;
  std::size_t columns_;
  std::size_t rows_;
  std::size_t column_pairs_;
  std::size_t row_pairs_;
  std::vector<Colour> hor_;
  std::vector<Colour> ver_;
};

// Columns c1 < c2, rows r1 < r2, both horizontal edges share hor_colour and both vertical
// edges share ver_colour.
struct Rectangle {
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t r1 = 0;
  std::size_t r2 = 0;
  Colour hor_colour = 0;
  Colour ver_colour = 0;
  friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

bool is_alternating(const GridColouring& c, const Rectangle& rect);

// Builds the Rectangle record for (c1, c2, r1, r2) if it is alternating.
std::optional<Rectangle> rectangle_at(const GridColouring& c, std::size_t c1, std::size_t c2, std::size_t r1,
                                      std::size_t r2);

// Row graph H_j: complete graph on the columns, pair colours taken from row j.
struct RowGraph {
  std::vector<std::size_t> vertices;
  std::vector<Colour> pair_colours;
  Colour colour(std::size_t x, std::size_t y) const { return pair_colours[pair_index(vertices.size(), x, y)]; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// GRIDCOL text format; see README. Throws ParseError.
GridColouring parse_colouring(std::string_view text);
GridColouring read_colouring_file(const std::string& path);
std::string serialize_colouring(const GridColouring& c);

// Colours drawn as next() mod r, all hor entries by (j, i, i') then all ver entries by (i, j, j').
GridColouring random_colouring(unsigned colours, std::size_t columns, std::size_t rows, std::uint64_t seed);

// Lexicographically smallest (c1, c2, r1, r2) alternating rectangle. OpenMP over row pairs.
std::optional<Rectangle> find_alternating_rectangle(const GridColouring& c);

// Number of alternating rectangles. OpenMP over row pairs.
std::uint64_t count_alternating_rectangles(const GridColouring& c);

// Throws std::out_of_range for a bad row.
RowGraph row_graph(const GridColouring& c, std::size_t row);

// Column pairs on which rows r1 and r2 agree. Throws std::invalid_argument if r1 == r2,
// std::out_of_range for bad rows.
Graph intersection_graph(const GridColouring& c, std::size_t r1, std::size_t r2);

struct VerticalPartition {
  PartitionedGraph partition;
  // Smallest intra-class edge, present iff an alternating rectangle uses rows r1, r2.
  std::optional<Edge> violation;
};

// The intersection graph with columns split into r classes by ver(i, {r1, r2}). Empty
// classes are kept, so there are always exactly r classes.
VerticalPartition vertical_partition(const GridColouring& c, std::size_t r1, std::size_t r2);

}  // namespace gridramsey
