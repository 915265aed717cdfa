#include "gridramsey/grid.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <tuple>

namespace gridramsey {

namespace {

void check_pair(std::size_t n, std::size_t a, std::size_t b, const char* what) {
  if (a >= n || b >= n) throw std::out_of_range(std::string(what) + " index out of range");
  if (a == b) throw std::invalid_argument(std::string(what) + " pair must be distinct");
}

std::vector<std::pair<std::size_t, std::size_t>> all_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(pair_count(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// Columns bucketed by their vertical colour on the row pair.
std::vector<Bitset> vertical_buckets(const GridColouring& c, std::size_t r1, std::size_t r2) {
  std::vector<Bitset> buckets(c.colours(), Bitset(c.columns()));
  for (std::size_t i = 0; i < c.columns(); ++i) buckets[c.ver(i, r1, r2)].set(i);
  return buckets;
}

struct PairScan {
  Graph agreement;
  std::vector<Bitset> buckets;
};

PairScan scan_row_pair(const GridColouring& c, std::size_t r1, std::size_t r2) {
  return {intersection_graph(c, r1, r2), vertical_buckets(c, r1, r2)};
}

}  // namespace

GridColouring::GridColouring(unsigned colours, std::size_t columns, std::size_t rows)
    : colours_(colours),
      columns_(columns),
      rows_(rows),
      column_pairs_(pair_count(columns)),
      row_pairs_(pair_count(rows)) {
  if (colours == 0 || columns == 0 || rows == 0)
    throw std::invalid_argument("grid colouring needs r, M, N >= 1");
  if (colours > 65535) throw std::invalid_argument("at most 65535 colours supported");
  hor_.assign(rows_ * column_pairs_, 0);
  ver_.assign(columns_ * row_pairs_, 0);
}

void GridColouring::set_hor(std::size_t row, std::size_t c1, std::size_t c2, Colour colour) {
  if (row >= rows_) throw std::out_of_range("row index out of range");
  check_pair(columns_, c1, c2, "column");
  if (colour >= colours_) throw std::invalid_argument("colour out of range");
  hor_[row * column_pairs_ + pair_index(columns_, c1, c2)] = colour;
}

void GridColouring::set_ver(std::size_t column, std::size_t r1, std::size_t r2, Colour colour) {
  if (column >= columns_) throw std::out_of_range("column index out of range");
  check_pair(rows_, r1, r2, "row");
  if (colour >= colours_) throw std::invalid_argument("colour out of range");
  ver_[column * row_pairs_ + pair_index(rows_, r1, r2)] = colour;
}

bool is_alternating(const GridColouring& c, const Rectangle& rect) {
  if (rect.c1 >= rect.c2 || rect.r1 >= rect.r2 || rect.c2 >= c.columns() || rect.r2 >= c.rows()) return false;
  return c.hor(rect.r1, rect.c1, rect.c2) == rect.hor_colour && c.hor(rect.r2, rect.c1, rect.c2) == rect.hor_colour &&
         c.ver(rect.c1, rect.r1, rect.r2) == rect.ver_colour && c.ver(rect.c2, rect.r1, rect.r2) == rect.ver_colour;
}

std::optional<Rectangle> rectangle_at(const GridColouring& c, std::size_t c1, std::size_t c2, std::size_t r1,
                                      std::size_t r2) {
  if (c1 > c2) std::swap(c1, c2);
  if (r1 > r2) std::swap(r1, r2);
  Rectangle rect{c1, c2, r1, r2, c.hor(r1, c1, c2), c.ver(c1, r1, r2)};
  if (!is_alternating(c, rect)) return std::nullopt;
  return rect;
}

RowGraph row_graph(const GridColouring& c, std::size_t row) {
  if (row >= c.rows()) throw std::out_of_range("row index out of range");
  RowGraph g;
  g.vertices.resize(c.columns());
  for (std::size_t i = 0; i < c.columns(); ++i) g.vertices[i] = i;
  const auto record = c.hor_record(row);
  g.pair_colours.assign(record.begin(), record.end());
  return g;
}

Graph intersection_graph(const GridColouring& c, std::size_t r1, std::size_t r2) {
  check_pair(c.rows(), r1, r2, "row");
  const auto first = c.hor_record(r1);
  const auto second = c.hor_record(r2);
  Graph g(c.columns());
  std::size_t p = 0;
  for (std::size_t a = 0; a < c.columns(); ++a)
    for (std::size_t b = a + 1; b < c.columns(); ++b, ++p)
      if (first[p] == second[p]) g.add_edge(a, b);
  return g;
}

VerticalPartition vertical_partition(const GridColouring& c, std::size_t r1, std::size_t r2) {
  Graph g = intersection_graph(c, r1, r2);
  std::vector<std::size_t> labels(c.columns());
  for (std::size_t i = 0; i < c.columns(); ++i) labels[i] = c.ver(i, r1, r2);
  const auto buckets = vertical_buckets(c, r1, r2);

  std::optional<Edge> violation;
  for (std::size_t i = 0; i < c.columns() && !violation; ++i)
    if (auto j = first_common_from(g.neighbours(i), buckets[labels[i]], i + 1)) violation = Edge{i, *j};

  return {PartitionedGraph(std::move(g), std::move(labels), c.colours()), violation};
}

std::optional<Rectangle> find_alternating_rectangle(const GridColouring& c) {
  const std::size_t m = c.columns();
  const std::size_t n = c.rows();
  // Column pairs are keyed c1 * m + c2; work on keys above the best one found so far is skipped.
  const std::uint64_t none = static_cast<std::uint64_t>(m) * m;
  std::atomic<std::uint64_t> bound{none};
  struct Hit {
    std::uint64_t key;
    std::size_t r1, r2;
  };
  std::vector<Hit> best(m, Hit{none, 0, 0});

  const auto count = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic)
  for (long a = 0; a < count; ++a) {
    const auto c1 = static_cast<std::size_t>(a);
    std::vector<Colour> h(n);
    const auto v1 = c.ver_record(c1);
    for (std::size_t c2 = c1 + 1; c2 < m; ++c2) {
      const std::uint64_t key = static_cast<std::uint64_t>(c1) * m + c2;
      if (key > bound.load(std::memory_order_relaxed)) break;
      for (std::size_t r = 0; r < n; ++r) h[r] = c.hor(r, c1, c2);
      const auto v2 = c.ver_record(c2);
      std::size_t q = 0;
      bool hit = false;
      for (std::size_t r1 = 0; r1 < n && !hit; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < n; ++r2, ++q)
          if (v1[q] == v2[q] && h[r1] == h[r2]) {
            best[c1] = {key, r1, r2};
            hit = true;
            break;
          }
      if (hit) {
        auto current = bound.load(std::memory_order_relaxed);
        while (key < current && !bound.compare_exchange_weak(current, key, std::memory_order_relaxed)) {
        }
        break;
      }
    }
  }

  const auto winner = std::min_element(best.begin(), best.end(), [](const Hit& x, const Hit& y) { return x.key < y.key; });
  if (winner == best.end() || winner->key == none) return std::nullopt;
  return rectangle_at(c, winner->key / m, winner->key % m, winner->r1, winner->r2);
}

std::uint64_t count_alternating_rectangles(const GridColouring& c) {
  const auto row_pairs = all_pairs(c.rows());
  const auto count = static_cast<long>(row_pairs.size());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long p = 0; p < count; ++p) {
    const auto [r1, r2] = row_pairs[static_cast<std::size_t>(p)];
    const auto scan = scan_row_pair(c, r1, r2);
    std::uint64_t twice = 0;
    for (std::size_t i = 0; i < c.columns(); ++i)
      twice += intersection_count(scan.agreement.neighbours(i), scan.buckets[c.ver(i, r1, r2)]);
    total += twice / 2;
  }
  return total;
}

}  // namespace gridramsey
