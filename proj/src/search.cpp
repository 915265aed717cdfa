#include "gridramsey/search.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "gridramsey/splitmix.hpp"

namespace gridramsey {

namespace {

struct Variable {
  bool horizontal = false;
  std::size_t line = 0;  // row for horizontal, column for vertical
  std::size_t a = 0;     // pair a < b
  std::size_t b = 0;
  bool forced = false;
  Colour offset = 0;
};

std::vector<Variable> variable_order(const SearchOptions& o) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < o.columns; ++i)
    for (std::size_t j1 = 0; j1 < o.rows; ++j1)
      for (std::size_t j2 = j1 + 1; j2 < o.rows; ++j2) vars.push_back({false, i, j1, j2, o.symmetry_breaking && i == 0, 0});
  for (std::size_t j = 0; j < o.rows; ++j)
    for (std::size_t i1 = 0; i1 < o.columns; ++i1)
      for (std::size_t i2 = i1 + 1; i2 < o.columns; ++i2) vars.push_back({true, j, i1, i2, o.symmetry_breaking && j == 0, 0});
  SplitMix64 rng(o.seed);
  for (auto& v : vars) v.offset = static_cast<Colour>(rng.below(o.colours));
  return vars;
}

// Would hor(row, {a, b}) = colour close a rectangle with an earlier row?
bool closes_rectangle(const GridColouring& c, std::size_t row, std::size_t a, std::size_t b, Colour colour) {
  for (std::size_t earlier = 0; earlier < row; ++earlier)
    if (c.hor(earlier, a, b) == colour && c.ver(a, earlier, row) == c.ver(b, earlier, row)) return true;
  return false;
}

}  // namespace

const char* to_string(SearchResult result) {
  switch (result) {
    case SearchResult::kWitness: return "WITNESS";
    case SearchResult::kExhausted: return "EXHAUSTED_NO_WITNESS";
    case SearchResult::kTimeout: return "TIMEOUT";
  }
  return "?";
}

SearchOutcome exhaustive_search(const SearchOptions& options) {
  if (options.colours == 0 || options.columns == 0 || options.rows == 0)
    throw std::invalid_argument("search needs r, M, N >= 1");
  const auto start = std::chrono::steady_clock::now();
  const auto vars = variable_order(options);
  const unsigned r = options.colours;

  GridColouring grid(r, options.columns, options.rows);
  // tried[d]: how many colours of variable d have been attempted.
  std::vector<unsigned> tried(vars.size(), 0);
  SearchOutcome out;

  auto finish = [&](SearchResult kind) {
    out.kind = kind;
    out.elapsed = std::chrono::steady_clock::now() - start;
    if (kind == SearchResult::kWitness) out.witness = grid;
    return out;
  };

  std::size_t depth = 0;
  while (true) {
    if (depth == vars.size()) return finish(SearchResult::kWitness);
    const auto& v = vars[depth];
    const unsigned limit = v.forced ? 1 : r;
    if (tried[depth] == limit) {
      tried[depth] = 0;
      if (depth == 0) return finish(SearchResult::kExhausted);
      --depth;
      continue;
    }
    const auto colour = v.forced ? Colour{0} : static_cast<Colour>((v.offset + tried[depth]) % r);
    ++tried[depth];
    ++out.nodes;

    if ((out.nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() - start >= options.timeout)
      return finish(SearchResult::kTimeout);
    if (options.progress && out.nodes % options.progress_interval == 0)
      *options.progress << "NODES " << out.nodes << " DEPTH " << depth << '\n';

    if (v.horizontal) {
      if (closes_rectangle(grid, v.line, v.a, v.b, colour)) continue;
      grid.set_hor(v.line, v.a, v.b, colour);
    } else {
      grid.set_ver(v.line, v.a, v.b, colour);
    }
    ++depth;
  }
}

bool verify_witness(const GridColouring& c) { return !find_alternating_rectangle(c).has_value(); }

}  // namespace gridramsey
