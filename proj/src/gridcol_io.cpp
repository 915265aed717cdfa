#include <sstream>

#include "gridramsey/grid.hpp"
#include "gridramsey/splitmix.hpp"
#include "tokenizer.hpp"

namespace gridramsey {

GridColouring parse_colouring(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.size() < 2 || tokens[0].text != "GRIDCOL")
    throw ParseError(tokens.empty() ? 1 : tokens[0].line, "malformed header: expected 'GRIDCOL 1'");
  if (tokens[1].text != "1") throw ParseError(tokens[1].line, "unsupported GRIDCOL version '" + std::string(tokens[1].text) + "'");
  if (tokens.size() < 5) throw ParseError(tokens.back().line, "malformed header: expected '<r> <M> <N>'");

  const auto r = detail::to_uint(tokens[2]);
  const auto m = detail::to_uint(tokens[3]);
  const auto n = detail::to_uint(tokens[4]);
  if (r == 0 || m == 0 || n == 0) throw ParseError(tokens[2].line, "malformed header: r, M, N must be positive");
  if (r > 65535) throw ParseError(tokens[2].line, "malformed header: r exceeds 65535");

  GridColouring c(static_cast<unsigned>(r), m, n);
  const std::size_t expected = n * pair_count(m) + m * pair_count(n);
  const std::size_t found = tokens.size() - 5;
  if (found != expected) {
    const auto line = found > expected ? tokens[5 + expected].line : tokens.back().line;
    throw ParseError(line, "wrong token count: expected " + std::to_string(expected) + " colours, found " +
                               std::to_string(found));
  }

  std::size_t t = 5;
  auto take = [&](std::span<Colour> record) {
    for (auto& slot : record) {
      const auto value = detail::to_uint(tokens[t]);
      if (value >= r) throw ParseError(tokens[t].line, "colour out of range: " + std::string(tokens[t].text));
      slot = static_cast<Colour>(value);
      ++t;
    }
  };
  for (std::size_t j = 0; j < n; ++j) take(c.hor_record(j));
  for (std::size_t i = 0; i < m; ++i) take(c.ver_record(i));
  return c;
}

GridColouring read_colouring_file(const std::string& path) { return parse_colouring(detail::slurp(path)); }

std::string serialize_colouring(const GridColouring& c) {
  std::ostringstream out;
  out << "GRIDCOL 1\n" << c.colours() << ' ' << c.columns() << ' ' << c.rows() << '\n';
  auto emit = [&](std::span<const Colour> record) {
    for (std::size_t p = 0; p < record.size(); ++p) out << (p ? " " : "") << record[p];
    out << '\n';
  };
  for (std::size_t j = 0; j < c.rows(); ++j) emit(c.hor_record(j));
  for (std::size_t i = 0; i < c.columns(); ++i) emit(c.ver_record(i));
  return out.str();
}

GridColouring random_colouring(unsigned colours, std::size_t columns, std::size_t rows, std::uint64_t seed) {
  GridColouring c(colours, columns, rows);
  SplitMix64 rng(seed);
  for (std::size_t j = 0; j < rows; ++j)
    for (auto& slot : c.hor_record(j)) slot = static_cast<Colour>(rng.below(colours));
  for (std::size_t i = 0; i < columns; ++i)
    for (auto& slot : c.ver_record(i)) slot = static_cast<Colour>(rng.below(colours));
  return c;
}

}  // namespace gridramsey
