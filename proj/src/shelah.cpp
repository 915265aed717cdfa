#include <algorithm>
#include <map>
#include <stdexcept>

#include "gridramsey/engine.hpp"

namespace gridramsey {

ShelahResult shelah_extract(const GridColouring& c, std::optional<std::vector<std::size_t>> rows) {
  const std::size_t need = c.colours() + 1;
  if (c.rows() < need) throw std::invalid_argument("need at least r+1 rows");

  ShelahResult out;
  if (rows) {
    out.rows = *rows;
    std::sort(out.rows.begin(), out.rows.end());
    if (out.rows.size() != need || std::adjacent_find(out.rows.begin(), out.rows.end()) != out.rows.end() ||
        out.rows.back() >= c.rows())
      throw std::invalid_argument("expected r+1 distinct rows in range");
  } else {
    out.rows.resize(need);
    for (std::size_t l = 0; l < need; ++l) out.rows[l] = l;
  }

  std::map<std::vector<Colour>, std::size_t> seen;
  std::vector<Colour> signature;
  for (std::size_t i = 0; i < c.columns(); ++i) {
    signature.clear();
    for (std::size_t a = 0; a < need; ++a)
      for (std::size_t b = a + 1; b < need; ++b) signature.push_back(c.ver(i, out.rows[a], out.rows[b]));
    const auto [it, inserted] = seen.emplace(signature, i);
    if (!inserted) {
      out.twins = std::make_pair(it->second, i);
      break;
    }
  }
  if (!out.twins) return out;

  // r+1 horizontal edges between the twins in r colours: two must agree.
  const auto [c1, c2] = *out.twins;
  for (std::size_t a = 0; a < need && !out.rectangle; ++a)
    for (std::size_t b = a + 1; b < need && !out.rectangle; ++b)
      out.rectangle = rectangle_at(c, c1, c2, out.rows[a], out.rows[b]);
  return out;
}

}  // namespace gridramsey
