#include <algorithm>
#include <map>
#include <set>

#include "gridramsey/engine.hpp"

namespace gridramsey {

namespace {

// Pattern vertices first, then the smallest unused indices; returned ascending.
std::vector<std::size_t> assemble_v(const std::vector<ColouredEdge>& fixed, std::size_t size, std::size_t universe) {
  std::set<std::size_t> v;
  for (const auto& e : fixed) {
    v.insert(e.first);
    v.insert(e.second);
  }
  if (v.size() > size)
    throw InfeasibleV("pinned edges span " + std::to_string(v.size()) + " vertices, more than r+1 = " +
                      std::to_string(size));
  if (universe < size) throw InfeasibleV("fewer than r+1 indices available for V");
  for (std::size_t x = 0; v.size() < size; ++x) v.insert(x);
  return {v.begin(), v.end()};
}

}  // namespace

PigeonholeResult final_pigeonhole(const GridColouring& c, const RefinementState& state, PigeonholeCase which) {
  const bool by_columns = which == PigeonholeCase::kColumns;
  const auto& fixed = by_columns ? state.ver_edges : state.hor_edges;
  const std::size_t size = c.colours() + 1;

  PigeonholeResult out;
  out.v = assemble_v(fixed, size, by_columns ? c.rows() : c.columns());

  std::set<std::pair<std::size_t, std::size_t>> pinned;
  for (const auto& e : fixed) pinned.emplace(e.first, e.second);
  std::vector<std::pair<std::size_t, std::size_t>> free_edges;
  for (std::size_t x = 0; x < size; ++x)
    for (std::size_t y = x + 1; y < size; ++y)
      if (!pinned.contains({out.v[x], out.v[y]})) free_edges.emplace_back(out.v[x], out.v[y]);
  out.free_edges = free_edges.size();

  // Columns of A (case 1) or rows of B (case 2) compete for distinct signatures.
  auto candidates = by_columns ? state.columns : state.rows;
  std::sort(candidates.begin(), candidates.end());
  auto colour_on = [&](std::size_t who, const std::pair<std::size_t, std::size_t>& e) {
    return by_columns ? c.ver(who, e.first, e.second) : c.hor(who, e.first, e.second);
  };

  std::map<std::vector<Colour>, std::size_t> seen;
  std::vector<Colour> signature;
  for (auto who : candidates) {
    signature.clear();
    for (const auto& e : free_edges) signature.push_back(colour_on(who, e));
    const auto [it, inserted] = seen.emplace(signature, who);
    if (!inserted) {
      out.twins = std::make_pair(it->second, who);
      break;
    }
  }
  if (!out.twins) return out;

  out.kind = PigeonholeKind::kSignatureCollision;
  const auto [first, second] = *out.twins;
  for (std::size_t x = 0; x < size && !out.rectangle; ++x)
    for (std::size_t y = x + 1; y < size && !out.rectangle; ++y)
      out.rectangle = by_columns ? rectangle_at(c, first, second, out.v[x], out.v[y])
                                 : rectangle_at(c, out.v[x], out.v[y], first, second);
  if (out.rectangle) out.kind = PigeonholeKind::kRectangle;
  return out;
}

}  // namespace gridramsey
