#include <algorithm>

#include "gridramsey/engine.hpp"

namespace gridramsey {

namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::size_t> iota_vector(std::size_t n) {
  std::vector<std::size_t> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

ColouredEdge coloured_edge(std::size_t x, std::size_t y, Colour colour) {
  return x < y ? ColouredEdge{x, y, colour} : ColouredEdge{y, x, colour};
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kStepBudget: return "STEP_BUDGET";
    case StopReason::kNoneFound: return "NONE_FOUND";
    case StopReason::kRowFloor: return "ROW_FLOOR";
    case StopReason::kExhausted: return "EXHAUSTED";
  }
  return "?";
}

Refinement refine(const GridColouring& c, const RefineOptions& options) {
  const unsigned r = c.colours();
  const std::size_t budget = options.max_steps.value_or(r / 8);
  const Integer row_floor = ipow(r, 5);

  Refinement out;
  out.states.push_back({0, iota_vector(c.columns()), iota_vector(c.rows()), {}, {}, 0});

  while (true) {
    const auto& current = out.states.back();
    if (current.step >= budget) {
      out.stop = StopReason::kStepBudget;
      break;
    }
    if (options.enforce_row_floor && Integer{static_cast<unsigned long>(current.rows.size())} < row_floor) {
      out.stop = StopReason::kRowFloor;
      break;
    }
    if (current.columns.empty() || current.rows.empty()) {
      out.stop = StopReason::kExhausted;
      break;
    }

    const auto outcome = dichotomy_search(c, current.columns, current.rows, options.dichotomy);
    if (std::holds_alternative<NoneFound>(outcome)) {
      out.stop = StopReason::kNoneFound;
      break;
    }

    RefinementState next = current;
    next.step = current.step + 1;
    std::visit(Overloaded{
                   [&](const RowPattern& found) {
                     const auto& cols = found.pattern.columns;
                     std::erase_if(next.columns, [&](std::size_t a) {
                       return std::find(cols.begin(), cols.end(), a) != cols.end();
                     });
                     for (std::size_t t = 0; t < 4; ++t)
                       next.hor_edges.push_back(coloured_edge(cols[t], cols[(t + 1) % 4], found.pattern.colours[t]));
                     next.rows = found.rows;
                   },
                   [&](const ColumnPattern& found) {
                     next.columns = found.columns;
                     std::erase_if(next.rows, [&](std::size_t b) {
                       return b == found.edge.first || b == found.edge.second;
                     });
                     next.ver_edges.push_back(found.edge);
                     ++next.column_steps;
                   },
                   [](const NoneFound&) {},
               },
               outcome);
    out.states.push_back(std::move(next));
  }
  return out;
}

InvariantReport check_invariants(const GridColouring& c, const RefinementState& state, const Rational& constant_c) {
  auto a = state.columns;
  auto b = state.rows;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());

  InvariantReport report;
  report.disjoint = std::none_of(state.hor_edges.begin(), state.hor_edges.end(),
                                 [&](const ColouredEdge& e) { return contains(a, e.first) || contains(a, e.second); }) &&
                    std::none_of(state.ver_edges.begin(), state.ver_edges.end(),
                                 [&](const ColouredEdge& e) { return contains(b, e.first) || contains(b, e.second); });

  report.pinned = true;
  for (const auto& e : state.hor_edges)
    for (auto row : b) report.pinned = report.pinned && c.hor(row, e.first, e.second) == e.colour;
  for (const auto& e : state.ver_edges)
    for (auto col : a) report.pinned = report.pinned && c.ver(col, e.first, e.second) == e.colour;

  const auto i = state.step;
  const auto j = state.column_steps;
  report.counts = j <= i && state.hor_edges.size() == 4 * (i - j) && state.ver_edges.size() == j;
  if (!report.counts) return report;

  const unsigned r = c.colours();
  const Rational rq{static_cast<unsigned long>(r)};
  const Rational beta = 1 / (8 * rq * rq * rq) + constant_c / (rq * rq * rq * rq);
  const Rational gamma = 1 / (4 * rq * rq * rq);
  const Rational a_floor = qpow(1 + beta, j) * qpow_signed(r, -static_cast<long>(j)) *
                               Rational{static_cast<unsigned long>(c.columns())} -
                           Rational{static_cast<unsigned long>(4 * (i - j))};
  const Rational b_floor = qpow(1 + gamma, i - j) * qpow_signed(r, -4 * static_cast<long>(i - j)) *
                               Rational{static_cast<unsigned long>(c.rows())} -
                           Rational{static_cast<unsigned long>(2 * j)};
  report.sizes = Rational{static_cast<unsigned long>(a.size())} >= a_floor &&
                 Rational{static_cast<unsigned long>(b.size())} >= b_floor;
  return report;
}

}  // namespace gridramsey
