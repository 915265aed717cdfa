#include <algorithm>
#include <set>
#include <stdexcept>

#include "gridramsey/engine.hpp"
#include "gridramsey/splitmix.hpp"

namespace gridramsey {

namespace {

using Cycle = std::array<std::size_t, 4>;

std::vector<std::size_t> normalised(std::vector<std::size_t> set, std::size_t bound, const char* what) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) throw std::invalid_argument(std::string(what) + " set must be non-empty");
  if (set.back() >= bound) throw std::out_of_range(std::string(what) + " index out of range");
  return set;
}

std::size_t ceil_count(const Rational& threshold) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), threshold.get_num_mpz_t(), threshold.get_den_mpz_t());
  return q <= 0 ? 0 : static_cast<std::size_t>(q.get_ui());
}

// Colours packed 16 bits each, first edge most significant, so numeric order is
// lexicographic order of the colour tuple.
std::uint64_t row_code(const GridColouring& c, std::size_t row, const Cycle& cyc) {
  std::uint64_t code = 0;
  for (std::size_t t = 0; t < 4; ++t) code = (code << 16) | c.hor(row, cyc[t], cyc[(t + 1) % 4]);
  return code;
}

ColouredC4 decode(const Cycle& cyc, std::uint64_t code) {
  ColouredC4 out{cyc, {}};
  for (std::size_t t = 0; t < 4; ++t) out.colours[t] = static_cast<Colour>(code >> (16 * (3 - t)));
  return out;
}

// Smallest colour code on the cycle carried by at least `need` rows.
std::optional<std::uint64_t> qualifying_code(const GridColouring& c, const Cycle& cyc,
                                             const std::vector<std::size_t>& rows, std::size_t need,
                                             std::vector<std::uint64_t>& scratch) {
  scratch.clear();
  for (auto b : rows) scratch.push_back(row_code(c, b, cyc));
  std::sort(scratch.begin(), scratch.end());
  for (std::size_t i = 0; i < scratch.size();) {
    std::size_t j = i;
    while (j < scratch.size() && scratch[j] == scratch[i]) ++j;
    if (j - i >= need) return scratch[i];
    i = j;
  }
  return std::nullopt;
}

// The three 4-cycles on p < q < s < t in canonical form, in increasing order.
std::array<Cycle, 3> cycles_on(std::size_t p, std::size_t q, std::size_t s, std::size_t t) {
  return {Cycle{p, q, s, t}, Cycle{p, q, t, s}, Cycle{p, s, q, t}};
}

RowPattern make_row_pattern(const GridColouring& c, const ColouredC4& pattern, const std::vector<std::size_t>& rows) {
  RowPattern out{pattern, {}};
  for (auto b : rows) {
    bool match = true;
    for (std::size_t t = 0; t < 4 && match; ++t)
      match = c.hor(b, pattern.columns[t], pattern.columns[(t + 1) % 4]) == pattern.colours[t];
    if (match) out.rows.push_back(b);
  }
  return out;
}

std::optional<ColouredC4> exact_c4_side(const GridColouring& c, const std::vector<std::size_t>& a,
                                        const std::vector<std::size_t>& b, std::size_t need) {
  const auto n = static_cast<long>(a.size());
  std::vector<std::optional<ColouredC4>> best(a.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> scratch;
#pragma omp for schedule(dynamic)
    for (long p = 0; p < n; ++p) {
      std::optional<ColouredC4> local;
      for (long q = p + 1; q < n; ++q)
        for (long s = q + 1; s < n; ++s)
          for (long t = s + 1; t < n; ++t)
            for (const auto& cyc : cycles_on(a[p], a[q], a[s], a[t])) {
              if (local && cyc > local->columns) continue;
              if (auto code = qualifying_code(c, cyc, b, need, scratch)) {
                const auto candidate = decode(cyc, *code);
                if (!local || candidate < *local) local = candidate;
              }
            }
      best[static_cast<std::size_t>(p)] = local;
    }
  }
  for (const auto& candidate : best)
    if (candidate) return candidate;
  return std::nullopt;
}

std::optional<ColouredC4> sampled_c4_side(const GridColouring& c, const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b, std::size_t need, std::size_t samples,
                                          std::uint64_t seed) {
  if (a.size() < 4) return std::nullopt;
  SplitMix64 rng(seed);
  std::set<Cycle> drawn;
  for (std::size_t k = 0; k < samples; ++k) {
    Cycle pick{};
    for (std::size_t t = 0; t < 4; ++t) {
      bool fresh = false;
      while (!fresh) {
        pick[t] = a[rng.below(a.size())];
        fresh = std::find(pick.begin(), pick.begin() + static_cast<long>(t), pick[t]) == pick.begin() + static_cast<long>(t);
      }
    }
    drawn.insert(canonical_c4(pick, {}).columns);
  }
  std::vector<std::uint64_t> scratch;
  for (const auto& cyc : drawn)
    if (auto code = qualifying_code(c, cyc, b, need, scratch)) return decode(cyc, *code);
  return std::nullopt;
}

std::optional<ColumnPattern> edge_side(const GridColouring& c, const std::vector<std::size_t>& a,
                                       const std::vector<std::size_t>& b, std::size_t need) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y) pairs.emplace_back(b[x], b[y]);

  const auto count = static_cast<long>(pairs.size());
  std::vector<std::optional<Colour>> best(pairs.size());
#pragma omp parallel
  {
    std::vector<std::size_t> tally(c.colours());
#pragma omp for schedule(static)
    for (long p = 0; p < count; ++p) {
      const auto [b1, b2] = pairs[static_cast<std::size_t>(p)];
      std::fill(tally.begin(), tally.end(), 0);
      for (auto col : a) ++tally[c.ver(col, b1, b2)];
      for (std::size_t kappa = 0; kappa < tally.size(); ++kappa)
        if (tally[kappa] >= need) {
          best[static_cast<std::size_t>(p)] = static_cast<Colour>(kappa);
          break;
        }
    }
  }
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (!best[p]) continue;
    ColumnPattern out{{pairs[p].first, pairs[p].second, *best[p]}, {}};
    for (auto col : a)
      if (c.ver(col, out.edge.first, out.edge.second) == out.edge.colour) out.columns.push_back(col);
    return out;
  }
  return std::nullopt;
}

}  // namespace

ColouredC4 canonical_c4(std::array<std::size_t, 4> columns, std::array<Colour, 4> colours) {
  std::optional<ColouredC4> best;
  for (int direction = 0; direction < 2; ++direction) {
    for (std::size_t shift = 0; shift < 4; ++shift) {
      ColouredC4 candidate;
      for (std::size_t t = 0; t < 4; ++t) {
        candidate.columns[t] = columns[(t + shift) % 4];
        candidate.colours[t] = colours[(t + shift) % 4];
      }
      if (!best || candidate < *best) best = candidate;
    }
    // Walk the cycle backwards: a1 a4 a3 a2 with colours k4 k3 k2 k1.
    columns = {columns[0], columns[3], columns[2], columns[1]};
    colours = {colours[3], colours[2], colours[1], colours[0]};
  }
  return *best;
}

DichotomyThresholds dichotomy_thresholds(unsigned r, std::size_t a_size, std::size_t b_size,
                                         const Rational& constant_c) {
  const Rational rq{static_cast<unsigned long>(r)};
  const Rational r3 = rq * rq * rq;
  const Rational r4 = r3 * rq;
  DichotomyThresholds out;
  out.rows = (1 + 1 / (4 * r3)) * Rational{static_cast<unsigned long>(b_size)} / r4;
  out.columns = (1 + 1 / (8 * r3) + constant_c / r4) * Rational{static_cast<unsigned long>(a_size)} / rq;
  return out;
}

DichotomyOutcome dichotomy_search(const GridColouring& c, const std::vector<std::size_t>& columns,
                                  const std::vector<std::size_t>& rows, const DichotomyOptions& options) {
  const auto a = normalised(columns, c.columns(), "column");
  const auto b = normalised(rows, c.rows(), "row");
  const auto thresholds = dichotomy_thresholds(c.colours(), a.size(), b.size(), options.constant_c);

  std::optional<ColouredC4> c4;
  if (options.mode == SearchMode::kExact) {
    if (a.size() > options.exact_cap)
      throw CapExceeded("exact dichotomy refused: |A| = " + std::to_string(a.size()) + " exceeds cap " +
                        std::to_string(options.exact_cap));
    c4 = exact_c4_side(c, a, b, ceil_count(thresholds.rows));
  } else {
    c4 = sampled_c4_side(c, a, b, ceil_count(thresholds.rows), options.samples, options.seed);
  }
  if (c4) return make_row_pattern(c, *c4, b);
  if (auto edge = edge_side(c, a, b, ceil_count(thresholds.columns))) return *edge;
  return NoneFound{};
}

std::vector<std::pair<ColouredC4, std::size_t>> c4_pattern_frequencies(const GridColouring& c,
                                                                       const std::vector<std::size_t>& columns,
                                                                       const std::vector<std::size_t>& rows) {
  const auto a = normalised(columns, c.columns(), "column");
  const auto b = normalised(rows, c.rows(), "row");
  std::vector<std::pair<ColouredC4, std::size_t>> out;
  std::vector<std::uint64_t> codes;
  for (std::size_t p = 0; p < a.size(); ++p)
    for (std::size_t q = p + 1; q < a.size(); ++q)
      for (std::size_t s = q + 1; s < a.size(); ++s)
        for (std::size_t t = s + 1; t < a.size(); ++t)
          for (const auto& cyc : cycles_on(a[p], a[q], a[s], a[t])) {
            codes.clear();
            for (auto row : b) codes.push_back(row_code(c, row, cyc));
            std::sort(codes.begin(), codes.end());
            for (std::size_t i = 0; i < codes.size();) {
              std::size_t j = i;
              while (j < codes.size() && codes[j] == codes[i]) ++j;
              out.emplace_back(decode(cyc, codes[i]), j - i);
              i = j;
            }
          }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<ColouredEdge, std::size_t>> edge_pattern_frequencies(const GridColouring& c,
                                                                           const std::vector<std::size_t>& columns,
                                                                           const std::vector<std::size_t>& rows) {
  const auto a = normalised(columns, c.columns(), "column");
  const auto b = normalised(rows, c.rows(), "row");
  std::vector<std::pair<ColouredEdge, std::size_t>> out;
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y) {
      std::vector<std::size_t> tally(c.colours(), 0);
      for (auto col : a) ++tally[c.ver(col, b[x], b[y])];
      for (std::size_t kappa = 0; kappa < tally.size(); ++kappa)
        if (tally[kappa] > 0) out.push_back({{b[x], b[y], static_cast<Colour>(kappa)}, tally[kappa]});
    }
  return out;
}

}  // namespace gridramsey
