#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gridramsey/grid.hpp"
#include "gridramsey/rational.hpp"

namespace gridramsey {

// ---------------------------------------------------------------------------
// Signature pigeonhole on r+1 fixed rows.

struct ShelahResult {
  std::vector<std::size_t> rows;                            // the fixed K_{r+1}, ascending
  std::optional<std::pair<std::size_t, std::size_t>> twins; // first colliding column pair
  std::optional<Rectangle> rectangle;                       // absent iff no collision
};

// rows defaults to the first r+1 rows. Throws std::invalid_argument if fewer than r+1 rows
// exist or the given rows are not r+1 distinct in-range indices.
ShelahResult shelah_extract(const GridColouring& c, std::optional<std::vector<std::size_t>> rows = std::nullopt);

// ---------------------------------------------------------------------------
// Dichotomy patterns.

// Cycle a1 a2 a3 a4 with colours[t] on edge (a_t, a_{t+1}), a5 = a1. Stored canonically:
// a1 is the smallest column and a2 < a4.
struct ColouredC4 {
  std::array<std::size_t, 4> columns{};
  std::array<Colour, 4> colours{};
  friend bool operator==(const ColouredC4&, const ColouredC4&) = default;
  friend auto operator<=>(const ColouredC4&, const ColouredC4&) = default;
};

// Rotates/reflects an ordered 4-cycle (with its edge colours) into canonical form.
ColouredC4 canonical_c4(std::array<std::size_t, 4> columns, std::array<Colour, 4> colours);

struct ColouredEdge {
  std::size_t first = 0;   // first < second
  std::size_t second = 0;
  Colour colour = 0;
  friend bool operator==(const ColouredEdge&, const ColouredEdge&) = default;
  friend auto operator<=>(const ColouredEdge&, const ColouredEdge&) = default;
};

struct RowPattern {
  ColouredC4 pattern;
  std::vector<std::size_t> rows;  // rows of B containing the pattern
};

struct ColumnPattern {
  ColouredEdge edge;
  std::vector<std::size_t> columns;  // columns of A containing the edge
};

struct NoneFound {};

using DichotomyOutcome = std::variant<RowPattern, ColumnPattern, NoneFound>;

struct DichotomyThresholds {
  Rational rows;     // (1 + 1/(4 r^3)) |B| / r^4
  Rational columns;  // (1 + 1/(8 r^3) + C / r^4) |A| / r
};

DichotomyThresholds dichotomy_thresholds(unsigned r, std::size_t a_size, std::size_t b_size,
                                         const Rational& constant_c);

enum class SearchMode { kExact, kSampled };

struct DichotomyOptions {
  Rational constant_c{20};
  SearchMode mode = SearchMode::kExact;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t exact_cap = 40;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Searches the restriction of c to K_A x K_B. Row patterns take precedence over column
// patterns; within each side the lexicographically smallest qualifying pattern wins.
// Throws CapExceeded when exact mode is asked for |A| > exact_cap, std::invalid_argument for
// empty A/B, std::out_of_range for indices outside the grid.
DichotomyOutcome dichotomy_search(const GridColouring& c, const std::vector<std::size_t>& columns,
                                  const std::vector<std::size_t>& rows, const DichotomyOptions& options = {});

// Row count of every canonical coloured C4 on A that occurs in some row of B.
std::vector<std::pair<ColouredC4, std::size_t>> c4_pattern_frequencies(const GridColouring& c,
                                                                       const std::vector<std::size_t>& columns,
                                                                       const std::vector<std::size_t>& rows);

// Column count of every coloured row pair of B that occurs in some column of A.
std::vector<std::pair<ColouredEdge, std::size_t>> edge_pattern_frequencies(const GridColouring& c,
                                                                           const std::vector<std::size_t>& columns,
                                                                           const std::vector<std::size_t>& rows);

// ---------------------------------------------------------------------------
// Iterative refinement.

struct RefinementState {
  std::size_t step = 0;
  std::vector<std::size_t> columns;           // A
  std::vector<std::size_t> rows;              // B
  std::vector<ColouredEdge> hor_edges;        // coloured column pairs fixed on every row of B
  std::vector<ColouredEdge> ver_edges;        // coloured row pairs fixed on every column of A
  std::size_t column_steps = 0;               // J
  friend bool operator==(const RefinementState&, const RefinementState&) = default;
};

// kExhausted: A or B ran empty, leaving nothing to search.
enum class StopReason { kStepBudget, kNoneFound, kRowFloor, kExhausted };

const char* to_string(StopReason reason);

struct RefineOptions {
  std::optional<std::size_t> max_steps;  // defaults to floor(r / 8)
  DichotomyOptions dichotomy;
  bool enforce_row_floor = true;         // stop once |B| < r^5
};

struct Refinement {
  std::vector<RefinementState> states;
  StopReason stop = StopReason::kStepBudget;
};

Refinement refine(const GridColouring& c, const RefineOptions& options = {});

struct InvariantReport {
  bool disjoint = false;     // pinned edges avoid A (hor) and B (ver)
  bool pinned = false;       // pinned colours hold on every row of B / column of A
  bool counts = false;       // |Ehor| = 4(i - J), |Ever| = J
  bool sizes = false;        // the two size lower bounds
  bool all() const { return disjoint && pinned && counts && sizes; }
};

InvariantReport check_invariants(const GridColouring& c, const RefinementState& state, const Rational& constant_c);

// Trajectory dump: one "STEP i J |A| |B| |Ehor| |Ever|" line per state, the stop reason
// appended to the last one. With verbose, each STEP line is followed by indented
// "A", "B", "EHOR", "EVER" member lists (1-based indices, colours 0-based, edges as
// "x y colour" triples).
std::string serialize_trajectory(const Refinement& refinement, bool verbose);

// The last state of a verbose trajectory dump. Throws ParseError.
RefinementState parse_final_state(std::string_view text);

// ---------------------------------------------------------------------------
// Final pigeonhole.

enum class PigeonholeCase {
  kColumns,  // case 1: V is a set of rows, signatures of columns of A
  kRows,     // case 2: V is a set of columns, signatures of rows of B
};

enum class PigeonholeKind { kRectangle, kSignatureCollision, kNoCollision };

struct PigeonholeResult {
  PigeonholeKind kind = PigeonholeKind::kNoCollision;
  std::vector<std::size_t> v;                               // ascending
  std::size_t free_edges = 0;                               // m
  std::optional<std::pair<std::size_t, std::size_t>> twins; // colliding columns (case 1) or rows (case 2)
  std::optional<Rectangle> rectangle;
};

class InfeasibleV : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PigeonholeResult final_pigeonhole(const GridColouring& c, const RefinementState& state, PigeonholeCase which);

// ---------------------------------------------------------------------------
// Bound evaluation.

struct BoundsReport {
  unsigned r = 0;
  Integer shelah;
  Integer gyarfas;
  Rational threshold;       // rectangle guaranteed for every N above this
  Rational constant_c;
  std::size_t worst_j = 0;  // the J attaining the threshold
  int worst_case = 0;       // 1 or 2
  bool valid = false;
  std::string note;
};

// Throws std::invalid_argument for r < 2.
BoundsReport bounds_table(unsigned r, const Rational& constant_c = Rational{20});

// Threshold contribution of one J in [0, floor(r/8)].
Rational case_threshold(unsigned r, std::size_t j, const Rational& constant_c, int* which_case = nullptr);

}  // namespace gridramsey
