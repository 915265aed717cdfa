#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "gridramsey/grid.hpp"
#include "gridramsey/reference.hpp"
#include "gridramsey/search.hpp"
#include "oracles.hpp"

using namespace gridramsey;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GridColouring zeros(unsigned r, std::size_t m, std::size_t n) { return GridColouring(r, m, n); }

// Every colouring with r = 2, M = N = 2 (4 edges) from its bit pattern.
// Colouring of K_2 x K_2 from the base-r digits of code: hor row 0, hor row 1, ver col 0, ver col 1.
GridColouring from_digits(unsigned r, unsigned code) {
  GridColouring c(r, 2, 2);
  c.set_hor(0, 0, 1, code % r);
  c.set_hor(1, 0, 1, code / r % r);
  c.set_ver(0, 0, 1, code / (r * r) % r);
  c.set_ver(1, 0, 1, code / (r * r * r) % r);
  return c;
}

bool every_partition_legal(const GridColouring& c) {
  for (std::size_t j1 = 0; j1 < c.rows(); ++j1)
    for (std::size_t j2 = j1 + 1; j2 < c.rows(); ++j2)
      if (vertical_partition(c, j1, j2).violation) return false;
  return true;
}

}  // namespace

TEST_CASE("pair_index enumerates pairs lexicographically") {
  std::size_t expected = 0;
  for (std::size_t a = 0; a < 7; ++a)
    for (std::size_t b = a + 1; b < 7; ++b) {
      CHECK(pair_index(7, a, b) == expected);
      CHECK(pair_index(7, b, a) == expected);
      ++expected;
    }
  CHECK(pair_count(7) == expected);
}

TEST_CASE("GridColouring rejects bad dimensions and colours") {
  CHECK_THROWS_AS(GridColouring(0, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(GridColouring(2, 0, 2), std::invalid_argument);
  GridColouring c(2, 3, 3);
  CHECK_THROWS_AS(c.set_hor(0, 1, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(c.set_hor(3, 0, 1, 0), std::out_of_range);
  CHECK_THROWS_AS(c.set_ver(0, 0, 1, 2), std::invalid_argument);
  c.set_hor(1, 2, 0, 1);
  CHECK(c.hor(1, 0, 2) == 1);
  CHECK(c.hor(1, 2, 0) == 1);
}

TEST_CASE("parse_colouring") {
  SUBCASE("minimal r=1 2x2 file") {
    const auto c = parse_colouring("GRIDCOL 1\n1 2 2\n0\n0\n0\n0\n");
    CHECK(c.colours() == 1);
    CHECK(c.hor_record(0).size() + c.hor_record(1).size() == 2);
    CHECK(c.ver_record(0).size() + c.ver_record(1).size() == 2);
  }
  SUBCASE("colour equal to r is out of range, with its line") {
    try {
      parse_colouring("GRIDCOL 1\n2 2 2\n0\n1\n2\n0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(std::string(e.what()).find("colour out of range") != std::string::npos);
    }
  }
  SUBCASE("malformed header") {
    CHECK_THROWS_AS(parse_colouring("GRIDCOL 2\n1 2 2\n0\n0\n0\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring("GRID 1\n1 2 2\n0\n0\n0\n0\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring("GRIDCOL 1\n0 2 2\n"), ParseError);
    CHECK_THROWS_AS(parse_colouring(""), ParseError);
  }
  SUBCASE("wrong token count") {
    try {
      parse_colouring("GRIDCOL 1\n1 2 2\n0\n0\n0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("wrong token count") != std::string::npos);
    }
    try {
      parse_colouring("GRIDCOL 1\n1 2 2\n0\n0\n0\n0\n0 # extra\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 7);
    }
  }
  SUBCASE("non-integer token") {
    try {
      parse_colouring("GRIDCOL 1\n1 2 2\n0\nx\n0\n0\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("non-integer") != std::string::npos);
    }
  }
}

TEST_CASE("serialize_colouring") {
  CHECK(serialize_colouring(zeros(1, 2, 2)) == "GRIDCOL 1\n1 2 2\n0\n0\n0\n0\n");

  SUBCASE("comments and layout are canonicalised away for a seeded 3x4 instance") {
    const auto c = random_colouring(3, 3, 4, 2024);
    const auto canonical = serialize_colouring(c);
    std::string messy = "# leading comment\n";
    for (char ch : canonical) messy += ch == '\n' ? std::string("   # note\n\n") : ch == ' ' ? std::string("\t ") : std::string(1, ch);
    CHECK(serialize_colouring(parse_colouring(messy)) == canonical);
  }

  SUBCASE("equal maps give identical bytes regardless of construction order") {
    const auto target = random_colouring(3, 4, 5, 77);
    GridColouring rebuilt(3, 4, 5);
    struct Entry {
      bool hor;
      std::size_t line, a, b;
    };
    std::vector<Entry> entries;
    for (std::size_t j = 0; j < 5; ++j)
      for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) entries.push_back({true, j, b, a});
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = a + 1; b < 5; ++b) entries.push_back({false, i, b, a});
    std::mt19937 shuffle_rng(5);
    std::shuffle(entries.begin(), entries.end(), shuffle_rng);
    for (const auto& e : entries) {
      if (e.hor)
        rebuilt.set_hor(e.line, e.a, e.b, target.hor(e.line, e.a, e.b));
      else
        rebuilt.set_ver(e.line, e.a, e.b, target.ver(e.line, e.a, e.b));
    }
    CHECK(rebuilt == target);
    CHECK(serialize_colouring(rebuilt) == serialize_colouring(target));
  }

  SUBCASE("parse . serialize is the identity") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto c = random_colouring(1 + seed % 5, 1 + seed % 6, 1 + (seed / 3) % 6, seed);
      CHECK(parse_colouring(serialize_colouring(c)) == c);
    }
  }
}

TEST_CASE("random_colouring") {
  for (std::uint64_t seed : {0ULL, 1ULL, 12345ULL}) CHECK(random_colouring(1, 4, 5, seed) == zeros(1, 4, 5));
  CHECK(random_colouring(3, 5, 4, 9) == random_colouring(3, 5, 4, 9));
  CHECK_FALSE(random_colouring(3, 5, 4, 9) == random_colouring(3, 5, 4, 10));
  // Golden file produced by an independent splitmix64 implementation.
  CHECK(serialize_colouring(random_colouring(2, 3, 3, 42)) == read_text(GRIDRAMSEY_TEST_DATA "/r2_m3_n3_seed42.gridcol"));
}

TEST_CASE("find_alternating_rectangle") {
  const auto rect = find_alternating_rectangle(zeros(1, 2, 2));
  REQUIRE(rect);
  CHECK(*rect == Rectangle{0, 1, 0, 1, 0, 0});

  GridColouring mismatch(2, 2, 2);
  mismatch.set_hor(1, 0, 1, 1);
  mismatch.set_ver(1, 0, 1, 1);
  CHECK_FALSE(find_alternating_rectangle(mismatch));
  mismatch.set_ver(1, 0, 1, 0);
  CHECK_FALSE(find_alternating_rectangle(mismatch));

  SUBCASE("r = 2, M = 9, N = 3 always has one") {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
      const auto c = random_colouring(2, 9, 3, seed);
      const auto found = find_alternating_rectangle(c);
      REQUIRE(found);
      CHECK(is_alternating(c, *found));
    }
  }

  SUBCASE("lexicographically smallest, matching the serial reference") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto c = random_colouring(2 + seed % 6, 2 + seed % 9, 2 + (seed / 7) % 9, seed);
      CHECK(find_alternating_rectangle(c) == reference::find_alternating_rectangle(c));
    }
  }
}

TEST_CASE("count_alternating_rectangles") {
  CHECK(count_alternating_rectangles(zeros(1, 2, 2)) == 1);
  CHECK(count_alternating_rectangles(zeros(1, 3, 3)) == 9);

  const auto c = random_colouring(2, 5, 5, 31337);
  const auto oracle_count = oracle::count_rectangles_rows_first(c);
  CHECK(count_alternating_rectangles(c) == oracle_count);
  CHECK(reference::count_alternating_rectangles(c) == oracle_count);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto g = random_colouring(2 + seed % 4, 1 + seed % 7, 1 + (seed / 5) % 7, seed);
    const auto count = count_alternating_rectangles(g);
    CHECK(count == reference::count_alternating_rectangles(g));
    CHECK((count == 0) == !find_alternating_rectangle(g).has_value());
  }
}

TEST_CASE("row_graph") {
  const auto single = row_graph(zeros(2, 2, 3), 1);
  CHECK(single.vertices.size() == 2);
  CHECK(single.pair_colours.size() == 1);

  const auto mono = row_graph(zeros(3, 5, 2), 0);
  CHECK(std::all_of(mono.pair_colours.begin(), mono.pair_colours.end(), [](Colour k) { return k == 0; }));

  CHECK_THROWS_AS(row_graph(zeros(2, 2, 3), 3), std::out_of_range);

  SUBCASE("colours match the GRIDCOL token at the documented offset") {
    const auto c = random_colouring(4, 6, 5, 8);
    std::istringstream in(serialize_colouring(c));
    std::vector<unsigned> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok == "GRIDCOL" ? 0 : static_cast<unsigned>(std::stoul(tok)));
    // tokens: GRIDCOL 1 r M N, then rows of M(M-1)/2 colours.
    for (std::size_t j = 0; j < 5; ++j) {
      const auto g = row_graph(c, j);
      std::size_t offset = 5 + j * 15;
      for (std::size_t x = 0; x < 6; ++x)
        for (std::size_t y = x + 1; y < 6; ++y, ++offset) CHECK(g.colour(y, x) == tokens[offset]);
    }
  }
}

TEST_CASE("intersection_graph") {
  const auto same = intersection_graph(zeros(3, 6, 2), 0, 1);
  CHECK(same.edge_count() == 15);

  GridColouring apart(2, 5, 2);
  for (auto& k : apart.hor_record(1)) k = 1;
  CHECK(intersection_graph(apart, 0, 1).edge_count() == 0);

  CHECK(intersection_graph(random_colouring(1, 7, 3, 4), 0, 2).edge_count() == 21);

  const auto c = random_colouring(3, 8, 6, 3);
  for (std::size_t j1 = 0; j1 < 6; ++j1)
    for (std::size_t j2 = j1 + 1; j2 < 6; ++j2) CHECK(intersection_graph(c, j1, j2) == intersection_graph(c, j2, j1));

  CHECK_THROWS_AS(intersection_graph(c, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(intersection_graph(c, 0, 6), std::out_of_range);
}

TEST_CASE("vertical_partition") {
  SUBCASE("constant vertical colour with identical rows is one illegal class") {
    const auto vp = vertical_partition(zeros(2, 4, 2), 0, 1);
    CHECK(vp.partition.class_count() == 2);
    CHECK(vp.partition.classes()[0].size() == 4);
    CHECK(vp.partition.classes()[1].empty());
    REQUIRE(vp.violation);
    CHECK(*vp.violation == Edge{0, 1});
    CHECK(find_alternating_rectangle(zeros(2, 4, 2)));
  }

  SUBCASE("search witnesses give legal r-partitions for every row pair") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      SearchOptions options;
      options.colours = 2;
      options.columns = 4;
      options.rows = 4;
      options.seed = seed;
      options.timeout = std::chrono::seconds(10);
      const auto outcome = exhaustive_search(options);
      REQUIRE(outcome.witness);
      CHECK_FALSE(find_alternating_rectangle(*outcome.witness));
      CHECK(every_partition_legal(*outcome.witness));
      CHECK(vertical_partition(*outcome.witness, 0, 3).partition.class_count() == 2);
    }
  }

  SUBCASE("rectangle-free iff every vertical partition is legal") {
    for (unsigned r : {2u, 4u})
      for (unsigned code = 0; code < r * r * r * r; ++code) {
        const auto c = from_digits(r, code);
        CHECK(!find_alternating_rectangle(c).has_value() == every_partition_legal(c));
      }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto c = random_colouring(2 + seed % 3, 1 + seed % 6, 1 + (seed / 6) % 6, seed);
      CHECK(!find_alternating_rectangle(c).has_value() == every_partition_legal(c));
    }
  }
}
