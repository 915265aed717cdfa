#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "gridramsey/engine.hpp"
#include "gridramsey/grid.hpp"
#include "gridramsey/quasirand.hpp"
#include "gridramsey/search.hpp"
#include "gridramsey/splitmix.hpp"

namespace gridramsey::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "1,3,5-8" -> {0, 2, 4, 5, 6, 7}
std::vector<std::size_t> parse_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  auto number = [&](const std::string& s) -> std::size_t {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty() || v == 0) throw UsageError("bad index list '" + text + "'");
    return v - 1;
  };
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      out.push_back(number(item));
    } else {
      const auto lo = number(item.substr(0, dash));
      const auto hi = number(item.substr(dash + 1));
      if (hi < lo) throw UsageError("bad index range '" + item + "'");
      for (auto x = lo; x <= hi; ++x) out.push_back(x);
    }
  }
  if (out.empty()) throw UsageError("empty index list");
  return out;
}

std::string join_one_based(const std::vector<std::size_t>& xs) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? " " : "") << xs[k] + 1;
  return out.str();
}

void print_rectangle(std::ostream& out, const Rectangle& rect) {
  out << "RECT " << rect.c1 + 1 << ' ' << rect.c2 + 1 << ' ' << rect.r1 + 1 << ' ' << rect.r2 + 1 << '\n'
      << "hor_colour " << rect.hor_colour << '\n'
      << "ver_colour " << rect.ver_colour << '\n';
}

void print_graph_report(std::ostream& out, const Graph& g, const std::optional<PartitionedGraph>& pg) {
  out << "n " << g.order() << '\n' << "edges " << g.edge_count() << '\n' << "hom " << hom_c4(g) << '\n';
  if (g.order() > 0) out << "density " << to_string(density(g)) << '\n';
  if (!pg) return;
  out << "k " << pg->class_count() << '\n';
  const auto check = is_kpartite(*pg);
  out << "kpartite " << (check.ok ? 1 : 0) << '\n';
  if (!check.ok) out << "violation " << check.violation->u + 1 << ' ' << check.violation->v + 1 << '\n';
  if (g.order() > 0) out << "epsilon " << to_string(partition_imbalance(*pg)) << '\n';
  try {
    const auto bound = lemma_lower_bound(*pg);
    out << "lemma_bound " << to_string(bound) << '\n'
        << "lemma_holds " << (Rational{Integer{static_cast<unsigned long>(hom_c4(g))}} >= bound ? 1 : 0) << '\n';
  } catch (const std::domain_error& e) {
    out << "lemma_bound n/a\n";
  }
}

std::uint64_t require_seed(const std::optional<std::uint64_t>& seed) {
  if (!seed) throw UsageError("--seed is required for randomized subcommands");
  return *seed;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << contents;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid Ramsey workbench"};
  app.require_subcommand(1);

  int code = 0;
  std::string file;

  // gen
  unsigned gen_r = 0;
  std::size_t gen_m = 0, gen_n = 0;
  std::optional<std::uint64_t> seed;
  std::string output;
  auto* gen = app.add_subcommand("gen", "random GRIDCOL colouring");
  gen->add_option("--r", gen_r)->required()->check(CLI::Range(1U, 65535U));
  gen->add_option("--m", gen_m)->required()->check(CLI::PositiveNumber);
  gen->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", output);
  gen->callback([&] {
    const auto text = serialize_colouring(random_colouring(gen_r, gen_m, gen_n, require_seed(seed)));
    if (output.empty()) {
      out << text;
    } else {
      write_file(output, text);
      out << "wrote " << output << '\n';
    }
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a GRIDCOL file and count rectangles");
  verify->add_option("file", file)->required();
  verify->callback([&] {
    const auto c = read_colouring_file(file);
    const auto count = count_alternating_rectangles(c);
    out << "valid 1\n"
        << "r " << c.colours() << '\n'
        << "columns " << c.columns() << '\n'
        << "rows " << c.rows() << '\n'
        << "hor_entries " << c.rows() * pair_count(c.columns()) << '\n'
        << "ver_entries " << c.columns() * pair_count(c.rows()) << '\n'
        << "rectangles " << count << '\n'
        << "rectangle_free " << (count == 0 ? 1 : 0) << '\n';
  });

  // rect
  bool want_count = false;
  auto* rect = app.add_subcommand("rect", "find the lexicographically first alternating rectangle");
  rect->add_option("file", file)->required();
  rect->add_flag("--count", want_count);
  rect->callback([&] {
    const auto c = read_colouring_file(file);
    if (auto found = find_alternating_rectangle(c)) {
      print_rectangle(out, *found);
    } else {
      out << "NONE\n";
      code = 1;
    }
    if (want_count) out << "count " << count_alternating_rectangles(c) << '\n';
  });

  // hom
  std::string graph_file, grid_file;
  std::vector<std::size_t> row_pair;
  auto* hom = app.add_subcommand("hom", "hom(C4) and lemma bound of a graph or a row-pair intersection graph");
  auto* graph_opt = hom->add_option("--graph", graph_file);
  auto* grid_opt = hom->add_option("--grid", grid_file);
  auto* rows_opt = hom->add_option("--rows", row_pair)->expected(2);
  graph_opt->excludes(grid_opt);
  grid_opt->needs(rows_opt);
  hom->callback([&] {
    if (!graph_file.empty()) {
      const auto parsed = read_graph_file(graph_file);
      print_graph_report(out, parsed.graph, parsed.partition);
    } else if (!grid_file.empty()) {
      const auto c = read_colouring_file(grid_file);
      if (row_pair[0] == 0 || row_pair[1] == 0) throw UsageError("rows are 1-based");
      const auto vp = vertical_partition(c, row_pair[0] - 1, row_pair[1] - 1);
      print_graph_report(out, vp.partition.graph(), vp.partition);
    } else {
      throw UsageError("hom needs --graph FILE or --grid FILE --rows J1 J2");
    }
  });

  // lemma-check
  std::size_t k = 0, class_size = 0, trials = 0;
  std::string probability;
  auto* lemma = app.add_subcommand("lemma-check", "hom(C4) >= lemma bound over random k-partite graphs");
  lemma->add_option("--k", k)->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  lemma->add_option("--class-size", class_size)->required()->check(CLI::PositiveNumber);
  lemma->add_option("--p", probability)->required();
  lemma->add_option("--trials", trials)->required();
  lemma->add_option("--seed", seed);
  lemma->callback([&] {
    const auto p = parse_rational(probability);
    if (p < 0 || p > 1) throw UsageError("--p must lie in [0, 1]");
    SplitMix64 seeds(require_seed(seed));
    std::size_t violations = 0, equalities = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      const auto pg = random_kpartite(k, class_size, p.get_num().get_ui(), p.get_den().get_ui(), seeds.next());
      const Rational hom_value{Integer{static_cast<unsigned long>(hom_c4(pg.graph()))}};
      const auto bound = lemma_lower_bound(pg);
      if (hom_value < bound) ++violations;
      if (hom_value == bound) ++equalities;
    }
    out << "trials " << trials << '\n' << "violations " << violations << '\n' << "equalities " << equalities << '\n';
    code = violations == 0 ? 0 : 1;
  });

  // shelah
  std::string rows_list;
  auto* shelah = app.add_subcommand("shelah", "signature pigeonhole on r+1 rows");
  shelah->add_option("file", file)->required();
  shelah->add_option("--rows", rows_list);
  shelah->callback([&] {
    const auto c = read_colouring_file(file);
    std::optional<std::vector<std::size_t>> rows;
    if (!rows_list.empty()) rows = parse_list(rows_list);
    const auto result = shelah_extract(c, rows);
    out << "V " << join_one_based(result.rows) << '\n';
    if (result.rectangle) {
      out << "twins " << result.twins->first + 1 << ' ' << result.twins->second + 1 << '\n';
      print_rectangle(out, *result.rectangle);
    } else {
      out << "NO_COLLISION\n";
      code = 1;
    }
  });

  // dichotomy
  std::string cols_list, c4const = "20";
  bool exact = false;
  std::optional<std::size_t> samples;
  std::size_t exact_cap = 40;
  auto* dich = app.add_subcommand("dichotomy", "coloured C4 / coloured edge pattern search");
  dich->add_option("file", file)->required();
  dich->add_option("--cols", cols_list)->required();
  dich->add_option("--rows", rows_list)->required();
  auto* exact_flag = dich->add_flag("--exact", exact);
  auto* samples_opt = dich->add_option("--samples", samples);
  exact_flag->excludes(samples_opt);
  dich->add_option("--seed", seed);
  dich->add_option("--c4const", c4const);
  dich->add_option("--exact-cap", exact_cap);
  dich->callback([&] {
    const auto c = read_colouring_file(file);
    DichotomyOptions options;
    options.constant_c = parse_rational(c4const);
    options.exact_cap = exact_cap;
    if (samples) {
      options.mode = SearchMode::kSampled;
      options.samples = *samples;
      options.seed = require_seed(seed);
    }
    const auto a = parse_list(cols_list);
    const auto b = parse_list(rows_list);
    const auto thresholds = dichotomy_thresholds(c.colours(), a.size(), b.size(), options.constant_c);
    out << "threshold_rows " << to_string(thresholds.rows) << '\n'
        << "threshold_columns " << to_string(thresholds.columns) << '\n';
    const auto outcome = dichotomy_search(c, a, b, options);
    if (const auto* row = std::get_if<RowPattern>(&outcome)) {
      const auto& p = row->pattern;
      out << "ROW_PATTERN " << join_one_based({p.columns.begin(), p.columns.end()}) << ' ' << p.colours[0] << ' '
          << p.colours[1] << ' ' << p.colours[2] << ' ' << p.colours[3] << '\n'
          << "support " << row->rows.size() << '\n'
          << "rows " << join_one_based(row->rows) << '\n';
    } else if (const auto* col = std::get_if<ColumnPattern>(&outcome)) {
      out << "COLUMN_PATTERN " << col->edge.first + 1 << ' ' << col->edge.second + 1 << ' ' << col->edge.colour << '\n'
          << "support " << col->columns.size() << '\n'
          << "columns " << join_one_based(col->columns) << '\n';
    } else {
      out << "NONE_FOUND\n";
      code = 1;
    }
  });

  // refine
  std::optional<std::size_t> max_steps;
  bool verbose = false, no_row_floor = false;
  auto* ref = app.add_subcommand("refine", "iterated dichotomy; prints the trajectory dump");
  ref->add_option("file", file)->required();
  ref->add_option("--max-steps", max_steps);
  ref->add_option("--c4const", c4const);
  ref->add_option("--exact-cap", exact_cap);
  ref->add_flag("--verbose", verbose);
  ref->add_flag("--no-row-floor", no_row_floor);
  ref->callback([&] {
    const auto c = read_colouring_file(file);
    RefineOptions options;
    options.max_steps = max_steps;
    options.dichotomy.constant_c = parse_rational(c4const);
    options.dichotomy.exact_cap = exact_cap;
    options.enforce_row_floor = !no_row_floor;
    out << serialize_trajectory(refine(c, options), verbose);
  });

  // pigeonhole
  std::string state_file;
  int which_case = 0;
  auto* pig = app.add_subcommand("pigeonhole", "final signature pigeonhole on a refinement state");
  pig->add_option("file", file)->required();
  pig->add_option("--state", state_file)->required();
  pig->add_option("--case", which_case)->required()->check(CLI::IsMember({1, 2}));
  pig->callback([&] {
    const auto c = read_colouring_file(file);
    std::ifstream in(state_file, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + state_file + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    const auto state = parse_final_state(buffer.str());
    const auto result =
        final_pigeonhole(c, state, which_case == 1 ? PigeonholeCase::kColumns : PigeonholeCase::kRows);
    out << "V " << join_one_based(result.v) << '\n' << "free_edges " << result.free_edges << '\n';
    if (result.kind == PigeonholeKind::kRectangle) {
      out << "twins " << result.twins->first + 1 << ' ' << result.twins->second + 1 << '\n';
      print_rectangle(out, *result.rectangle);
    } else if (result.kind == PigeonholeKind::kSignatureCollision) {
      out << "SIGNATURE_COLLISION " << result.twins->first + 1 << ' ' << result.twins->second + 1 << '\n';
    } else {
      out << "NO_COLLISION\n";
      code = 1;
    }
  });

  // search
  unsigned search_r = 0;
  std::size_t search_m = 0, search_n = 0;
  std::uint64_t timeout_ms = 0;
  bool no_symmetry = false, progress = false;
  auto* srch = app.add_subcommand("search", "exhaustive search for a rectangle-free colouring");
  srch->add_option("--r", search_r)->required()->check(CLI::Range(1U, 65535U));
  srch->add_option("--m", search_m)->required()->check(CLI::PositiveNumber);
  srch->add_option("--n", search_n)->required()->check(CLI::PositiveNumber);
  srch->add_option("--timeout-ms", timeout_ms)->required();
  srch->add_flag("--no-symmetry", no_symmetry);
  srch->add_option("--seed", seed);
  srch->add_option("-o,--output", output);
  srch->add_flag("--progress", progress);
  srch->callback([&] {
    SearchOptions options;
    options.colours = search_r;
    options.columns = search_m;
    options.rows = search_n;
    options.timeout = std::chrono::milliseconds(timeout_ms);
    options.symmetry_breaking = !no_symmetry;
    options.seed = require_seed(seed);
    if (progress) options.progress = &err;
    const auto outcome = exhaustive_search(options);
    out << "result " << to_string(outcome.kind) << '\n' << "nodes " << outcome.nodes << '\n';
    err << "elapsed_ms " << std::chrono::duration_cast<std::chrono::milliseconds>(outcome.elapsed).count() << '\n';
    if (outcome.witness) {
      out << "verified " << (verify_witness(*outcome.witness) ? 1 : 0) << '\n';
      if (!output.empty()) {
        write_file(output, serialize_colouring(*outcome.witness));
        out << "wrote " << output << '\n';
      }
    }
    code = outcome.kind == SearchResult::kWitness ? 0 : 1;
  });

  // bounds
  unsigned bounds_r = 0;
  auto* bnd = app.add_subcommand("bounds", "exact Shelah, Gyarfas and refined upper bounds");
  bnd->add_option("--r", bounds_r)->required();
  bnd->add_option("--c4const", c4const);
  bnd->callback([&] {
    const auto report = bounds_table(bounds_r, parse_rational(c4const));
    const unsigned long exponent = static_cast<unsigned long>(bounds_r) * (bounds_r + 1) / 2;
    const Rational ratio = report.threshold / Rational{ipow(bounds_r, exponent)};
    const Rational r2{static_cast<unsigned long>(bounds_r) * bounds_r};
    out << "r " << report.r << '\n'
        << "c4const " << to_string(report.constant_c) << '\n'
        << "shelah " << report.shelah.get_str() << '\n'
        << "shelah_decimal " << to_decimal(Rational{report.shelah}) << '\n'
        << "gyarfas " << report.gyarfas.get_str() << '\n'
        << "gyarfas_decimal " << to_decimal(Rational{report.gyarfas}) << '\n'
        << "corsten_formula r^binom(r+1,2) - (1/4 - o(1)) r^binom(r,2)\n"
        << "threshold " << to_string(report.threshold) << '\n'
        << "threshold_decimal " << to_decimal(report.threshold) << '\n'
        << "threshold_ratio " << to_decimal(ratio) << '\n'
        << "threshold_gap_r2 " << to_decimal((1 - ratio) * r2) << '\n'
        << "worst_j " << report.worst_j << '\n'
        << "worst_case " << report.worst_case << '\n'
        << "valid " << (report.valid ? 1 : 0) << '\n';
    if (!report.note.empty()) out << "note " << report.note << '\n';
  });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return code;
}

}  // namespace gridramsey::cli
