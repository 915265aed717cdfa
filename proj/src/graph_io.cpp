#include <sstream>

#include "gridramsey/graph.hpp"
#include "gridramsey/grid.hpp"
#include "tokenizer.hpp"

namespace gridramsey {

GraphFile parse_graph(std::string_view text) {
  const auto tokens = detail::tokenize(text);
  if (tokens.size() < 2 || tokens[0].text != "GRAPH" || tokens[1].text != "1")
    throw ParseError(tokens.empty() ? 1 : tokens[0].line, "malformed header: expected 'GRAPH 1'");
  if (tokens.size() < 4) throw ParseError(tokens.back().line, "malformed header: expected '<n> <k>'");
  const auto n = detail::to_uint(tokens[2]);
  const auto k = detail::to_uint(tokens[3]);

  std::size_t t = 4;
  std::vector<std::size_t> labels;
  if (k >= 1) {
    if (tokens.size() < t + n) throw ParseError(tokens.back().line, "expected " + std::to_string(n) + " class indices");
    for (std::size_t v = 0; v < n; ++v, ++t) {
      const auto label = detail::to_uint(tokens[t]);
      if (label < 1 || label > k) throw ParseError(tokens[t].line, "class index out of range");
      labels.push_back(label - 1);
    }
  }
  if ((tokens.size() - t) % 2 != 0) throw ParseError(tokens.back().line, "wrong token count: dangling edge endpoint");

  Graph g(n);
  for (; t < tokens.size(); t += 2) {
    const auto u = detail::to_uint(tokens[t]);
    const auto v = detail::to_uint(tokens[t + 1]);
    if (u < 1 || v < 1 || u > n || v > n) throw ParseError(tokens[t].line, "edge endpoint out of range");
    if (u == v) throw ParseError(tokens[t].line, "loop edge");
    g.add_edge(u - 1, v - 1);
  }

  GraphFile out{g, std::nullopt};
  if (k >= 1) out.partition.emplace(std::move(g), std::move(labels), k);
  return out;
}

GraphFile read_graph_file(const std::string& path) { return parse_graph(detail::slurp(path)); }

namespace {

void write_edges(std::ostringstream& out, const Graph& g) {
  for (const auto& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

}  // namespace

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << "GRAPH 1\n" << g.order() << " 0\n";
  write_edges(out, g);
  return out.str();
}

std::string serialize_graph(const PartitionedGraph& pg) {
  std::ostringstream out;
  out << "GRAPH 1\n" << pg.graph().order() << ' ' << pg.class_count() << '\n';
  for (Vertex v = 0; v < pg.graph().order(); ++v) out << (v ? " " : "") << pg.class_of(v) + 1;
  out << '\n';
  write_edges(out, pg.graph());
  return out.str();
}

}  // namespace gridramsey
