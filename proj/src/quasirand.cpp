#include "gridramsey/quasirand.hpp"

#include <algorithm>
#include <stdexcept>

#include "gridramsey/splitmix.hpp"

namespace gridramsey {

Graph::Graph(std::size_t order) : adjacency_(order, Bitset(order)) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u >= order() || v >= order()) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (adjacency_[u].test(v)) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edges_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < order(); ++u)
    for (auto v = adjacency_[u].find_from(u + 1); v; v = adjacency_[u].find_from(*v + 1)) out.push_back({u, *v});
  return out;
}

PartitionedGraph::PartitionedGraph(Graph graph, std::vector<std::size_t> labels, std::size_t k)
    : graph_(std::move(graph)), labels_(std::move(labels)), classes_(k) {
  if (k == 0) throw std::invalid_argument("a partition needs at least one class");
  if (labels_.size() != graph_.order()) throw std::invalid_argument("one class label per vertex required");
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] >= k) throw std::invalid_argument("class label out of range");
    classes_[labels_[v]].push_back(v);
  }
}

PartitionedGraph PartitionedGraph::without_empty_classes() const {
  std::vector<std::size_t> remap(classes_.size(), 0);
  std::size_t kept = 0;
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (!classes_[i].empty()) remap[i] = kept++;
  std::vector<std::size_t> labels(labels_.size());
  for (Vertex v = 0; v < labels_.size(); ++v) labels[v] = remap[labels_[v]];
  return PartitionedGraph(graph_, std::move(labels), std::max<std::size_t>(kept, 1));
}

std::size_t codegree(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.order() || y >= g.order()) throw std::out_of_range("vertex out of range");
  return intersection_count(g.neighbours(x), g.neighbours(y));
}

std::uint64_t hom_c4(const Graph& g) {
  const auto n = static_cast<long>(g.order());
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
  for (long x = 0; x < n; ++x) {
    const auto& nx = g.neighbours(static_cast<Vertex>(x));
    const std::uint64_t dx = nx.count();
    std::uint64_t local = dx * dx;
    for (long y = x + 1; y < n; ++y) {
      const std::uint64_t d = intersection_count(nx, g.neighbours(static_cast<Vertex>(y)));
      local += 2 * d * d;
    }
    total += local;
  }
  return total;
}

Rational density(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("density of the empty graph is undefined");
  Rational out{Integer{2} * Integer{static_cast<unsigned long>(g.edge_count())},
               Integer{static_cast<unsigned long>(g.order())} * Integer{static_cast<unsigned long>(g.order())}};
  out.canonicalize();
  return out;
}

KPartiteCheck is_kpartite(const PartitionedGraph& pg) {
  const auto& g = pg.graph();
  std::vector<Bitset> members(pg.class_count(), Bitset(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) members[pg.class_of(v)].set(v);
  for (Vertex u = 0; u < g.order(); ++u)
    if (auto v = first_common_from(g.neighbours(u), members[pg.class_of(u)], u + 1))
      return {false, Edge{u, *v}};
  return {};
}

Rational partition_imbalance(const PartitionedGraph& pg) {
  const auto n = pg.graph().order();
  if (n == 0) throw std::invalid_argument("imbalance of the empty graph is undefined");
  std::size_t largest = 0;
  for (const auto& cls : pg.classes()) largest = std::max(largest, cls.size());
  Rational eps{Integer{static_cast<unsigned long>(pg.class_count() * largest)}, Integer{static_cast<unsigned long>(n)}};
  eps.canonicalize();
  eps -= 1;
  return eps < 0 ? Rational{0} : eps;
}

PartitionedGraph random_kpartite(std::size_t k, std::size_t class_size, std::uint64_t num, std::uint64_t den,
                                 std::uint64_t seed) {
  if (k == 0 || class_size == 0) throw std::invalid_argument("k and class size must be positive");
  if (den == 0 || num > den) throw std::invalid_argument("edge probability must lie in [0, 1]");
  const auto n = k * class_size;
  Graph g(n);
  std::vector<std::size_t> labels(n);
  for (Vertex v = 0; v < n; ++v) labels[v] = v / class_size;
  SplitMix64 rng(seed);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (labels[u] != labels[v] && rng.below(den) < num) g.add_edge(u, v);
  return PartitionedGraph(std::move(g), std::move(labels), k);
}

PartitionedGraph complete_multipartite(const std::vector<std::size_t>& class_sizes) {
  std::vector<std::size_t> labels;
  for (std::size_t i = 0; i < class_sizes.size(); ++i) labels.insert(labels.end(), class_sizes[i], i);
  Graph g(labels.size());
  for (Vertex u = 0; u < labels.size(); ++u)
    for (Vertex v = u + 1; v < labels.size(); ++v)
      if (labels[u] != labels[v]) g.add_edge(u, v);
  return PartitionedGraph(std::move(g), std::move(labels), class_sizes.size());
}

}  // namespace gridramsey
