#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridramsey/bitset.hpp"

namespace gridramsey {

using Vertex = std::size_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1, one adjacency bitset per vertex.
class Graph {
 public:
  explicit Graph(std::size_t order = 0);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Throws std::invalid_argument on loops, std::out_of_range on bad vertices.
  // Adding an existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);

  bool adjacent(Vertex u, Vertex v) const { return adjacency_.at(u).test(v); }
  const Bitset& neighbours(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).count(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Bitset> adjacency_;
  std::size_t edges_ = 0;
};

// A graph with an ordered list of k disjoint vertex classes covering every vertex.
// Classes may be empty; being k-partite is checked separately, never assumed.
class PartitionedGraph {
 public:
  // Throws std::invalid_argument unless labels has one entry per vertex, each < k, and k >= 1.
  PartitionedGraph(Graph graph, std::vector<std::size_t> labels, std::size_t k);

  const Graph& graph() const { return graph_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<std::vector<Vertex>>& classes() const { return classes_; }
  std::size_t class_of(Vertex v) const { return labels_.at(v); }
  const std::vector<std::size_t>& labels() const { return labels_; }

  // Same graph with empty classes removed (class order otherwise preserved).
  PartitionedGraph without_empty_classes() const;

 private:
  Graph graph_;
  std::vector<std::size_t> labels_;
  std::vector<std::vector<Vertex>> classes_;
};

// GRAPH text format: "GRAPH 1", "<n> <k>", k>=1 adds a line of n class indices in [1..k],
// then "u v" edge lines (1-based). '#' starts a comment.
struct GraphFile {
  Graph graph;
  std::optional<PartitionedGraph> partition;
};

GraphFile parse_graph(std::string_view text);
GraphFile read_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);
std::string serialize_graph(const PartitionedGraph& pg);

}  // namespace gridramsey
