#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "gridramsey/graph.hpp"
#include "gridramsey/rational.hpp"

namespace gridramsey {

// Common neighbours of x and y; the degree when x == y. Throws std::out_of_range.
std::size_t codegree(const Graph& g, Vertex x, Vertex y);

// hom(C4, G) = sum over ordered (x, y) of codegree(x, y)^2, accumulated over neighbour
// bitsets. OpenMP over x.
std::uint64_t hom_c4(const Graph& g);

// 2e / n^2. Throws std::invalid_argument for the empty graph.
Rational density(const Graph& g);

struct KPartiteCheck {
  bool ok = true;
  std::optional<Edge> violation;  // smallest intra-class edge
  explicit operator bool() const { return ok; }
};

KPartiteCheck is_kpartite(const PartitionedGraph& pg);

// Least eps >= 0 with every class of size at most (1 + eps) n / k.
Rational partition_imbalance(const PartitionedGraph& pg);

// (1 - 4 eps)(1 + 1/(k-1)^3) delta^4 n^4, computed after dropping empty classes.
// Throws std::domain_error when fewer than two non-empty classes remain, when eps > 1,
// or when the partition is not k-partite.
Rational lemma_lower_bound(const PartitionedGraph& pg);

// Every quantity in the inequality chain behind the hom(C4) lower bound.
//
// S = sum_i sum_{x,y in V_i} d_xy / |V_i| is always rational. T pairs classes i, j with
// weight 1/sqrt(|V_i||V_j|), so it is rational only when every product |V_i||V_j| is a
// perfect square; otherwise it is carried in binary floating point with
// kDiagnosticPrecisionBits of mantissa.
struct LemmaDiagnostics {
  static constexpr unsigned kDiagnosticPrecisionBits = 256;

  std::size_t n = 0;
  std::size_t k = 0;
  Rational epsilon;
  Rational delta;
  std::uint64_t hom = 0;
  Rational s;
  mpf_class t{0, kDiagnosticPrecisionBits};
  std::optional<Rational> t_exact;
  Rational bound;

  // d^i_z: edges from z into class i; row z, column i.
  std::vector<std::vector<std::size_t>> class_degree;
  // sum over x in V_i, y in V_j of d_xy.
  std::vector<std::vector<std::uint64_t>> codegree_mass;
};

// Throws std::domain_error on an empty class, k < 2, eps > 1 or an intra-class edge.
LemmaDiagnostics lemma_diagnostics(const PartitionedGraph& pg);

struct ChainCheck {
  bool s_vs_t = false;          // S >= T / (k - 1)
  bool hom_vs_s_t = false;      // hom >= S^2 / k + (T - S)^2 / (k (k - 1))
  bool t_vs_density = false;    // T >= k delta^2 n^2 / (1 + eps)^2
  bool s_vs_t_tight = false;    // equality, decided exactly (only when T is rational)
  bool hom_vs_s_t_tight = false;
  bool t_vs_density_tight = false;
  bool all() const { return s_vs_t && hom_vs_s_t && t_vs_density; }
};

// Exact when T is rational; otherwise with relative tolerance 2^-64.
ChainCheck check_chain(const LemmaDiagnostics& d);

// k classes of class_size consecutive vertices; every cross-class pair (u < v, lexicographic)
// is kept iff next() mod den < num.
PartitionedGraph random_kpartite(std::size_t k, std::size_t class_size, std::uint64_t num, std::uint64_t den,
                                 std::uint64_t seed);

// Complete k-partite graph with the given class sizes.
PartitionedGraph complete_multipartite(const std::vector<std::size_t>& class_sizes);

}  // namespace gridramsey
