#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lcsgap/types.hpp"

namespace lcsgap {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n. Immutable once built.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n = 0);

  /// Throws kParameter on a self-loop, a duplicate edge or an endpoint
  /// outside [1, n]. Edge orientation is irrelevant.
  Graph(int n, std::span<const Edge> edges);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(Vertex u, Vertex v) const;

  /// Sorted neighbor list.
  const VertexSet& neighbors(Vertex v) const;
  /// Neighbors with a smaller label, ascending.
  VertexSet lower_neighbors(Vertex v) const;
  /// Neighbors with a larger label, ascending.
  VertexSet upper_neighbors(Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Number of edges with both endpoints in `subset` (duplicates ignored).
  std::size_t edges_within(std::span<const Vertex> subset) const;

  /// First pair of `subset` that is not an edge, if any.
  std::optional<Edge> missing_edge(std::span<const Vertex> subset) const;

  bool is_clique(std::span<const Vertex> subset) const {
    return !missing_edge(subset).has_value();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adjacency_ == b.adjacency_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;  // n*n row-major
  std::vector<VertexSet> neighbors_;     // index v-1
};

/// 2|E| / (n^2 - n). Throws kDegenerate when n < 2.
Rational density(const Graph& g);

/// Density of the subgraph induced by `subset` (distinct vertices).
/// Throws kDegenerate when |subset| < 2.
Rational induced_density(const Graph& g, std::span<const Vertex> subset);

enum class DksKind { kYes, kNo, kUndecided };

struct DksVerdict {
  DksKind kind = DksKind::kUndecided;
  std::optional<VertexSet> witness;  // a k-clique when kind == kYes
  Rational best_density{0};
  std::uint64_t subsets_examined = 0;
};

inline constexpr std::uint64_t kDefaultDksBudget = 50'000'000;

/// Exhaustive gap oracle over all k-subsets in lexicographic order. YES when
/// a k-clique exists (the first one found is the witness); NO when every
/// k-subset has density <= threshold; UNDECIDED otherwise.
/// Throws kParameter unless 2 <= k <= n, kBudget when C(n, k) > budget.
DksVerdict dks_brute_force(const Graph& g, int k, const Rational& threshold,
                           std::uint64_t budget = kDefaultDksBudget);

struct PlantedGraph {
  Graph graph;
  VertexSet clique;  // ascending
};

/// Erdős–Rényi G(n, p) from the kGraph stream of `seed`.
Graph erdos_renyi(int n, double edge_prob, std::uint64_t seed);

/// Picks a uniform k-subset, makes it a clique, and keeps every other pair
/// independently with probability edge_prob. Deterministic in `seed`.
PlantedGraph plant_clique(int n, int k, double edge_prob, std::uint64_t seed);

/// Repeatedly deletes a minimum-degree vertex (smallest label on ties) until
/// k vertices remain. Returns the survivors ascending. Throws kParameter
/// unless 2 <= k <= n.
VertexSet dense_subgraph_peel(const Graph& g, int k);

/// Same peeling restricted to the subgraph induced by `pool`.
VertexSet dense_subgraph_peel(const Graph& g, std::span<const Vertex> pool,
                              int k);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lcsgap
