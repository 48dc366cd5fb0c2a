#include "lcsgap/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "lcsgap/rng.hpp"

namespace lcsgap {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw Error(ErrorKind::kParameter, "negative vertex count");
  adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
  neighbors_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw Error(ErrorKind::kParameter,
                  "edge endpoint out of range: " + std::to_string(u) + " " +
                      std::to_string(v));
    }
    if (u == v) {
      throw Error(ErrorKind::kParameter,
                  "self-loop on vertex " + std::to_string(u));
    }
    auto& cell = adjacency_[static_cast<std::size_t>(u - 1) * n + (v - 1)];
    if (cell) {
      throw Error(ErrorKind::kParameter, "duplicate edge " + std::to_string(u) +
                                             " " + std::to_string(v));
    }
    cell = 1;
    adjacency_[static_cast<std::size_t>(v - 1) * n + (u - 1)] = 1;
    neighbors_[u - 1].push_back(v);
    neighbors_[v - 1].push_back(u);
    ++edge_count_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw Error(ErrorKind::kParameter,
                "vertex " + std::to_string(v) + " out of range");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[static_cast<std::size_t>(u - 1) * n_ + (v - 1)] != 0;
}

const VertexSet& Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return neighbors_[v - 1];
}

VertexSet Graph::lower_neighbors(Vertex v) const {
  const auto& all = neighbors(v);
  return VertexSet(all.begin(), std::lower_bound(all.begin(), all.end(), v));
}

VertexSet Graph::upper_neighbors(Vertex v) const {
  const auto& all = neighbors(v);
  return VertexSet(std::upper_bound(all.begin(), all.end(), v), all.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v : neighbors_[u - 1]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edges_within(std::span<const Vertex> subset) const {
  std::size_t count = 0;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] != subset[b] && has_edge(subset[a], subset[b])) ++count;
    }
  }
  return count;
}

std::optional<Edge> Graph::missing_edge(std::span<const Vertex> subset) const {
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (subset[a] == subset[b]) continue;
      if (!has_edge(subset[a], subset[b])) {
        return Edge{std::min(subset[a], subset[b]),
                    std::max(subset[a], subset[b])};
      }
    }
  }
  return std::nullopt;
}

Rational density(const Graph& g) {
  if (g.n() < 2) {
    throw Error(ErrorKind::kDegenerate, "density needs at least 2 vertices");
  }
  const std::int64_t n = g.n();
  return Rational(2 * static_cast<std::int64_t>(g.edge_count()), n * n - n);
}

Rational induced_density(const Graph& g, std::span<const Vertex> subset) {
  if (subset.size() < 2) {
    throw Error(ErrorKind::kDegenerate, "density needs at least 2 vertices");
  }
  const auto s = static_cast<std::int64_t>(subset.size());
  return Rational(2 * static_cast<std::int64_t>(g.edges_within(subset)),
                  s * s - s);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays exact at every step.
    const std::uint64_t factor = n - k + i;
    const std::uint64_t g = std::gcd(result, i);
    const std::uint64_t r = result / g;
    const std::uint64_t f = factor / (i / g);
    if (f != 0 && r > kMax / f) return kMax;
    result = r * f;
  }
  return result;
}

DksVerdict dks_brute_force(const Graph& g, int k, const Rational& threshold,
                           std::uint64_t budget) {
  if (k < 2 || k > g.n()) {
    throw Error(ErrorKind::kParameter,
                "dks_brute_force needs 2 <= k <= n (k=" + std::to_string(k) +
                    ", n=" + std::to_string(g.n()) + ")");
  }
  const std::uint64_t total = binomial(g.n(), k);
  if (total > budget) {
    throw Error(ErrorKind::kBudget, "C(" + std::to_string(g.n()) + "," +
                                        std::to_string(k) +
                                        ") subsets exceed the budget of " +
                                        std::to_string(budget));
  }

  const std::size_t full = static_cast<std::size_t>(k) * (k - 1) / 2;
  DksVerdict verdict;
  std::size_t best_edges = 0;
  VertexSet subset(k);
  std::iota(subset.begin(), subset.end(), 1);
  while (true) {
    ++verdict.subsets_examined;
    const std::size_t e = g.edges_within(subset);
    if (e > best_edges || verdict.subsets_examined == 1) best_edges = e;
    if (e == full) {
      verdict.kind = DksKind::kYes;
      verdict.witness = subset;
      break;
    }
    // Advance to the next k-subset in lexicographic order.
    int pos = k - 1;
    while (pos >= 0 && subset[pos] == g.n() - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++subset[pos];
    for (int q = pos + 1; q < k; ++q) subset[q] = subset[q - 1] + 1;
  }
  verdict.best_density =
      Rational(static_cast<std::int64_t>(best_edges), static_cast<std::int64_t>(full));
  if (verdict.kind != DksKind::kYes) {
    verdict.kind = verdict.best_density <= threshold ? DksKind::kNo
                                                     : DksKind::kUndecided;
  }
  return verdict;
}

Graph erdos_renyi(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kParameter, "n must be positive");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::kParameter, "edge probability outside [0, 1]");
  }
  Rng rng(derive_seed(seed, Stream::kGraph));
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (rng.bernoulli(edge_prob)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

PlantedGraph plant_clique(int n, int k, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorKind::kParameter, "n must be positive");
  if (k < 1 || k > n) {
    throw Error(ErrorKind::kParameter,
                "planted clique size must satisfy 1 <= k <= n (k=" +
                    std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw Error(ErrorKind::kParameter, "edge probability outside [0, 1]");
  }
  Rng rng(derive_seed(seed, Stream::kGraph));

  // Partial Fisher-Yates picks the clique.
  VertexSet order(n);
  std::iota(order.begin(), order.end(), 1);
  for (int i = 0; i < k; ++i) {
    const auto j = i + static_cast<int>(rng.below(n - i));
    std::swap(order[i], order[j]);
  }
  VertexSet clique(order.begin(), order.begin() + k);
  std::sort(clique.begin(), clique.end());
  std::vector<std::uint8_t> in_clique(n + 1, 0);
  for (Vertex v : clique) in_clique[v] = 1;

  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      // Always draw so the non-clique pairs do not depend on k.
      const bool coin = rng.bernoulli(edge_prob);
      if ((in_clique[u] && in_clique[v]) || coin) edges.emplace_back(u, v);
    }
  }
  return {Graph(n, edges), std::move(clique)};
}

VertexSet dense_subgraph_peel(const Graph& g, std::span<const Vertex> pool,
                              int k) {
  if (k < 2 || static_cast<std::size_t>(k) > pool.size()) {
    throw Error(ErrorKind::kParameter,
                "peeling needs 2 <= k <= |pool| (k=" + std::to_string(k) +
                    ", pool=" + std::to_string(pool.size()) + ")");
  }
  VertexSet alive(pool.begin(), pool.end());
  std::sort(alive.begin(), alive.end());
  std::vector<int> degree(alive.size(), 0);
  for (std::size_t a = 0; a < alive.size(); ++a) {
    for (std::size_t b = a + 1; b < alive.size(); ++b) {
      if (g.has_edge(alive[a], alive[b])) {
        ++degree[a];
        ++degree[b];
      }
    }
  }
  while (alive.size() > static_cast<std::size_t>(k)) {
    // `alive` stays sorted, so the first minimum has the smallest label.
    const auto victim = static_cast<std::size_t>(
        std::min_element(degree.begin(), degree.end()) - degree.begin());
    for (std::size_t a = 0; a < alive.size(); ++a) {
      if (a != victim && g.has_edge(alive[a], alive[victim])) --degree[a];
    }
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(victim));
    degree.erase(degree.begin() + static_cast<std::ptrdiff_t>(victim));
  }
  return alive;
}

VertexSet dense_subgraph_peel(const Graph& g, int k) {
  VertexSet all(g.n());
  std::iota(all.begin(), all.end(), 1);
  return dense_subgraph_peel(g, all, k);
}

}  // namespace lcsgap
