#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcsgap/families.hpp"
#include "lcsgap/graph.hpp"
#include "lcsgap/types.hpp"

namespace lcsgap {

/// The 2n Jiang–Li strings over the vertex alphabet. Vertex v is the symbol v.
///   X_i  = v_1..v_{i-1} v_{i+1}..v_n v_i  N_>(v_i)
///   X'_i = N_<(v_i)  v_i v_1..v_{i-1} v_{i+1}..v_n
/// with both neighbor runs in increasing label order.
struct SymbolicInstance {
  int n = 0;
  std::vector<Sequence> x;        // X_1..X_n
  std::vector<Sequence> x_prime;  // X'_1..X'_n
  Graph source;

  /// X_1..X_n followed by X'_1..X'_n.
  std::vector<Sequence> all_strings() const;
};

SymbolicInstance jiang_li(const Graph& g);

/// Rebuilds the instance (and its source graph) from X_1..X_n, X'_1..X'_n.
/// Throws kStructure unless the strings are exactly jiang_li of some graph.
SymbolicInstance symbolic_from_strings(std::span<const Sequence> strings);

/// The clique in increasing label order, verified as a common subsequence of
/// all 2n strings. Throws kWitness naming a missing edge for a non-clique.
Sequence clique_to_witness(const SymbolicInstance& inst,
                           std::span<const Vertex> clique);

struct CliqueCheck {
  bool is_clique = true;
  std::optional<Edge> missing;
};

/// Whether the distinct symbols of a common subsequence pairwise form edges.
/// Throws kPrecondition when `s` is not a common subsequence.
CliqueCheck witness_to_clique_check(const SymbolicInstance& inst,
                                    std::span<const Symbol> s);

/// Gap parameters. beta is primary and alpha = beta^2 / 8, so that
/// beta = sqrt(8 alpha) holds exactly.
struct ReductionParams {
  int n = 0;
  int k = 0;
  Rational alpha{0};
  Rational beta{0};
  Rational gamma{0};
  int m = 0;
  std::int64_t ell_yes = 0;  // k * m
  Rational ell_no{0};        // 2 * beta * m * n

  /// ell_no < ell_yes, equivalently gamma < 1/2.
  bool has_gap() const { return ell_no < Rational(ell_yes); }

  friend bool operator==(const ReductionParams&, const ReductionParams&) = default;
};

/// Throws kParameter unless n, m >= 1, 0 < beta < gamma <= 1 and
/// k = (beta / gamma) * n is an integer.
ReductionParams make_params(int n, const Rational& gamma, const Rational& beta,
                            int m);

/// Block-substituted instance: each vertex symbol v_j becomes S_j.
struct BlockInstance {
  StringFamily family;
  std::vector<Sequence> y;        // Y_1..Y_n
  std::vector<Sequence> y_prime;  // Y'_1..Y'_n
  /// Block ids (vertex labels) per string, Y_1..Y_n then Y'_1..Y'_n.
  std::vector<VertexSet> block_layout;
  ReductionParams params;
  Graph source;

  std::vector<Sequence> all_strings() const;
};

/// Throws kCertification for an uncertified family or one certified at a
/// larger alpha than params.alpha; kParameter on size mismatch.
BlockInstance alphabet_reduce(const SymbolicInstance& inst,
                              const StringFamily& family,
                              const ReductionParams& params);

/// S_{v_1} S_{v_2} ... for the given vertices, in the given order.
Sequence expand_witness(const StringFamily& family,
                        std::span<const Vertex> vertices);

/// Recovers a block string's layout by matching consecutive m-windows
/// against the family. nullopt when some window is not a family string.
std::optional<VertexSet> decode_blocks(std::span<const Symbol> y,
                                       const StringFamily& family);

}  // namespace lcsgap
