#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lcsgap/reduction.hpp"
#include "lcsgap/types.hpp"

namespace lcsgap {

/// Partition of a common subsequence L into Z_1..Z_n, where Z_i is the run of
/// L that the leftmost embedding into Y_n = S_1..S_n places inside block i.
struct BlockDecomposition {
  int n = 0;
  std::vector<Sequence> z_blocks;        // Z_1..Z_n
  std::vector<std::size_t> z_offsets;    // start of Z_i within L
  VertexSet heavy_set;                   // {i : |Z_i| >= beta m}, ascending
  std::size_t l1_length = 0;             // sum of |Z_i| over heavy i
  Rational heavy_threshold{0};           // beta m
};

/// C(i, j) = number of heavy indices t with i <= t <= j (1-based, inclusive),
/// served from a prefix-count array.
class IntervalCount {
 public:
  IntervalCount(int n, std::span<const Vertex> heavy);

  int operator()(int i, int j) const;
  int n() const noexcept { return n_; }

 private:
  int n_;
  std::vector<int> prefix_;
};

/// Throws kPrecondition unless L is a common subsequence of all 2n strings.
BlockDecomposition decompose(std::span<const Symbol> L, const BlockInstance& inst);

struct PruneResult {
  VertexSet t_removed;   // the set T, ascending
  VertexSet v_h_pruned;  // W' = W \ T, ascending
};

/// Sparse-stretch removal. For each heavy i ascending, find the largest j > i
/// with C(i, j) / (j - i + 1) <= 2 alpha / beta and put every heavy index of
/// [i, j] into T. Exact rational comparisons.
PruneResult prune_sparse(std::span<const Vertex> heavy, int n,
                         const ReductionParams& params);

inline PruneResult prune_sparse(const BlockDecomposition& dec,
                                const ReductionParams& params) {
  return prune_sparse(dec.heavy_set, dec.n, params);
}

/// Evaluates, for heavy vertex i,
///   |V^{>i} ∩ N_>(i)| + beta/(2 alpha) |V^{>i} \ N_>(i)| <= 2(n - i) + 1  and
///   |V^{<i} ∩ N_<(i)| + beta/(2 alpha) |V^{<i} \ N_<(i)| <= 2i - 1
/// where V = heavy set. A diagnostic: the bounds are only guaranteed under
/// the dense-case alignment conditions. Throws kDomain for non-heavy i.
bool check_dense_case_bounds(const BlockDecomposition& dec,
                             const BlockInstance& inst, Vertex i);

enum class Verdict { kConsistent, kSoundnessWitness };
std::string_view to_string(Verdict v);

/// How a heavy block Z_i lands in Y_i (forward) or Y'_i (backward) under the
/// leftmost embedding of L_1.
///   kSparsePrefix: half-aligned with the copies of the other blocks on the
///     wrong side of S_i (S_1..S_{i-1} in Y_i, S_{i+1}..S_n in Y'_i);
///   kSparseShifted: otherwise, and some heavy Z_j on the far side of i is
///     matched into its own block S_j before S_i;
///   kDense: neither.
enum class AlignmentCase { kSparsePrefix, kSparseShifted, kDense };
enum class HalfSide { kFirst, kLast, kBoth };
std::string_view to_string(AlignmentCase c);
std::string_view to_string(HalfSide s);

struct AlignmentProbe {
  Vertex vertex = 0;
  AlignmentCase forward = AlignmentCase::kDense;
  HalfSide forward_half = HalfSide::kBoth;
  AlignmentCase backward = AlignmentCase::kDense;
  HalfSide backward_half = HalfSide::kBoth;
  bool dense_bounds_hold = false;

  friend bool operator==(const AlignmentProbe&, const AlignmentProbe&) = default;
};

enum class SubsetMode { kPadded, kPeeled };
std::string_view to_string(SubsetMode m);

struct ExtractionReport {
  std::size_t l_length = 0;
  std::size_t l1_length = 0;
  int n = 0;
  int k = 0;
  Rational epsilon{1, 2};
  Rational heavy_threshold{0};     // beta m
  Rational sparse_threshold{0};    // 2 alpha / beta
  Rational ell_no{0};              // 2 beta m n
  Rational density_threshold{0};   // (gamma / 2)^2
  VertexSet v_h;
  VertexSet v_h_pruned;
  VertexSet t_removed;
  std::optional<Rational> density_vh;      // absent when |v_h| < 2
  std::optional<Rational> density_pruned;  // absent when |v_h_pruned| < 2
  VertexSet padded_subset;
  Rational padded_density{0};
  SubsetMode subset_mode = SubsetMode::kPadded;
  Verdict verdict = Verdict::kConsistent;
  std::vector<AlignmentProbe> probes;

  friend bool operator==(const ExtractionReport&, const ExtractionReport&) = default;
};

/// decompose -> prune_sparse -> size-k subset with exact density. The subset
/// is v_h padded greedily (most edges into the current set, smallest label on
/// ties) when |v_h| <= k; v_h_pruned padded from v_h when
/// |v_h_pruned| <= k < |v_h|; otherwise v_h peeled down to k.
/// Verdict is kSoundnessWitness iff |L| > 2 beta m n and the subset density
/// is >= (gamma/2)^2.
/// Throws kParameter unless alpha in (0, 1/8) and k >= 2.
ExtractionReport extract_dense_subgraph(std::span<const Symbol> L,
                                        const BlockInstance& inst);

}  // namespace lcsgap
