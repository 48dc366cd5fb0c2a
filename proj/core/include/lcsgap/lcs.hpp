#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lcsgap/types.hpp"

namespace lcsgap {

struct SymbolicInstance;

/// Monotone partial matching from positions of a source string to positions
/// of a target string. Positions are 0-based; kStar marks an unmatched
/// source position.
struct Alignment {
  static constexpr std::int64_t kStar = -1;

  std::vector<std::int64_t> mapping;

  std::size_t source_len() const noexcept { return mapping.size(); }
  std::size_t matched() const noexcept;

  /// Checks both alignment invariants: matched symbols agree and matched
  /// target positions strictly increase.
  bool is_valid(std::span<const Symbol> source,
                std::span<const Symbol> target) const;

  /// The matched source symbols, in order.
  Sequence aligned_symbols(std::span<const Symbol> source) const;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

struct PairLcs {
  std::size_t length = 0;
  Alignment alignment;  // source = first argument
};

/// Exact LCS with a realizing alignment (full-table traceback).
PairLcs lcs_pair(std::span<const Symbol> a, std::span<const Symbol> b);

/// LCS length, bit-parallel kernel: O(|a| * |b| / 64) time.
std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b);

/// LCS length, row-rolling DP: O(|a| * |b|) time, O(min(|a|, |b|)) space.
std::size_t lcs_length_dp(std::span<const Symbol> a,
                          std::span<const Symbol> b);

bool is_subsequence(std::span<const Symbol> sub, std::span<const Symbol> target);

/// True iff `s` embeds in every string. Vacuously true for no strings.
bool is_common_subsequence(std::span<const Symbol> s,
                           std::span<const Sequence> strings);

/// Greedy leftmost embedding of `sub` into `target`. Throws kPrecondition
/// when `sub` is not a subsequence of `target`.
Alignment embed(std::span<const Symbol> sub, std::span<const Symbol> target);

enum class Solver {
  kProductDp,
  kSubsetEnum,
  kOncePerSymbol,
  kSingleSymbolApprox,
  kHeuristic,
};

std::string_view to_string(Solver solver);
/// Accepts the enum spelling ("PRODUCT_DP") or the CLI spelling
/// ("product-dp"). Throws kParse.
Solver parse_solver(std::string_view text);

struct MultiLcsResult {
  std::size_t length = 0;
  Sequence witness;
  bool exact = false;
  Solver solver = Solver::kHeuristic;

  friend bool operator==(const MultiLcsResult&, const MultiLcsResult&) = default;
};

inline constexpr std::uint64_t kDefaultProductBudget = 100'000'000;
inline constexpr int kDefaultSubsetLimit = 24;

/// Exact multi-string LCS by memoized DP over tuples of prefix positions.
/// Among longest witnesses the lexicographically smallest is returned.
/// Throws kBudget when prod(1 + |s_i|) exceeds `budget`.
MultiLcsResult multi_lcs_product_dp(std::span<const Sequence> strings,
                                    std::uint64_t budget = kDefaultProductBudget);

/// Exact solver for Jiang–Li instances: every common subsequence is an
/// increasing run of vertex labels, so increasing vertex sequences are
/// enumerated depth-first (pruning any prefix that is not common).
/// Throws kBudget when n exceeds `max_vertices`.
MultiLcsResult multi_lcs_subset_enum(const SymbolicInstance& inst,
                                     int max_vertices = kDefaultSubsetLimit);

/// Exact solver when every symbol occurs exactly once in every string:
/// longest chain increasing in every string's position order.
/// Throws kStructure when the precondition fails.
MultiLcsResult multi_lcs_once_per_symbol(std::span<const Sequence> strings);

/// Best single-symbol run: max over symbols a of min_i count(a, s_i).
/// Length times `sigma` bounds the exact LCS from above.
MultiLcsResult single_symbol_approx(std::span<const Sequence> strings,
                                    int sigma);

/// Randomized best-next greedy with restarts, then gap insertion on the best
/// witness. `effort` counts candidate evaluations (one symbol checked
/// against all strings). Seeded with single_symbol_approx, so the result is
/// never shorter than it.
MultiLcsResult heuristic_multi_lcs(std::span<const Sequence> strings,
                                   std::uint64_t effort, std::uint64_t seed);

}  // namespace lcsgap
