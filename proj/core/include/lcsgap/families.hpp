#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lcsgap/types.hpp"

namespace lcsgap {

/// n strings of length m over symbols 0..sigma_prime-1. `certified` means
/// every pairwise LCS was computed and found <= alpha * m.
struct StringFamily {
  int n = 0;
  int m = 0;
  int sigma_prime = 0;
  std::vector<Sequence> strings;
  Rational alpha{0};
  bool certified = false;

  friend bool operator==(const StringFamily&, const StringFamily&) = default;
};

/// Outcome of the exhaustive pairwise check.
struct PairwiseReport {
  bool within_bound = true;
  std::size_t worst_lcs = 0;
  int worst_i = -1;  // 0-based indices of a worst pair
  int worst_j = -1;
  double mean_lcs = 0.0;
};

/// Computes all C(n,2) pairwise LCS lengths and compares each against
/// alpha * m exactly.
PairwiseReport pairwise_report(std::span<const Sequence> strings,
                               const Rational& alpha, int m);

/// Thrown when a family cannot be certified. Kind is kCertification.
class CertificationFailure : public Error {
 public:
  CertificationFailure(const std::string& what, PairwiseReport worst)
      : Error(ErrorKind::kCertification, what), worst_(worst) {}

  const PairwiseReport& worst() const noexcept { return worst_; }

 private:
  PairwiseReport worst_;
};

struct SampledFamily {
  StringFamily family;
  int attempts = 0;  // 1 when the first sample certified
  PairwiseReport report;
};

/// Samples n uniform strings from [sigma_prime]^m and certifies them by
/// pairwise DP; resamples the whole family up to max_retries times.
/// Throws CertificationFailure with the worst pair seen.
SampledFamily random_family(int n, const Rational& alpha, int sigma_prime,
                            int m, std::uint64_t seed, int max_retries);

/// Deterministic construction: candidates come from a fixed counter-seeded
/// stream; a candidate is accepted iff its LCS with every accepted string is
/// <= alpha * m. candidate_budget 0 means 64 * n.
/// Throws CertificationFailure when the budget runs out.
StringFamily greedy_family(int n, const Rational& alpha, int sigma_prime,
                           int m, std::uint64_t candidate_budget = 0);

/// Interval pair (i, j, i', j'): 1-based starts, exclusive ends, so the
/// intervals are s[i..j-1] and s[i'..j'-1] and the combined length is
/// j + j' - i - i'.
struct Quadruple {
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::int64_t i_prime = 0;
  std::int64_t j_prime = 0;

  std::int64_t span() const { return j + j_prime - i - i_prime; }
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

struct SyncStringReport {
  bool is_valid = true;
  std::optional<Quadruple> violating_quadruple;
  std::size_t violating_lcs = 0;
  Rational c{0};
  Rational epsilon{0};
  /// Smallest combined length counted as long distance (> c * log2 |s|).
  std::int64_t long_span_threshold = 0;
  std::uint64_t cells = 0;
};

inline constexpr std::uint64_t kDefaultSyncBudget = 2'000'000'000;

/// True iff span > c * log2(len), decided exactly: 2^(q*span) > len^p for
/// c = p/q.
bool is_long_span(std::int64_t span, const Rational& c, std::int64_t len);

/// Exhaustive c-long-distance epsilon-synchronization check. Every pair of
/// intervals 1 <= i < j <= i' < j' <= |s|+1 is tested when the combined
/// length exceeds c*log2|s|; shorter pairs only when adjacent (i' = j).
/// Reports the first violation in (i, i', j, j') scan order.
/// Throws kParameter for |s| < 2 or negative c / non-positive epsilon;
/// kBudget when the DP cell count exceeds `budget`.
SyncStringReport verify_sync_string(std::span<const Symbol> s,
                                    const Rational& c, const Rational& epsilon,
                                    std::uint64_t budget = kDefaultSyncBudget);

/// S_t = s[(2t-2)m + 1 .. (2t-1)m] for t in [n]. The family is certified at
/// alpha by explicit pairwise DP. Throws kParameter when |s| < (2n-1)m.
StringFamily alternate_blocks(std::span<const Symbol> s, int n, int m,
                              const Rational& alpha, int sigma_prime);

/// m > 2 alpha^-2 log2 n, decided exactly. The block-length condition under
/// which a verified (alpha/2)-synchronization string yields an alpha-family.
bool alternate_block_length_ok(const Rational& alpha, int n, int m);

}  // namespace lcsgap
