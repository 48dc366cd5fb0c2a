#include "lcsgap/families.hpp"

#include <algorithm>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "lcsgap/lcs.hpp"
#include "lcsgap/rng.hpp"

namespace lcsgap {
namespace {

using BigInt = boost::multiprecision::cpp_int;

// Base seed of the greedy candidate stream. Fixed so the construction is
// deterministic in (n, alpha, sigma_prime, m) alone.
constexpr std::uint64_t kGreedyStreamBase = 0x6c63736761702d67ULL;

void check_family_params(int n, const Rational& alpha, int sigma_prime, int m) {
  if (n < 1) throw Error(ErrorKind::kParameter, "family size n must be >= 1");
  if (m < 1) throw Error(ErrorKind::kParameter, "string length m must be >= 1");
  if (sigma_prime < 2) {
    throw Error(ErrorKind::kParameter, "alphabet size must be >= 2");
  }
  if (alpha < Rational(0)) {
    throw Error(ErrorKind::kParameter, "alpha must be non-negative");
  }
}

bool within(std::size_t lcs, const Rational& alpha, int m) {
  // lcs <= alpha * m  <=>  lcs * den <= num * m
  return static_cast<std::int64_t>(lcs) * alpha.denominator() <=
         alpha.numerator() * static_cast<std::int64_t>(m);
}

Sequence sample_string(Rng& rng, int sigma_prime, int m) {
  Sequence s(static_cast<std::size_t>(m));
  for (auto& c : s) c = static_cast<Symbol>(rng.below(sigma_prime));
  return s;
}

}  // namespace

PairwiseReport pairwise_report(std::span<const Sequence> strings,
                               const Rational& alpha, int m) {
  PairwiseReport report;
  double total = 0.0;
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < strings.size(); ++a) {
    for (std::size_t b = a + 1; b < strings.size(); ++b) {
      const std::size_t lcs = lcs_length(strings[a], strings[b]);
      total += static_cast<double>(lcs);
      ++pairs;
      if (report.worst_i < 0 || lcs > report.worst_lcs) {
        report.worst_lcs = lcs;
        report.worst_i = static_cast<int>(a);
        report.worst_j = static_cast<int>(b);
      }
      if (!within(lcs, alpha, m)) report.within_bound = false;
    }
  }
  report.mean_lcs = pairs == 0 ? 0.0 : total / static_cast<double>(pairs);
  return report;
}

SampledFamily random_family(int n, const Rational& alpha, int sigma_prime,
                            int m, std::uint64_t seed, int max_retries) {
  check_family_params(n, alpha, sigma_prime, m);
  if (alpha > Rational(1)) {
    throw Error(ErrorKind::kParameter, "alpha must lie in [0, 1]");
  }
  if (max_retries < 0) {
    throw Error(ErrorKind::kParameter, "max_retries must be >= 0");
  }
  PairwiseReport worst;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    Rng rng(derive_seed(seed, Stream::kFamily, static_cast<std::uint64_t>(attempt)));
    std::vector<Sequence> strings;
    strings.reserve(n);
    for (int t = 0; t < n; ++t) strings.push_back(sample_string(rng, sigma_prime, m));
    PairwiseReport report = pairwise_report(strings, alpha, m);
    if (report.within_bound) {
      SampledFamily out;
      out.family = StringFamily{n, m, sigma_prime, std::move(strings), alpha, true};
      out.attempts = attempt + 1;
      out.report = report;
      return out;
    }
    if (worst.worst_i < 0 || report.worst_lcs > worst.worst_lcs) worst = report;
  }
  throw CertificationFailure(
      "random family not certified after " + std::to_string(max_retries + 1) +
          " attempts: worst pair (" + std::to_string(worst.worst_i + 1) + "," +
          std::to_string(worst.worst_j + 1) + ") has LCS " +
          std::to_string(worst.worst_lcs) + " > alpha*m = " +
          format_rational(alpha * Rational(m)),
      worst);
}

StringFamily greedy_family(int n, const Rational& alpha, int sigma_prime, int m,
                           std::uint64_t candidate_budget) {
  check_family_params(n, alpha, sigma_prime, m);
  if (candidate_budget == 0) candidate_budget = 64ULL * static_cast<std::uint64_t>(n);

  std::vector<Sequence> accepted;
  PairwiseReport worst;
  for (std::uint64_t c = 0; c < candidate_budget && accepted.size() < static_cast<std::size_t>(n); ++c) {
    Rng rng(derive_seed(kGreedyStreamBase, Stream::kCandidate, c));
    Sequence candidate = sample_string(rng, sigma_prime, m);
    bool ok = true;
    for (std::size_t a = 0; a < accepted.size() && ok; ++a) {
      const std::size_t lcs = lcs_length(candidate, accepted[a]);
      if (!within(lcs, alpha, m)) {
        ok = false;
        if (worst.worst_i < 0 || lcs > worst.worst_lcs) {
          worst.worst_lcs = lcs;
          worst.worst_i = static_cast<int>(a);
          worst.worst_j = static_cast<int>(accepted.size());
          worst.within_bound = false;
        }
      }
    }
    if (ok) accepted.push_back(std::move(candidate));
  }
  if (accepted.size() < static_cast<std::size_t>(n)) {
    throw CertificationFailure(
        "greedy family: only " + std::to_string(accepted.size()) + " of " +
            std::to_string(n) + " strings accepted within " +
            std::to_string(candidate_budget) + " candidates",
        worst);
  }
  return StringFamily{n, m, sigma_prime, std::move(accepted), alpha, true};
}

bool is_long_span(std::int64_t span, const Rational& c, std::int64_t len) {
  if (len <= 1) return span > 0;  // log2(1) = 0
  const auto p = static_cast<unsigned>(c.numerator());
  const auto q = static_cast<unsigned>(c.denominator());
  if (span <= 0) return false;
  const BigInt lhs = BigInt(1) << (static_cast<unsigned>(span) * q);
  const BigInt rhs = boost::multiprecision::pow(BigInt(len), p);
  return lhs > rhs;
}

SyncStringReport verify_sync_string(std::span<const Symbol> s,
                                    const Rational& c, const Rational& epsilon,
                                    std::uint64_t budget) {
  const auto len = static_cast<std::int64_t>(s.size());
  if (len < 2) throw Error(ErrorKind::kParameter, "sync check needs |s| >= 2");
  if (c < Rational(0)) throw Error(ErrorKind::kParameter, "c must be >= 0");
  if (epsilon <= Rational(0)) {
    throw Error(ErrorKind::kParameter, "epsilon must be positive");
  }

  SyncStringReport report;
  report.c = c;
  report.epsilon = epsilon;

  // Long-distance status is monotone in the span.
  std::int64_t threshold = 1;
  while (threshold <= 2 * len && !is_long_span(threshold, c, len)) ++threshold;
  report.long_span_threshold = threshold;

  std::uint64_t cells = 0;
  for (std::int64_t i = 0; i < len; ++i) {
    for (std::int64_t ip = i + 1; ip < len; ++ip) {
      cells += static_cast<std::uint64_t>((ip - i) * (len - ip));
    }
  }
  if (cells > budget) {
    throw Error(ErrorKind::kBudget,
                "sync check needs " + std::to_string(cells) +
                    " DP cells, budget is " + std::to_string(budget));
  }
  report.cells = cells;

  const std::int64_t num = epsilon.numerator();
  const std::int64_t den = epsilon.denominator();
  std::vector<std::uint32_t> prev, cur;
  // 0-based: first interval s[i, i+a), second s[ip, ip+b).
  for (std::int64_t i = 0; i < len; ++i) {
    for (std::int64_t ip = i + 1; ip < len; ++ip) {
      const std::int64_t rows = ip - i;
      const std::int64_t cols = len - ip;
      prev.assign(static_cast<std::size_t>(cols + 1), 0);
      cur.assign(static_cast<std::size_t>(cols + 1), 0);
      for (std::int64_t a = 1; a <= rows; ++a) {
        const Symbol x = s[static_cast<std::size_t>(i + a - 1)];
        for (std::int64_t b = 1; b <= cols; ++b) {
          const Symbol y = s[static_cast<std::size_t>(ip + b - 1)];
          cur[b] = x == y ? prev[b - 1] + 1 : std::max(prev[b], cur[b - 1]);
          const std::int64_t span = a + b;
          const bool adjacent = a == rows;  // i' = j
          if (!adjacent && span < threshold) continue;
          if (static_cast<std::int64_t>(cur[b]) * den > num * span) {
            report.is_valid = false;
            report.violating_quadruple =
                Quadruple{i + 1, i + a + 1, ip + 1, ip + b + 1};
            report.violating_lcs = cur[b];
            return report;
          }
        }
        std::swap(prev, cur);
        cur[0] = 0;
      }
    }
  }
  return report;
}

StringFamily alternate_blocks(std::span<const Symbol> s, int n, int m,
                              const Rational& alpha, int sigma_prime) {
  if (n < 1 || m < 1) {
    throw Error(ErrorKind::kParameter, "alternate_blocks needs n, m >= 1");
  }
  const auto needed = static_cast<std::size_t>(2 * n - 1) * static_cast<std::size_t>(m);
  if (s.size() < needed) {
    throw Error(ErrorKind::kParameter,
                "string too short for alternate blocks: need (2n-1)m = " +
                    std::to_string(needed) + ", got " + std::to_string(s.size()));
  }
  StringFamily family;
  family.n = n;
  family.m = m;
  family.sigma_prime = sigma_prime;
  family.alpha = alpha;
  for (int t = 1; t <= n; ++t) {
    const auto start = static_cast<std::size_t>(2 * t - 2) * static_cast<std::size_t>(m);
    family.strings.emplace_back(s.begin() + static_cast<std::ptrdiff_t>(start),
                                s.begin() + static_cast<std::ptrdiff_t>(start + m));
  }
  family.certified = pairwise_report(family.strings, alpha, m).within_bound;
  return family;
}

bool alternate_block_length_ok(const Rational& alpha, int n, int m) {
  if (alpha <= Rational(0)) return false;
  if (n <= 1) return m > 0;
  // m > 2 (q/p)^2 log2 n  <=>  m p^2 > 2 q^2 log2 n  <=>  2^(m p^2) > n^(2 q^2)
  const auto p = static_cast<unsigned>(alpha.numerator());
  const auto q = static_cast<unsigned>(alpha.denominator());
  const BigInt lhs = BigInt(1) << (static_cast<unsigned>(m) * p * p);
  const BigInt rhs = boost::multiprecision::pow(BigInt(n), 2 * q * q);
  return lhs > rhs;
}

}  // namespace lcsgap
