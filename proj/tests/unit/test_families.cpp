#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "lcsgap/families.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/rng.hpp"
#include "oracles.hpp"

using namespace lcsgap;

namespace {

Sequence random_string(Rng& rng, int sigma, std::size_t len) {
  Sequence s(len);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
  return s;
}

void check_certificate(const StringFamily& f) {
  REQUIRE(f.certified);
  REQUIRE(f.strings.size() == static_cast<std::size_t>(f.n));
  for (const auto& s : f.strings) {
    CHECK(s.size() == static_cast<std::size_t>(f.m));
    for (Symbol c : s) CHECK((c >= 0 && c < f.sigma_prime));
  }
  for (std::size_t i = 0; i < f.strings.size(); ++i)
    for (std::size_t j = i + 1; j < f.strings.size(); ++j)
      CHECK(Rational(static_cast<std::int64_t>(oracle::lcs_table(f.strings[i], f.strings[j]))) <=
            f.alpha * Rational(f.m));
}

}  // namespace

TEST_CASE("random_family examples") {
  const auto vacuous = random_family(2, Rational(1), 2, 4, 9, 0);
  CHECK(vacuous.attempts == 1);
  check_certificate(vacuous.family);

  try {
    random_family(2, Rational(0), 2, 4, 1, 3);
    FAIL("expected certification failure");
  } catch (const CertificationFailure& e) {
    CHECK(e.kind() == ErrorKind::kCertification);
    CHECK(e.worst().worst_lcs >= 1);
    CHECK(e.worst().worst_i == 0);
    CHECK(e.worst().worst_j == 1);
  }

  const auto a = random_family(6, Rational(1, 2), 16, 24, 42, 3);
  const auto b = random_family(6, Rational(1, 2), 16, 24, 42, 3);
  CHECK(a.family == b.family);
  check_certificate(a.family);

  CHECK_THROWS_AS(random_family(2, Rational(1, 2), 1, 4, 1, 0), Error);
  CHECK_THROWS_AS(random_family(2, Rational(1, 2), 4, 0, 1, 0), Error);
}

TEST_CASE("random pairs concentrate near 2m/sqrt(sigma)") {
  for (const int sigma : {64, 256}) {
    Rng rng(static_cast<std::uint64_t>(sigma));
    const int m = 512;
    double total = 0;
    const int pairs = 200;
    for (int t = 0; t < pairs; ++t) {
      total += static_cast<double>(lcs_length(random_string(rng, sigma, m),
                                              random_string(rng, sigma, m)));
    }
    const double mean = total / pairs;
    const double expect = 2.0 * m / std::sqrt(static_cast<double>(sigma));
    CHECK(mean >= 0.75 * expect);
    CHECK(mean <= 1.25 * expect);
  }
}

TEST_CASE("greedy_family examples") {
  const auto one = greedy_family(1, Rational(1, 2), 4, 8);
  CHECK(one.strings.size() == 1);
  CHECK(one.certified);
  const auto three = greedy_family(3, Rational(1, 2), 16, 32);
  check_certificate(three);
  CHECK(three == greedy_family(3, Rational(1, 2), 16, 32));
  CHECK_THROWS_AS(greedy_family(5, Rational(0), 2, 8, 10), Error);
}

TEST_CASE("certification is monotone in alpha") {
  const auto f = random_family(5, Rational(1, 2), 32, 30, 4, 5).family;
  for (const Rational bigger : {Rational(1, 2), Rational(2, 3), Rational(1)}) {
    CHECK(pairwise_report(f.strings, bigger, f.m).within_bound);
  }
}

TEST_CASE("sync verifier: repeated symbol is rejected") {
  const Sequence aaaa{0, 0, 0, 0};
  const auto r = verify_sync_string(aaaa, Rational(1), Rational(1, 4));
  REQUIRE_FALSE(r.is_valid);
  REQUIRE(r.violating_quadruple);
  const Quadruple q = *r.violating_quadruple;
  CHECK(q == Quadruple{1, 2, 2, 3});
  CHECK(r.violating_lcs == 1);
  CHECK(oracle::is_violation(aaaa, q, Rational(1), Rational(1, 4)));
  // The pair of halves [1,3) and [3,5): LCS 2 > (1/4) * 4.
  CHECK(oracle::is_violation(aaaa, Quadruple{1, 3, 3, 5}, Rational(1), Rational(1, 4)));
}

TEST_CASE("sync verifier: all-distinct strings are accepted") {
  for (int len = 2; len <= 40; len += 7) {
    Sequence s(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = i;
    for (const Rational eps : {Rational(1, 100), Rational(1, 4), Rational(3, 4)}) {
      const auto r = verify_sync_string(s, Rational(2), eps);
      CHECK(r.is_valid);
    }
  }
}

TEST_CASE("sync verifier agrees with independent scans") {
  Rng rng(2024);
  for (int t = 0; t < 60; ++t) {
    const auto len = 2 + rng.below(11);
    const int sigma = 1 + static_cast<int>(rng.below(5));
    const Sequence s = random_string(rng, sigma, len);
    const Rational c(static_cast<std::int64_t>(rng.below(5)), 1 + static_cast<std::int64_t>(rng.below(2)));
    const Rational eps(1 + static_cast<std::int64_t>(rng.below(4)), 4);
    const auto r = verify_sync_string(s, c, eps);
    const auto naive = oracle::sync_scan_naive(s, c, eps);
    CHECK(r.is_valid == !naive.has_value());
    CHECK(r.is_valid == !oracle::sync_scan_suffix(s, c, eps).has_value());
    if (!r.is_valid) {
      CHECK(*r.violating_quadruple == *naive);  // same lexicographic scan order
    }
  }
}

TEST_CASE("sync verifier errors") {
  CHECK_THROWS_AS(verify_sync_string(Sequence{0}, Rational(1), Rational(1, 2)), Error);
  CHECK_THROWS_AS(verify_sync_string(Sequence{0, 1}, Rational(1), Rational(0)), Error);
  try {
    verify_sync_string(Sequence(200, 0), Rational(1), Rational(1, 2), 1000);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudget);
  }
}

TEST_CASE("alternate_blocks examples") {
  const int m = 3;
  const Sequence s{0, 1, 2, 3, 4, 5, 6, 7, 8};
  const auto two = alternate_blocks(s, 2, m, Rational(1), 9);
  REQUIRE(two.strings.size() == 2);
  CHECK(two.strings[0] == Sequence{0, 1, 2});
  CHECK(two.strings[1] == Sequence{6, 7, 8});
  CHECK(two.certified);
  const auto one = alternate_blocks(s, 1, m, Rational(1, 3), 9);
  CHECK(one.strings == std::vector<Sequence>{{0, 1, 2}});
  try {
    alternate_blocks(s, 3, m, Rational(1), 9);
    FAIL("expected a length error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kParameter);
  }
  // Blocks of an all-distinct string share nothing.
  Sequence distinct(7 * 4);
  for (std::size_t i = 0; i < distinct.size(); ++i) distinct[i] = static_cast<Symbol>(i);
  const auto four = alternate_blocks(distinct, 4, 4, Rational(1, 8), 28);
  check_certificate(four);
}

TEST_CASE("block length inequality") {
  // m > 2 alpha^-2 log2 n
  CHECK(alternate_block_length_ok(Rational(1, 2), 4, 17));
  CHECK_FALSE(alternate_block_length_ok(Rational(1, 2), 4, 16));
  CHECK(alternate_block_length_ok(Rational(1), 8, 7));
  CHECK_FALSE(alternate_block_length_ok(Rational(1), 8, 6));
}
