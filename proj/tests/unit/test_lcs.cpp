#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "lcsgap/graph.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"
#include "lcsgap/rng.hpp"
#include "oracles.hpp"

using namespace lcsgap;

namespace {

Sequence random_string(Rng& rng, int sigma, std::size_t len) {
  Sequence s(len);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
  return s;
}

Sequence random_permutation(Rng& rng, int n) {
  Sequence p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i + 1))]);
  return p;
}

SymbolicInstance k3() {
  return jiang_li(Graph(3, std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));
}

}  // namespace

TEST_CASE("lcs_pair examples") {
  const Sequence abc{0, 1, 2};
  const auto same = lcs_pair(abc, abc);
  CHECK(same.length == 3);
  CHECK(same.alignment.mapping == std::vector<std::int64_t>{0, 1, 2});
  CHECK(lcs_pair(abc, Sequence{2, 1, 0}).length == 1);
  const Sequence x1{2, 3, 1, 2, 3}, xp2{1, 2, 1, 3};
  const auto r = lcs_pair(x1, xp2);
  CHECK(r.length == 3);
  CHECK(r.alignment.is_valid(x1, xp2));
  CHECK(r.alignment.matched() == 3);
}

TEST_CASE("pairwise kernels agree with oracles") {
  Rng rng(11);
  for (int t = 0; t < 400; ++t) {
    const int sigma = 1 + static_cast<int>(rng.below(6));
    const Sequence a = random_string(rng, sigma, rng.below(13));
    const Sequence b = random_string(rng, sigma, rng.below(13));
    const std::size_t expect = oracle::lcs_by_enumeration(a, b);
    const PairLcs full = lcs_pair(a, b);
    CHECK(full.length == expect);
    CHECK(full.alignment.is_valid(a, b));
    CHECK(full.alignment.matched() == expect);
    CHECK(lcs_length(a, b) == expect);
    CHECK(lcs_length_dp(a, b) == expect);
    CHECK(lcs_pair(b, a).length == expect);
    CHECK(2 * expect == a.size() + b.size() - oracle::indel_distance(a, b));
  }
}

TEST_CASE("bit-parallel kernel on long strings") {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    const int sigma = 2 + static_cast<int>(rng.below(300));
    const Sequence a = random_string(rng, sigma, 1 + rng.below(300));
    const Sequence b = random_string(rng, sigma, 1 + rng.below(300));
    CHECK(lcs_length(a, b) == oracle::lcs_table(a, b));
    CHECK(lcs_length_dp(a, b) == oracle::lcs_table(a, b));
  }
}

TEST_CASE("is_common_subsequence and embed") {
  const auto inst = k3();
  const auto all = inst.all_strings();
  CHECK(is_common_subsequence(Sequence{}, all));
  CHECK(is_common_subsequence(Sequence{1, 2, 3}, all));
  const std::vector<Sequence> inc{{1, 2}, {1, 2}};
  CHECK_FALSE(is_common_subsequence(Sequence{2, 1}, inc));

  const Sequence s{4, 5, 6};
  CHECK(embed(s, s).mapping == std::vector<std::int64_t>{0, 1, 2});
  CHECK(embed(Sequence{0, 1}, Sequence{0, 0, 1, 1}).mapping == std::vector<std::int64_t>{0, 2});
  CHECK(embed(Sequence{}, s).mapping.empty());
  try {
    embed(Sequence{7}, s);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPrecondition);
  }
}

TEST_CASE("product DP examples and agreement with pairwise LCS") {
  const std::vector<Sequence> ab(3, Sequence{0, 1});
  CHECK(multi_lcs_product_dp(ab).length == 2);
  const auto r = multi_lcs_product_dp(k3().all_strings());
  CHECK(r.length == 3);
  CHECK(r.witness == Sequence{1, 2, 3});
  CHECK(r.exact);
  CHECK(r.solver == Solver::kProductDp);

  Rng rng(3);
  for (int t = 0; t < 500; ++t) {
    const int sigma = 1 + static_cast<int>(rng.below(5));
    const std::vector<Sequence> pair{random_string(rng, sigma, rng.below(15)),
                                     random_string(rng, sigma, rng.below(15))};
    const auto dp = multi_lcs_product_dp(pair);
    CHECK(dp.length == lcs_pair(pair[0], pair[1]).length);
    CHECK(dp.witness.size() == dp.length);
    CHECK(is_common_subsequence(dp.witness, pair));
  }
  try {
    multi_lcs_product_dp(std::vector<Sequence>(4, Sequence(20, 0)), 1000);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudget);
  }
}

TEST_CASE("product DP witness is the lexicographically smallest longest one") {
  const std::vector<Sequence> s{{1, 0}, {0, 1, 0}, {1, 0, 1}};
  // Common subsequences of length 1: {0}, {1}; length 2: "1 0" only.
  CHECK(multi_lcs_product_dp(s).witness == Sequence{1, 0});
  const std::vector<Sequence> tie{{0, 1}, {1, 0}};
  CHECK(multi_lcs_product_dp(tie).witness == Sequence{0});
}

TEST_CASE("multi-string exact solvers agree with enumeration") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const int count = 2 + static_cast<int>(rng.below(3));
    const int sigma = 1 + static_cast<int>(rng.below(4));
    std::vector<Sequence> strings;
    for (int i = 0; i < count; ++i) strings.push_back(random_string(rng, sigma, rng.below(10)));
    const auto dp = multi_lcs_product_dp(strings);
    CHECK(dp.length == oracle::multi_lcs_by_enumeration(strings));
    CHECK(is_common_subsequence(dp.witness, strings));
    const auto approx = single_symbol_approx(strings, sigma);
    CHECK(approx.length * static_cast<std::size_t>(sigma) >= dp.length);
    const auto heur = heuristic_multi_lcs(strings, 2000, static_cast<std::uint64_t>(t));
    CHECK(heur.length <= dp.length);
    CHECK(heur.length >= approx.length);
    CHECK(is_common_subsequence(heur.witness, strings));
  }
}

TEST_CASE("subset enumeration examples") {
  const auto r = multi_lcs_subset_enum(k3());
  CHECK(r.length == 3);
  CHECK(r.witness == Sequence{1, 2, 3});
  const auto empty = jiang_li(Graph(4));
  CHECK(multi_lcs_subset_enum(empty).length == 1);
  CHECK(multi_lcs_product_dp(empty.all_strings()).length == 1);
  try {
    multi_lcs_subset_enum(jiang_li(Graph(30)), 24);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kBudget);
  }
}

TEST_CASE("subset enumeration equals max clique") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const int n = 1 + static_cast<int>(rng.below(10));
    const Graph g = erdos_renyi(n, rng.uniform01(), seed);
    const auto inst = jiang_li(g);
    const auto r = multi_lcs_subset_enum(inst);
    CHECK(r.length == static_cast<std::size_t>(oracle::max_clique_size(g)));
    CHECK(is_common_subsequence(r.witness, inst.all_strings()));
    if (n <= 4) CHECK(multi_lcs_product_dp(inst.all_strings()).length == r.length);
  }
}

TEST_CASE("once-per-symbol solver") {
  const Sequence id{0, 1, 2, 3, 4};
  const std::vector<Sequence> same(3, id);
  CHECK(multi_lcs_once_per_symbol(same).length == 5);
  const std::vector<Sequence> rev{{1, 2, 3}, {3, 2, 1}};
  CHECK(multi_lcs_once_per_symbol(rev).length == 1);
  Rng rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::vector<Sequence> perms{random_permutation(rng, 8), random_permutation(rng, 8),
                                      random_permutation(rng, 8)};
    const auto once = multi_lcs_once_per_symbol(perms);
    const auto dp = multi_lcs_product_dp(perms);
    CHECK(once.length == dp.length);
    CHECK(once.witness == dp.witness);
    CHECK(once.exact);
  }
  const std::vector<Sequence> bad{{0, 0, 1}, {0, 1}};
  try {
    multi_lcs_once_per_symbol(bad);
    FAIL("expected a structure error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kStructure);
  }
}

TEST_CASE("single-symbol approximation examples") {
  const std::vector<Sequence> aab{{0, 0, 1}, {0, 1, 0}};
  const auto r = single_symbol_approx(aab, 2);
  CHECK(r.length == 2);
  CHECK(r.witness == Sequence{0, 0});
  CHECK(single_symbol_approx(std::vector<Sequence>{{0, 1, 2}}, 3).length == 1);
  CHECK(single_symbol_approx(k3().all_strings(), 3).length == 1);
}

TEST_CASE("heuristic examples") {
  const Sequence s{3, 1, 4, 1, 5, 9, 2, 6};
  const std::vector<Sequence> same(4, s);
  CHECK(heuristic_multi_lcs(same, 1000, 1).length == s.size());
  const std::vector<Sequence> aab{{0, 0, 1}, {0, 1, 0}};
  const auto zero = heuristic_multi_lcs(aab, 0, 1);
  CHECK(zero.length >= single_symbol_approx(aab, 2).length);
  CHECK_FALSE(zero.exact);
  CHECK(heuristic_multi_lcs(aab, 500, 9).witness == heuristic_multi_lcs(aab, 500, 9).witness);
}

TEST_CASE("solver names") {
  CHECK(to_string(Solver::kSubsetEnum) == "SUBSET_ENUM");
  CHECK(parse_solver("subset-enum") == Solver::kSubsetEnum);
  CHECK(parse_solver("SINGLE_SYMBOL_APPROX") == Solver::kSingleSymbolApprox);
  CHECK_THROWS_AS(parse_solver("magic"), Error);
}
