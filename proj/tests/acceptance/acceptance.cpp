// Acceptance gate: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <unistd.h>

#include "lcsgap/families.hpp"
#include "lcsgap/graph.hpp"
#include "lcsgap/io.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"
#include "lcsgap/rng.hpp"
#include "lcsgap/soundness.hpp"
#include "oracles.hpp"

using namespace lcsgap;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Sequence random_string(Rng& rng, int sigma, std::size_t len) {
  Sequence s(len);
  for (auto& c : s) c = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(sigma)));
  return s;
}

Sequence random_subsequence(Rng& rng, const Sequence& s, double keep) {
  Sequence out;
  for (Symbol c : s)
    if (rng.bernoulli(keep)) out.push_back(c);
  return out;
}

struct Pipeline {
  PlantedGraph planted;
  SymbolicInstance sym;
  BlockInstance inst;
  Sequence witness;
};

// Huge alphabet: alpha m < 1 forces pairwise-disjoint blocks.
constexpr int kWideSigma = 1 << 24;

Pipeline planted_pipeline(int n, Rational gamma, Rational beta, int m, double p,
                          std::uint64_t seed) {
  Pipeline out;
  const auto params = make_params(n, gamma, beta, m);
  out.planted = plant_clique(n, params.k, p, seed);
  out.sym = jiang_li(out.planted.graph);
  const auto family = random_family(n, params.alpha, kWideSigma, m, seed, 10).family;
  out.inst = alphabet_reduce(out.sym, family, params);
  out.witness = expand_witness(family, clique_to_witness(out.sym, out.planted.clique));
  return out;
}

// 1. Jiang-Li exactness.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  int mismatches = 0, dp_checked = 0;
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(derive_seed(1, Stream::kTrial, t));
    const int n = 1 + static_cast<int>(rng.below(12));
    const double p = rng.uniform01();
    Graph g = t % 2 == 0 ? erdos_renyi(n, p, t)
                         : plant_clique(n, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n))),
                                        p * 0.5, t)
                               .graph;
    const auto inst = jiang_li(g);
    const auto r = multi_lcs_subset_enum(inst);
    const auto clique = static_cast<std::size_t>(oracle::max_clique_size(g));
    if (r.length != clique || !is_common_subsequence(r.witness, inst.all_strings())) ++mismatches;
    if (n <= 4) {
      ++dp_checked;
      if (multi_lcs_product_dp(inst.all_strings()).length != clique) ++mismatches;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {mismatches == 0 && secs < 60.0,
          "300 graphs, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(dp_checked) + " product-DP cross-checks, " + std::to_string(secs) +
              " s"};
}

// 2. Completeness.
Outcome criterion2() {
  int failures = 0;
  const Rational options[][2] = {{Rational(1, 4), Rational(1, 8)},
                                 {Rational(1, 2), Rational(1, 4)},
                                 {Rational(1, 2), Rational(1, 8)},
                                 {Rational(1, 3), Rational(1, 6)}};
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(derive_seed(2, Stream::kTrial, t));
    const auto& [gamma, beta] = options[t % 4];
    int n = 8 + 4 * static_cast<int>(rng.below(9));  // multiples of 4 in [8, 40]
    const int m = 8 << rng.below(3);
    const auto pipe = planted_pipeline(n, gamma, beta, m, 0.3 * rng.uniform01(), t);
    const auto& params = pipe.inst.params;
    if (static_cast<std::int64_t>(pipe.witness.size()) != params.ell_yes ||
        !is_common_subsequence(pipe.witness, pipe.inst.all_strings())) {
      ++failures;
    }
  }
  return {failures == 0, "50 pipelines, n in [8,40], " + std::to_string(failures) + " failures"};
}

// 3. Family certification.
Outcome criterion3() {
  int first_try = 0;
  double mean_sum = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto s = random_family(100, Rational(1, 4), 256, 512, seed, 3);
    if (s.attempts == 1) ++first_try;
    mean_sum += s.report.mean_lcs;
  }
  const double mean = mean_sum / 20;
  const bool pass = first_try >= 19 && mean > 48.0 && mean < 80.0;
  return {pass, std::to_string(first_try) + "/20 certified on the first attempt, mean pairwise LCS " +
                    std::to_string(mean) + " (band 48..80)"};
}

// 4. Peeling invariant.
Outcome criterion4() {
  int violations = 0, checks = 0;
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng(derive_seed(4, Stream::kTrial, t));
    const int n = 2 + static_cast<int>(rng.below(29));
    const Graph g = erdos_renyi(n, rng.uniform01(), t);
    const Rational base = density(g);
    for (int k = 2; k <= n; ++k) {
      ++checks;
      const auto kept = dense_subgraph_peel(g, k);
      if (kept.size() != static_cast<std::size_t>(k) || oracle::subset_density(g, kept) < base) {
        ++violations;
      }
    }
  }
  return {violations == 0, "1000 graphs, " + std::to_string(checks) + " (graph, k) pairs, " +
                               std::to_string(violations) + " violations"};
}

// 5. Approximation guarantee.
Outcome criterion5() {
  int violations = 0;
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng(derive_seed(5, Stream::kTrial, t));
    std::size_t exact = 0, approx = 0;
    std::size_t sigma = 0;
    if (t % 2 == 0) {
      const int n = 1 + static_cast<int>(rng.below(10));
      const auto inst = jiang_li(erdos_renyi(n, rng.uniform01(), t));
      exact = multi_lcs_subset_enum(inst).length;
      // Vertex labels 1..n; the approximation counts symbols, so sigma = n.
      sigma = static_cast<std::size_t>(n);
      approx = single_symbol_approx(inst.all_strings(), n).length;
    } else {
      const int sigma_i = 1 + static_cast<int>(rng.below(5));
      std::vector<Sequence> strings;
      const int count = 2 + static_cast<int>(rng.below(4));
      for (int i = 0; i < count; ++i) strings.push_back(random_string(rng, sigma_i, 1 + rng.below(10)));
      exact = multi_lcs_product_dp(strings).length;
      sigma = static_cast<std::size_t>(sigma_i);
      approx = single_symbol_approx(strings, sigma_i).length;
    }
    if (approx * sigma < exact) ++violations;
  }
  return {violations == 0, "200 instances, " + std::to_string(violations) + " violations"};
}

// 6. Soundness machinery.
Outcome criterion6() {
  int lossy = 0;
  for (std::uint64_t t = 0; t < 25; ++t) {
    const auto pipe = planted_pipeline(8 + 4 * static_cast<int>(t % 3), Rational(1, 4),
                                       Rational(1, 8), 16, 0.4, 600 + t);
    Rng rng(derive_seed(6, Stream::kTrial, t));
    const auto all = pipe.inst.all_strings();
    for (int s = 0; s < 20; ++s) {
      Sequence L = random_subsequence(rng, pipe.witness, rng.uniform01());
      if (!is_common_subsequence(L, all)) {
        ++lossy;
        continue;
      }
      const auto dec = decompose(L, pipe.inst);
      Sequence joined;
      for (const auto& z : dec.z_blocks) joined.insert(joined.end(), z.begin(), z.end());
      if (joined != L) ++lossy;
    }
  }

  int bound_violations = 0;
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng(derive_seed(7, Stream::kTrial, t));
    const int n = 16 * (1 + static_cast<int>(rng.below(8)));
    const Rational beta(1 + static_cast<std::int64_t>(rng.below(7)), 8);
    const auto params = make_params(n, Rational(1), beta, 4);
    const double keep = rng.uniform01() * rng.uniform01();
    BlockDecomposition dec;
    dec.n = n;
    for (int i = 1; i <= n; ++i)
      if (rng.bernoulli(keep)) dec.heavy_set.push_back(i);
    const auto r = prune_sparse(dec, params);
    const Rational bound = Rational(static_cast<std::int64_t>(dec.heavy_set.size())) -
                           Rational(4) * params.alpha / params.beta * Rational(n);
    if (Rational(static_cast<std::int64_t>(r.v_h_pruned.size())) < bound) ++bound_violations;
  }

  int yes_fail = 0;
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto pipe = planted_pipeline(12 + 4 * static_cast<int>(t % 3), Rational(1, 4),
                                       Rational(1, 8), 16, 0.3, 700 + t);
    const auto r = extract_dense_subgraph(pipe.witness, pipe.inst);
    if (r.verdict != Verdict::kSoundnessWitness || r.padded_density != Rational(1) ||
        r.padded_subset != pipe.planted.clique || r.padded_density < r.density_threshold) {
      ++yes_fail;
    }
  }
  return {lossy == 0 && bound_violations == 0 && yes_fail == 0,
          "(a) 500 subsequences, " + std::to_string(lossy) + " lossy; (b) 500 patterns, " +
              std::to_string(bound_violations) + " removal-bound violations; (c) 20 YES pipelines, " +
              std::to_string(yes_fail) + " without a density-1 witness"};
}

// 7. NO-instance behaviour.
Outcome criterion7() {
  struct Shape {
    int n;
    Rational gamma, beta;
  };
  const Shape shapes[] = {{4, Rational(1, 2), Rational(1, 4)},
                          {6, Rational(1, 2), Rational(1, 6)},
                          {6, Rational(1, 2), Rational(1, 3)},
                          {8, Rational(1, 2), Rational(1, 4)},
                          {8, Rational(1, 4), Rational(1, 8)}};
  int certified = 0, crossed = 0;
  std::size_t longest = 0;
  Rational worst_ratio(0);
  for (std::uint64_t t = 0; certified < 20 && t < 1000; ++t) {
    const Shape& shape = shapes[t % 5];
    const int m = 32;
    const auto params = make_params(shape.n, shape.gamma, shape.beta, m);
    const Graph g = erdos_renyi(shape.n, 0.05, 900 + t);
    const auto dks = dks_brute_force(g, params.k, params.gamma * params.gamma / Rational(4));
    if (dks.kind != DksKind::kNo) continue;
    ++certified;
    const auto family = random_family(shape.n, params.alpha, kWideSigma, m, 900 + t, 10).family;
    const auto inst = alphabet_reduce(jiang_li(g), family, params);
    const auto h = heuristic_multi_lcs(inst.all_strings(), 1'000'000, 900 + t);
    const Rational found(static_cast<std::int64_t>(h.length));
    longest = std::max(longest, h.length);
    worst_ratio = std::max(worst_ratio, found / params.ell_no);
    if (found > params.ell_no) ++crossed;
  }
  return {certified == 20 && crossed == 0,
          std::to_string(certified) + " NO-certified instances (n <= 8), " +
              std::to_string(crossed) + " above 2*beta*m*n; longest found " +
              std::to_string(longest) + ", max found/ell_no " + format_rational(worst_ratio) +
              " (statistical evidence only)"};
}

// 8. Synchronization verifier.
Outcome criterion8() {
  const Sequence aaaa{0, 0, 0, 0};
  const auto r = verify_sync_string(aaaa, Rational(1), Rational(1, 4));
  bool ok = !r.is_valid && r.violating_quadruple &&
            oracle::is_violation(aaaa, *r.violating_quadruple, Rational(1), Rational(1, 4));
  for (int len = 2; len <= 60; ++len) {
    Sequence s(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = i;
    ok = ok && verify_sync_string(s, Rational(2), Rational(1, 64)).is_valid;
  }
  int disagreements = 0, valid = 0;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(derive_seed(8, Stream::kTrial, t));
    const int sigma = 2 + static_cast<int>(rng.below(63));
    const Sequence s = random_string(rng, sigma, 2 + rng.below(99));
    const Rational c(1 << rng.below(3));
    const Rational eps(1 + static_cast<std::int64_t>(rng.below(4)), 4);
    const auto mine = verify_sync_string(s, c, eps);
    const auto other = oracle::sync_scan_suffix(s, c, eps);
    if (mine.is_valid != !other.has_value()) ++disagreements;
    if (!mine.is_valid && !oracle::is_violation(s, *mine.violating_quadruple, c, eps)) {
      ++disagreements;
    }
    if (other && !oracle::is_violation(s, *other, c, eps)) ++disagreements;
    valid += mine.is_valid ? 1 : 0;
  }
  return {ok && disagreements == 0,
          std::string("\"aaaa\" rejected at ") +
              (r.violating_quadruple
                   ? "(" + std::to_string(r.violating_quadruple->i) + "," +
                         std::to_string(r.violating_quadruple->j) + "," +
                         std::to_string(r.violating_quadruple->i_prime) + "," +
                         std::to_string(r.violating_quadruple->j_prime) + ")"
                   : "-") +
              ", distinct strings accepted; 50 random strings (" + std::to_string(valid) +
              " valid), " + std::to_string(disagreements) + " disagreements"};
}

// 9. Serialization round trips through files.
Outcome criterion9() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("lcsgap_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  int failures = 0;
  auto round_trip = [&](const std::string& name, const std::string& text,
                        const std::function<std::string(const std::string&)>& reformat) {
    const std::string path = (dir / name).string();
    io::write_file(path, text);
    const std::string read = io::read_file(path);
    if (read != text || reformat(read) != text) ++failures;
  };
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(9, Stream::kTrial, t));
    const int n = 2 + static_cast<int>(rng.below(10));
    const Graph g = erdos_renyi(n, rng.uniform01(), t);
    round_trip("g.txt", io::format_graph(g),
               [](const std::string& s) { return io::format_graph(io::parse_graph(s)); });
    if (io::parse_graph(io::format_graph(g)) != g) ++failures;

    const auto fam = random_family(n, Rational(1), 2 + static_cast<int>(rng.below(30)),
                                   1 + static_cast<int>(rng.below(20)), t, 0)
                         .family;
    round_trip("f.txt", io::format_family(fam),
               [](const std::string& s) { return io::format_family(io::parse_family(s)); });
    if (io::parse_family(io::format_family(fam)) != fam) ++failures;

    round_trip("i.txt", io::format_instance(io::to_instance_file(jiang_li(g))),
               [](const std::string& s) { return io::format_instance(io::parse_instance(s)); });

    const auto pipe = planted_pipeline(8, Rational(1, 4), Rational(1, 8), 8, 0.3, 1000 + t);
    round_trip("b.txt", io::format_instance(io::to_instance_file(pipe.inst)),
               [](const std::string& s) { return io::format_instance(io::parse_instance(s)); });
    const Sequence L = random_subsequence(rng, pipe.witness, rng.uniform01());
    const auto report = extract_dense_subgraph(L, pipe.inst);
    round_trip("r.json", io::format_extraction(report),
               [](const std::string& s) { return io::format_extraction(io::parse_extraction(s)); });
    if (io::parse_extraction(io::format_extraction(report)) != report) ++failures;
    io::InstanceMetadata meta{"block", pipe.inst.params, pipe.inst.block_layout,
                              {{"seed", std::to_string(1000 + t)}}};
    round_trip("m.json", io::format_metadata(meta),
               [](const std::string& s) { return io::format_metadata(io::parse_metadata(s)); });
    const io::SolveRecord rec{heuristic_multi_lcs(pipe.inst.all_strings(), 500, t),
                              rng.uniform01() * 100};
    round_trip("s.json", io::format_solve(rec),
               [](const std::string& s) { return io::format_solve(io::parse_solve(s)); });
  }
  fs::remove_all(dir);
  return {failures == 0, "100 artifact sets (graph, family, symbolic and block instance, "
                         "metadata, solve and extraction reports), " +
                             std::to_string(failures) + " mismatches"};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"1 Jiang-Li exactness", criterion1},   {"2 Completeness", criterion2},
      {"3 Family certification", criterion3}, {"4 Peeling invariant", criterion4},
      {"5 Approximation guarantee", criterion5}, {"6 Soundness machinery", criterion6},
      {"7 NO-instance behaviour", criterion7}, {"8 Synchronization verifier", criterion8},
      {"9 Serialization", criterion9},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("CRITERION %s: %s (%s) [%.1fs]\n", name, o.pass ? "PASS" : "FAIL",
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
