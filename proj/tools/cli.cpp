#include "cli.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcsgap/families.hpp"
#include "lcsgap/graph.hpp"
#include "lcsgap/io.hpp"
#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"
#include "lcsgap/rng.hpp"
#include "lcsgap/soundness.hpp"

namespace lcsgap::cli {
namespace {

using nlohmann::json;

constexpr std::string_view kToolVersion = "lcsgap 0.1.0";

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kCertification:
    case ErrorKind::kBudget:
      return kCertificationOrBudget;
    case ErrorKind::kIo:
    case ErrorKind::kParse:
      return kIoError;
    default:
      return kParameterError;
  }
}

void emit(const std::string& path, std::string_view contents, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    io::write_file(path, contents);
  }
}

Rational rational_arg(const std::string& text, std::string_view flag) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::kParameter, "--" + std::string(flag) + ": " + e.what());
  }
}

void require_seed(const std::optional<std::uint64_t>& seed, std::string_view what) {
  if (!seed) {
    throw Error(ErrorKind::kParameter, "--seed is required for " + std::string(what));
  }
}

// ---- option bundles ----

struct GenGraphOpts {
  int n = 0;
  int planted_k = 0;
  double p = 0.0;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct FamilyOpts {
  int n = 0;
  std::string alpha;
  std::string beta;
  int sigma_prime = 0;
  int m = 0;
  std::string construction = "random";
  std::optional<std::uint64_t> seed;
  int max_retries = 5;
  std::uint64_t candidate_budget = 0;
  std::string sync_file;
  std::string out;
};

struct ReduceOpts {
  std::string graph;
  std::string family;
  bool symbolic = false;
  std::string beta;
  std::string gamma;
  int sigma_prime = 0;
  int m = 0;
  std::string construction = "random";
  std::optional<std::uint64_t> seed;
  int max_retries = 5;
  std::string out;
  std::string meta;
};

struct SolveOpts {
  std::string instance;
  std::string solver = "product-dp";
  std::uint64_t budget = kDefaultProductBudget;
  int max_vertices = kDefaultSubsetLimit;
  std::uint64_t effort = 1'000'000;
  std::optional<std::uint64_t> seed;
  int sigma = 0;
  std::string out;
};

struct VerifyOpts {
  std::string instance;
  std::string witness;
  std::string symbols;
  std::string family;
  std::string out;
};

struct SyncOpts {
  std::string sync_file;
  std::string c;
  std::string epsilon;
  std::uint64_t budget = kDefaultSyncBudget;
  std::string out;
};

struct GapOpts {
  std::string mode = "yes";
  int trials = 0;
  int n = 0;
  std::string beta;
  std::string gamma;
  int m = 0;
  int sigma_prime = 0;
  double p = 0.0;
  std::string construction = "random";
  int max_retries = 5;
  std::uint64_t effort = 1'000'000;
  std::optional<std::uint64_t> seed;
  std::string csv;
  std::string report;
};

// ---- family construction shared by gen-family, reduce and gap-experiment ----

struct BuiltFamily {
  StringFamily family;
  json info;
};

BuiltFamily build_family(const std::string& construction, int n, const Rational& alpha,
                         int sigma_prime, int m, const std::optional<std::uint64_t>& seed,
                         int max_retries, std::uint64_t candidate_budget,
                         const std::string& sync_file) {
  BuiltFamily out;
  out.info["construction"] = construction;
  if (construction == "random") {
    require_seed(seed, "random family construction");
    SampledFamily s = random_family(n, alpha, sigma_prime, m, *seed, max_retries);
    out.family = std::move(s.family);
    out.info["attempts"] = s.attempts;
    out.info["seed"] = std::to_string(*seed);
    out.info["worst_pair_lcs"] = s.report.worst_lcs;
  } else if (construction == "greedy") {
    out.family = greedy_family(n, alpha, sigma_prime, m, candidate_budget);
  } else if (construction == "sync-file") {
    if (sync_file.empty()) {
      throw Error(ErrorKind::kParameter, "--sync-file is required for sync-file construction");
    }
    const std::string text = io::read_file(sync_file);
    const io::SyncFile sync = io::parse_sync(text);
    const int sigma = sigma_prime > 0 ? sigma_prime : sync.sigma;
    out.family = alternate_blocks(sync.symbols, n, m, alpha, sigma);
    if (!out.family.certified) {
      const PairwiseReport r = pairwise_report(out.family.strings, alpha, m);
      throw CertificationFailure("alternate blocks exceed alpha*m = " +
                                     format_rational(alpha * Rational(m)),
                                 r);
    }
    out.info["sync_sha256"] = sha256_hex(text);
    out.info["block_length_ok"] = alternate_block_length_ok(alpha, n, m);
  } else {
    throw Error(ErrorKind::kParameter,
                "unknown construction '" + construction + "' (random|greedy|sync-file)");
  }
  return out;
}

// ---- subcommands ----

int cmd_gen_graph(const GenGraphOpts& o, std::ostream& out, std::ostream& err) {
  require_seed(o.seed, "gen-graph");
  Graph g;
  VertexSet clique;
  if (o.planted_k > 0) {
    PlantedGraph pg = plant_clique(o.n, o.planted_k, o.p, *o.seed);
    g = std::move(pg.graph);
    clique = std::move(pg.clique);
  } else {
    g = erdos_renyi(o.n, o.p, *o.seed);
  }
  const std::string text = io::format_graph(g);
  emit(o.out, text, out);
  if (!o.out.empty() && o.out != "-") {
    json meta{{"kind", "graph"},
              {"n", o.n},
              {"planted_k", o.planted_k},
              {"edge_prob", o.p},
              {"seed", std::to_string(*o.seed)},
              {"clique", clique},
              {"sha256", sha256_hex(text)},
              {"tool", kToolVersion}};
    io::write_file(o.out + ".meta.json", meta.dump(2) + "\n");
  }
  err << "seed=" << *o.seed << " n=" << g.n() << " edges=" << g.edge_count();
  if (!clique.empty()) err << " clique=" << io::join_symbols(clique);
  err << "\n";
  return kOk;
}

Rational family_alpha(const std::string& alpha, const std::string& beta) {
  if (!alpha.empty() && !beta.empty()) {
    throw Error(ErrorKind::kParameter, "give either --alpha or --beta, not both");
  }
  if (!alpha.empty()) return rational_arg(alpha, "alpha");
  if (!beta.empty()) {
    const Rational b = rational_arg(beta, "beta");
    return b * b / Rational(8);
  }
  throw Error(ErrorKind::kParameter, "one of --alpha or --beta is required");
}

int cmd_gen_family(const FamilyOpts& o, std::ostream& out, std::ostream& /*err*/) {
  const Rational alpha = family_alpha(o.alpha, o.beta);
  BuiltFamily built = build_family(o.construction, o.n, alpha, o.sigma_prime, o.m, o.seed,
                                   o.max_retries, o.candidate_budget, o.sync_file);
  const std::string text = io::format_family(built.family);
  emit(o.out, text, out);
  if (!o.out.empty() && o.out != "-") {
    json meta = built.info;
    meta["kind"] = "family";
    meta["alpha"] = format_rational(alpha);
    meta["sha256"] = sha256_hex(text);
    meta["tool"] = kToolVersion;
    io::write_file(o.out + ".meta.json", meta.dump(2) + "\n");
  }
  return kOk;
}

int cmd_reduce(const ReduceOpts& o, std::ostream& out, std::ostream& /*err*/) {
  const std::string graph_text = io::read_file(o.graph);
  const Graph g = io::parse_graph(graph_text);
  const SymbolicInstance sym = jiang_li(g);

  io::InstanceMetadata meta;
  meta.provenance["graph_sha256"] = sha256_hex(graph_text);
  meta.provenance["tool"] = std::string(kToolVersion);
  std::string instance_text;
  if (o.symbolic) {
    meta.kind = "symbolic";
    instance_text = io::format_instance(io::to_instance_file(sym));
  } else {
    if (o.beta.empty() || o.gamma.empty()) {
      throw Error(ErrorKind::kParameter, "--beta and --gamma are required");
    }
    StringFamily family;
    std::string family_text;
    int m = o.m;
    if (!o.family.empty()) {
      family_text = io::read_file(o.family);
      family = io::parse_family(family_text);
      if (m != 0 && m != family.m) {
        throw Error(ErrorKind::kParameter, "--m disagrees with the family file");
      }
      m = family.m;
    }
    const ReductionParams params =
        make_params(g.n(), rational_arg(o.gamma, "gamma"), rational_arg(o.beta, "beta"), m);
    if (o.family.empty()) {
      BuiltFamily built = build_family(o.construction, g.n(), params.alpha, o.sigma_prime, m,
                                       o.seed, o.max_retries, 0, "");
      family = std::move(built.family);
      family_text = io::format_family(family);
      meta.provenance["family_construction"] = o.construction;
      if (o.seed) meta.provenance["seed"] = std::to_string(*o.seed);
    } else {
      meta.provenance["family_construction"] = "file";
    }
    meta.provenance["family_sha256"] = sha256_hex(family_text);
    const BlockInstance inst = alphabet_reduce(sym, family, params);
    meta.kind = "block";
    meta.params = params;
    meta.block_layout = inst.block_layout;
    instance_text = io::format_instance(io::to_instance_file(inst));
  }
  meta.provenance["instance_sha256"] = sha256_hex(instance_text);
  emit(o.out, instance_text, out);
  const std::string meta_path = !o.meta.empty() ? o.meta
                                : (o.out.empty() || o.out == "-") ? ""
                                                                   : o.out + ".meta.json";
  if (!meta_path.empty()) io::write_file(meta_path, io::format_metadata(meta));
  return kOk;
}

int cmd_solve(const SolveOpts& o, std::ostream& out, std::ostream& /*err*/) {
  const io::InstanceFile inst = io::parse_instance(io::read_file(o.instance));
  const Solver solver = parse_solver(o.solver);
  const auto start = std::chrono::steady_clock::now();
  MultiLcsResult result;
  switch (solver) {
    case Solver::kProductDp:
      result = multi_lcs_product_dp(inst.strings, o.budget);
      break;
    case Solver::kSubsetEnum: {
      const SymbolicInstance sym = symbolic_from_strings(io::to_vertex_strings(inst));
      result = multi_lcs_subset_enum(sym, o.max_vertices);
      for (Symbol& c : result.witness) c -= 1;
      break;
    }
    case Solver::kOncePerSymbol:
      result = multi_lcs_once_per_symbol(inst.strings);
      break;
    case Solver::kSingleSymbolApprox:
      result = single_symbol_approx(inst.strings, o.sigma > 0 ? o.sigma : inst.sigma);
      break;
    case Solver::kHeuristic:
      require_seed(o.seed, "the heuristic solver");
      result = heuristic_multi_lcs(inst.strings, o.effort, *o.seed);
      break;
  }
  const auto stop = std::chrono::steady_clock::now();
  if (!is_common_subsequence(result.witness, inst.strings) ||
      result.witness.size() != result.length) {
    throw Error(ErrorKind::kWitness, "solver returned a witness that failed verification");
  }
  io::SolveRecord record{result,
                         std::chrono::duration<double, std::milli>(stop - start).count()};
  emit(o.out, io::format_solve(record), out);
  return kOk;
}

Sequence parse_symbol_list(const std::string& text) {
  Sequence out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(static_cast<Symbol>(v));
    } catch (const std::exception&) {
      throw Error(ErrorKind::kParse, "malformed symbol '" + tok + "'");
    }
  }
  return out;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out, std::ostream& /*err*/) {
  json report;
  bool ok = true;
  if (!o.family.empty()) {
    const StringFamily f = io::parse_family(io::read_file(o.family));
    const PairwiseReport r = pairwise_report(f.strings, f.alpha, f.m);
    report["family"] = {{"within_bound", r.within_bound},
                        {"claimed_certified", f.certified},
                        {"worst_lcs", r.worst_lcs},
                        {"worst_pair", {r.worst_i + 1, r.worst_j + 1}},
                        {"bound", format_rational(f.alpha * Rational(f.m))}};
    ok = ok && (r.within_bound || !f.certified);
  }
  if (!o.instance.empty()) {
    if (o.witness.empty() == o.symbols.empty()) {
      throw Error(ErrorKind::kParameter, "give exactly one of --witness or --symbols");
    }
    const io::InstanceFile inst = io::parse_instance(io::read_file(o.instance));
    const Sequence w = !o.witness.empty() ? io::parse_solve(io::read_file(o.witness)).result.witness
                                          : parse_symbol_list(o.symbols);
    const bool common = is_common_subsequence(w, inst.strings);
    json part{{"common_subsequence", common}, {"length", w.size()}};
    if (common && inst.m == 1) {
      try {
        const SymbolicInstance sym = symbolic_from_strings(io::to_vertex_strings(inst));
        Sequence vertices = w;
        for (Symbol& c : vertices) c += 1;
        const CliqueCheck check = witness_to_clique_check(sym, vertices);
        part["is_clique"] = check.is_clique;
        if (check.missing) part["missing_edge"] = {check.missing->first, check.missing->second};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kStructure) throw;
      }
    }
    report["witness"] = part;
    ok = ok && common;
  } else if (o.family.empty()) {
    throw Error(ErrorKind::kParameter, "nothing to verify: give --instance or --family");
  }
  report["ok"] = ok;
  emit(o.out, report.dump(2) + "\n", out);
  return ok ? kOk : kParameterError;
}

int cmd_verify_sync(const SyncOpts& o, std::ostream& out, std::ostream& /*err*/) {
  const io::SyncFile s = io::parse_sync(io::read_file(o.sync_file));
  const SyncStringReport r = verify_sync_string(s.symbols, rational_arg(o.c, "c"),
                                                rational_arg(o.epsilon, "epsilon"), o.budget);
  emit(o.out, io::format_sync_report(r), out);
  return kOk;
}

constexpr std::string_view kCsvHeader =
    "seed,n,k,m,beta,gamma,ell_yes,ell_no,witness_len,best_found,verdict\n";

int cmd_gap_experiment(const GapOpts& o, std::ostream& out, std::ostream& /*err*/) {
  require_seed(o.seed, "gap-experiment");
  if (o.mode != "yes" && o.mode != "no") {
    throw Error(ErrorKind::kParameter, "--mode must be yes or no");
  }
  if (o.trials < 0) throw Error(ErrorKind::kParameter, "--trials must be >= 0");
  std::string csv(kCsvHeader);
  json trials = json::array();
  if (o.trials > 0) {
    const ReductionParams params = make_params(o.n, rational_arg(o.gamma, "gamma"),
                                               rational_arg(o.beta, "beta"), o.m);
    if (params.k < 2) {
      throw Error(ErrorKind::kParameter, "gap-experiment needs k = (beta/gamma) n >= 2");
    }
    std::optional<StringFamily> fixed_family;
    if (o.construction == "greedy") {
      fixed_family = greedy_family(o.n, params.alpha, o.sigma_prime, o.m);
    } else if (o.construction != "random") {
      throw Error(ErrorKind::kParameter, "--construction must be random or greedy here");
    }
    for (int t = 0; t < o.trials; ++t) {
      const std::uint64_t trial_seed = derive_seed(*o.seed, Stream::kTrial, static_cast<std::uint64_t>(t));
      std::string witness_len, best_found, verdict;
      json entry{{"index", t}, {"seed", std::to_string(trial_seed)}};
      auto family_for_trial = [&] {
        if (fixed_family) return *fixed_family;
        return random_family(o.n, params.alpha, o.sigma_prime, o.m, trial_seed, o.max_retries)
            .family;
      };
      if (o.mode == "yes") {
        const PlantedGraph pg = plant_clique(o.n, params.k, o.p, trial_seed);
        const SymbolicInstance sym = jiang_li(pg.graph);
        const BlockInstance inst = alphabet_reduce(sym, family_for_trial(), params);
        const Sequence w = expand_witness(inst.family, clique_to_witness(sym, pg.clique));
        const bool complete = static_cast<std::int64_t>(w.size()) >= params.ell_yes &&
                              is_common_subsequence(w, inst.all_strings());
        const ExtractionReport rep = extract_dense_subgraph(w, inst);
        witness_len = best_found = std::to_string(w.size());
        verdict = complete ? std::string(to_string(rep.verdict)) : "COMPLETENESS-FAILURE";
        entry["clique"] = pg.clique;
        entry["extraction"] = json::parse(io::format_extraction(rep));
      } else {
        const Graph g = erdos_renyi(o.n, o.p, trial_seed);
        const DksVerdict dks =
            dks_brute_force(g, params.k, params.gamma * params.gamma / Rational(4));
        entry["dks"] = dks.kind == DksKind::kYes  ? "YES"
                       : dks.kind == DksKind::kNo ? "NO"
                                                  : "UNDECIDED";
        if (dks.kind == DksKind::kUndecided) {
          verdict = "SKIPPED-GAP";
        } else if (dks.kind == DksKind::kYes) {
          verdict = "SKIPPED-YES";
        } else {
          const BlockInstance inst = alphabet_reduce(jiang_li(g), family_for_trial(), params);
          const MultiLcsResult h = heuristic_multi_lcs(
              inst.all_strings(), o.effort, derive_seed(trial_seed, Stream::kHeuristic));
          best_found = std::to_string(h.length);
          verdict = Rational(static_cast<std::int64_t>(h.length)) > params.ell_no
                        ? "EXCEEDS-ELL-NO"
                        : "BELOW-ELL-NO";
          entry["extraction"] = json::parse(io::format_extraction(extract_dense_subgraph(h.witness, inst)));
        }
      }
      entry["verdict"] = verdict;
      csv += std::to_string(trial_seed) + "," + std::to_string(o.n) + "," +
             std::to_string(params.k) + "," + std::to_string(o.m) + "," +
             format_rational(params.beta) + "," + format_rational(params.gamma) + "," +
             std::to_string(params.ell_yes) + "," + format_rational(params.ell_no) + "," +
             witness_len + "," + best_found + "," + verdict + "\n";
      trials.push_back(std::move(entry));
    }
  }
  emit(o.csv, csv, out);
  if (!o.report.empty()) {
    json report{{"mode", o.mode},
                {"seed", std::to_string(*o.seed)},
                {"trials", trials},
                {"tool", kToolVersion}};
    io::write_file(o.report, report.dump(2) + "\n");
  }
  return kOk;
}

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::kIo, "SHA-256 computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return hex.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduction compiler and verification workbench for approximate multi-LCS"};
  app.name("lcsgap");
  app.require_subcommand(1);

  GenGraphOpts gg;
  auto* gen_graph = app.add_subcommand("gen-graph", "Generate an Erdos-Renyi graph, optionally with a planted clique");
  gen_graph->add_option("--n", gg.n, "Vertex count")->required();
  gen_graph->add_option("--planted-k", gg.planted_k, "Planted clique size (0: none)");
  gen_graph->add_option("--p,--edge-prob", gg.p, "Edge probability");
  gen_graph->add_option("--seed", gg.seed, "RNG seed");
  gen_graph->add_option("--out", gg.out, "Output graph file (default stdout)");

  FamilyOpts gf;
  auto* gen_family = app.add_subcommand("gen-family", "Construct and certify a low-pairwise-LCS string family");
  gen_family->add_option("--n", gf.n, "Family size")->required();
  gen_family->add_option("--alpha", gf.alpha, "Pairwise LCS bound as a fraction of m");
  gen_family->add_option("--beta", gf.beta, "Derive alpha = beta^2/8");
  gen_family->add_option("--sigma-prime", gf.sigma_prime, "Alphabet size");
  gen_family->add_option("--m", gf.m, "String length")->required();
  gen_family->add_option("--construction", gf.construction, "random | greedy | sync-file");
  gen_family->add_option("--seed", gf.seed, "RNG seed");
  gen_family->add_option("--max-retries", gf.max_retries, "Resampling attempts after the first");
  gen_family->add_option("--candidate-budget", gf.candidate_budget, "Greedy candidates (0: 64n)");
  gen_family->add_option("--sync-file", gf.sync_file, "Synchronization string file");
  gen_family->add_option("--out", gf.out, "Output family file (default stdout)");

  ReduceOpts rd;
  auto* reduce = app.add_subcommand("reduce", "Graph to Jiang-Li instance to block instance");
  reduce->add_option("--graph", rd.graph, "Input graph file")->required();
  reduce->add_option("--family", rd.family, "Family file (otherwise constructed)");
  reduce->add_flag("--symbolic", rd.symbolic, "Emit only the Jiang-Li instance");
  reduce->add_option("--beta", rd.beta, "beta (alpha = beta^2/8)");
  reduce->add_option("--gamma", rd.gamma, "gamma, with k = (beta/gamma) n");
  reduce->add_option("--sigma-prime", rd.sigma_prime, "Alphabet size for a constructed family");
  reduce->add_option("--m", rd.m, "Block length for a constructed family");
  reduce->add_option("--construction", rd.construction, "random | greedy");
  reduce->add_option("--seed", rd.seed, "RNG seed");
  reduce->add_option("--max-retries", rd.max_retries, "Family resampling attempts");
  reduce->add_option("--out", rd.out, "Output instance file (default stdout)");
  reduce->add_option("--meta", rd.meta, "Metadata JSON (default <out>.meta.json)");

  SolveOpts sv;
  auto* solve = app.add_subcommand("solve", "Solve multi-LCS on an instance file");
  solve->add_option("--instance", sv.instance, "Instance file")->required();
  solve->add_option("--solver", sv.solver,
                    "product-dp | subset-enum | once-per-symbol | single-symbol-approx | heuristic");
  solve->add_option("--budget", sv.budget, "Product DP state budget");
  solve->add_option("--max-vertices", sv.max_vertices, "Subset enumeration vertex limit");
  solve->add_option("--effort", sv.effort, "Heuristic candidate evaluations");
  solve->add_option("--seed", sv.seed, "RNG seed (heuristic)");
  solve->add_option("--sigma", sv.sigma, "Alphabet size for the approximation (default: file)");
  solve->add_option("--out", sv.out, "Result JSON (default stdout)");

  VerifyOpts vf;
  auto* verify = app.add_subcommand("verify", "Verify a witness against an instance, or a family's certificate");
  verify->add_option("--instance", vf.instance, "Instance file");
  verify->add_option("--witness", vf.witness, "Solve result JSON holding the witness");
  verify->add_option("--symbols", vf.symbols, "Witness as space-separated symbols");
  verify->add_option("--family", vf.family, "Family file to re-certify");
  verify->add_option("--out", vf.out, "Report JSON (default stdout)");

  SyncOpts sy;
  auto* verify_sync = app.add_subcommand("verify-sync", "Check the long-distance synchronization property");
  verify_sync->add_option("--sync-file", sy.sync_file, "Sync string file")->required();
  verify_sync->add_option("--c", sy.c, "Long-distance parameter c")->required();
  verify_sync->add_option("--epsilon", sy.epsilon, "epsilon")->required();
  verify_sync->add_option("--budget", sy.budget, "DP cell budget");
  verify_sync->add_option("--out", sy.out, "Report JSON (default stdout)");

  GapOpts gx;
  auto* gap = app.add_subcommand("gap-experiment", "Run YES/NO gap trials and write a CSV report");
  gap->add_option("--mode", gx.mode, "yes | no");
  gap->add_option("--trials", gx.trials, "Number of trials")->required();
  gap->add_option("--n", gx.n, "Vertex count");
  gap->add_option("--beta", gx.beta, "beta");
  gap->add_option("--gamma", gx.gamma, "gamma");
  gap->add_option("--m", gx.m, "Block length");
  gap->add_option("--sigma-prime", gx.sigma_prime, "Alphabet size");
  gap->add_option("--p,--edge-prob", gx.p, "Background edge probability");
  gap->add_option("--construction", gx.construction, "random | greedy");
  gap->add_option("--max-retries", gx.max_retries, "Family resampling attempts");
  gap->add_option("--effort", gx.effort, "Heuristic budget for NO trials");
  gap->add_option("--seed", gx.seed, "RNG seed");
  gap->add_option("--csv", gx.csv, "CSV output (default stdout)");
  gap->add_option("--report", gx.report, "JSON report output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParameterError;
  }

  try {
    if (gen_graph->parsed()) return cmd_gen_graph(gg, out, err);
    if (gen_family->parsed()) return cmd_gen_family(gf, out, err);
    if (reduce->parsed()) return cmd_reduce(rd, out, err);
    if (solve->parsed()) return cmd_solve(sv, out, err);
    if (verify->parsed()) return cmd_verify(vf, out, err);
    if (verify_sync->parsed()) return cmd_verify_sync(sy, out, err);
    if (gap->parsed()) return cmd_gap_experiment(gx, out, err);
  } catch (const CertificationFailure& e) {
    const PairwiseReport& w = e.worst();
    json j{{"error", "certification"},
           {"message", e.what()},
           {"worst_pair", {w.worst_i + 1, w.worst_j + 1}},
           {"worst_lcs", w.worst_lcs},
           {"mean_lcs", w.mean_lcs}};
    err << j.dump(2) << "\n";
    return exit_code_for(e.kind());
  } catch (const Error& e) {
    err << io::format_error(e);
    return exit_code_for(e.kind());
  }
  return kParameterError;
}

}  // namespace lcsgap::cli
