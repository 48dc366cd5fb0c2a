#include "lcsgap/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace lcsgap::io {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorKind::kParse, what);
}

/// Non-empty lines split into whitespace-separated tokens, with line numbers.
struct Line {
  std::size_t number = 0;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    Line line{number, {}};
    std::size_t p = 0;
    while (p < raw.size()) {
      while (p < raw.size() && (raw[p] == ' ' || raw[p] == '\t' || raw[p] == '\r')) ++p;
      const std::size_t start = p;
      while (p < raw.size() && raw[p] != ' ' && raw[p] != '\t' && raw[p] != '\r') ++p;
      if (p > start) line.tokens.push_back(raw.substr(start, p - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::int64_t to_int(std::string_view tok, std::size_t line) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_fail("line " + std::to_string(line) + ": expected an integer, got '" +
               std::string(tok) + "'");
  }
  return v;
}

void expect_tokens(const Line& line, std::size_t count, std::string_view what) {
  if (line.tokens.size() != count) {
    parse_fail("line " + std::to_string(line.number) + ": " + std::string(what) +
               " needs " + std::to_string(count) + " fields");
  }
}

Sequence parse_symbols(const Line& line, std::size_t from, int sigma) {
  Sequence out;
  out.reserve(line.tokens.size() - from);
  for (std::size_t t = from; t < line.tokens.size(); ++t) {
    const std::int64_t v = to_int(line.tokens[t], line.number);
    if (v < 0 || (sigma > 0 && v >= sigma)) {
      parse_fail("line " + std::to_string(line.number) + ": symbol " +
                 std::to_string(v) + " outside [0, " + std::to_string(sigma) + ")");
    }
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

json rational_json(const Rational& r) {
  return json{{"num", r.numerator()}, {"den", r.denominator()}};
}

Rational rational_from(const json& j) {
  const auto den = j.at("den").get<std::int64_t>();
  if (den == 0) parse_fail("zero denominator in JSON rational");
  return Rational(j.at("num").get<std::int64_t>(), den);
}

json params_json(const ReductionParams& p) {
  return json{{"n", p.n},
              {"k", p.k},
              {"m", p.m},
              {"alpha", rational_json(p.alpha)},
              {"beta", rational_json(p.beta)},
              {"gamma", rational_json(p.gamma)},
              {"ell_yes", p.ell_yes},
              {"ell_no", rational_json(p.ell_no)},
              {"has_gap", p.has_gap()}};
}

ReductionParams params_from(const json& j) {
  ReductionParams p;
  p.n = j.at("n").get<int>();
  p.k = j.at("k").get<int>();
  p.m = j.at("m").get<int>();
  p.alpha = rational_from(j.at("alpha"));
  p.beta = rational_from(j.at("beta"));
  p.gamma = rational_from(j.at("gamma"));
  p.ell_yes = j.at("ell_yes").get<std::int64_t>();
  p.ell_no = rational_from(j.at("ell_no"));
  return p;
}

template <typename Enum, typename Fn>
Enum enum_from(const json& j, std::initializer_list<Enum> values, Fn name) {
  const auto text = j.get<std::string>();
  for (Enum e : values) {
    if (name(e) == text) return e;
  }
  parse_fail("unknown enum value '" + text + "'");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template <typename Fn>
auto guarded(std::string_view what, Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    parse_fail(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed for '" + path + "'");
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIo, "cannot open '" + path + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path + "'");
}

std::string join_symbols(const Sequence& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---- graph ----

std::string format_graph(const Graph& g) {
  const auto edges = g.edges();
  std::string out = "p " + std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
  for (const auto& [u, v] : edges) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "p") parse_fail("graph file must start with 'p <n> <m>'");
  expect_tokens(lines[0], 3, "header");
  const std::int64_t n = to_int(lines[0].tokens[1], lines[0].number);
  const std::int64_t m = to_int(lines[0].tokens[2], lines[0].number);
  if (n < 0 || m < 0) parse_fail("negative count in graph header");
  if (static_cast<std::int64_t>(lines.size()) - 1 != m) {
    parse_fail("header announces " + std::to_string(m) + " edges, file has " +
               std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Line& line = lines[l];
    if (line.tokens[0] != "e") parse_fail("line " + std::to_string(line.number) + ": expected 'e <u> <v>'");
    expect_tokens(line, 3, "edge");
    const std::int64_t u = to_int(line.tokens[1], line.number);
    const std::int64_t v = to_int(line.tokens[2], line.number);
    if (u == v) parse_fail("line " + std::to_string(line.number) + ": self-loop on " + std::to_string(u));
    if (u < 1 || v < 1 || u > n || v > n) {
      parse_fail("line " + std::to_string(line.number) + ": endpoint outside [1, " + std::to_string(n) + "]");
    }
    edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
  }
  auto sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    parse_fail("duplicate edge {" + std::to_string(dup->first) + "," + std::to_string(dup->second) + "}");
  }
  return Graph(static_cast<int>(n), edges);
}

// ---- family ----

std::string format_family(const StringFamily& f) {
  std::string out = "family " + std::to_string(f.n) + " " + std::to_string(f.m) + " " +
                    std::to_string(f.sigma_prime) + " " + format_rational(f.alpha) + " " +
                    (f.certified ? "1" : "0") + "\n";
  for (const auto& s : f.strings) out += join_symbols(s) + "\n";
  return out;
}

StringFamily parse_family(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "family") {
    parse_fail("family file must start with 'family <n> <m> <sigma> <alpha> <certified>'");
  }
  expect_tokens(lines[0], 6, "header");
  StringFamily f;
  f.n = static_cast<int>(to_int(lines[0].tokens[1], 1));
  f.m = static_cast<int>(to_int(lines[0].tokens[2], 1));
  f.sigma_prime = static_cast<int>(to_int(lines[0].tokens[3], 1));
  f.alpha = parse_rational(lines[0].tokens[4]);
  const auto cert = lines[0].tokens[5];
  if (cert != "0" && cert != "1") parse_fail("certified flag must be 0 or 1");
  f.certified = cert == "1";
  if (f.n < 0 || f.m < 1 || f.sigma_prime < 1) parse_fail("invalid family header values");
  if (static_cast<int>(lines.size()) - 1 != f.n) {
    parse_fail("header announces " + std::to_string(f.n) + " strings, file has " +
               std::to_string(lines.size() - 1));
  }
  for (std::size_t l = 1; l < lines.size(); ++l) {
    Sequence s = parse_symbols(lines[l], 0, f.sigma_prime);
    if (static_cast<int>(s.size()) != f.m) {
      parse_fail("line " + std::to_string(lines[l].number) + ": expected " +
                 std::to_string(f.m) + " symbols");
    }
    f.strings.push_back(std::move(s));
  }
  return f;
}

// ---- instance ----

std::string format_instance(const InstanceFile& inst) {
  std::string out = "mlcs " + std::to_string(inst.strings.size()) + " " +
                    std::to_string(inst.sigma) + " " + std::to_string(inst.m) + "\n";
  for (const auto& s : inst.strings) out += join_symbols(s) + "\n";
  return out;
}

InstanceFile parse_instance(std::string_view text) {
  // Empty strings are legal, so this parser keeps blank lines after the header.
  std::vector<std::string_view> raw;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    raw.push_back(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
  }
  if (raw.empty()) parse_fail("empty instance file");
  const auto header = tokenize(raw[0]);
  if (header.empty() || header[0].tokens[0] != "mlcs") {
    parse_fail("instance file must start with 'mlcs <num_strings> <sigma> <m>'");
  }
  expect_tokens(header[0], 4, "header");
  const std::int64_t count = to_int(header[0].tokens[1], 1);
  InstanceFile inst;
  inst.sigma = static_cast<int>(to_int(header[0].tokens[2], 1));
  inst.m = static_cast<int>(to_int(header[0].tokens[3], 1));
  if (count < 0 || inst.sigma < 1 || inst.m < 1) parse_fail("invalid instance header values");
  if (static_cast<std::int64_t>(raw.size()) - 1 < count) {
    parse_fail("header announces " + std::to_string(count) + " strings, file has " +
               std::to_string(raw.size() - 1));
  }
  for (std::int64_t t = 1; t <= count; ++t) {
    auto lines = tokenize(raw[static_cast<std::size_t>(t)]);
    Line line = lines.empty() ? Line{} : std::move(lines[0]);
    line.number = static_cast<std::size_t>(t) + 1;
    inst.strings.push_back(parse_symbols(line, 0, inst.sigma));
  }
  for (std::size_t l = static_cast<std::size_t>(count) + 1; l < raw.size(); ++l) {
    if (!tokenize(raw[l]).empty()) parse_fail("trailing content after the announced strings");
  }
  return inst;
}

InstanceFile to_instance_file(const SymbolicInstance& inst) {
  InstanceFile out;
  out.sigma = inst.n;
  out.m = 1;
  for (Sequence s : inst.all_strings()) {
    for (Symbol& c : s) c -= 1;
    out.strings.push_back(std::move(s));
  }
  return out;
}

InstanceFile to_instance_file(const BlockInstance& inst) {
  InstanceFile out;
  out.sigma = inst.family.sigma_prime;
  out.m = inst.family.m;
  out.strings = inst.all_strings();
  return out;
}

std::vector<Sequence> to_vertex_strings(const InstanceFile& inst) {
  std::vector<Sequence> out = inst.strings;
  for (auto& s : out) {
    for (Symbol& c : s) c += 1;
  }
  return out;
}

// ---- sync string ----

std::string format_sync(const SyncFile& s) {
  return "sync " + std::to_string(s.symbols.size()) + " " + std::to_string(s.sigma) + "\n" +
         join_symbols(s.symbols) + "\n";
}

SyncFile parse_sync(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "sync") parse_fail("sync file must start with 'sync <length> <sigma>'");
  expect_tokens(lines[0], 3, "header");
  const std::int64_t len = to_int(lines[0].tokens[1], 1);
  SyncFile out;
  out.sigma = static_cast<int>(to_int(lines[0].tokens[2], 1));
  if (len < 0 || out.sigma < 1) parse_fail("invalid sync header values");
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const Sequence part = parse_symbols(lines[l], 0, out.sigma);
    out.symbols.insert(out.symbols.end(), part.begin(), part.end());
  }
  if (static_cast<std::int64_t>(out.symbols.size()) != len) {
    parse_fail("header announces " + std::to_string(len) + " symbols, file has " +
               std::to_string(out.symbols.size()));
  }
  return out;
}

// ---- JSON records ----

std::string format_params(const ReductionParams& p) { return dump(params_json(p)); }

ReductionParams parse_params(std::string_view text) {
  return guarded("params JSON", [&] { return params_from(json::parse(text)); });
}

std::string format_metadata(const InstanceMetadata& meta) {
  json j;
  j["kind"] = meta.kind;
  j["params"] = meta.params ? params_json(*meta.params) : json(nullptr);
  j["block_layout"] = meta.block_layout;
  j["provenance"] = meta.provenance;
  return dump(j);
}

InstanceMetadata parse_metadata(std::string_view text) {
  return guarded("metadata JSON", [&] {
    const json j = json::parse(text);
    InstanceMetadata meta;
    meta.kind = j.at("kind").get<std::string>();
    if (!j.at("params").is_null()) meta.params = params_from(j.at("params"));
    meta.block_layout = j.at("block_layout").get<std::vector<VertexSet>>();
    meta.provenance = j.at("provenance").get<std::map<std::string, std::string>>();
    return meta;
  });
}

std::string format_solve(const SolveRecord& r) {
  json j{{"length", r.result.length},
         {"witness", r.result.witness},
         {"exact", r.result.exact},
         {"solver", std::string(to_string(r.result.solver))},
         {"elapsed_ms", r.elapsed_ms}};
  return dump(j);
}

SolveRecord parse_solve(std::string_view text) {
  return guarded("solve JSON", [&] {
    const json j = json::parse(text);
    SolveRecord r;
    r.result.length = j.at("length").get<std::size_t>();
    r.result.witness = j.at("witness").get<Sequence>();
    r.result.exact = j.at("exact").get<bool>();
    r.result.solver = parse_solver(j.at("solver").get<std::string>());
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
  });
}

std::string format_extraction(const ExtractionReport& r) {
  json probes = json::array();
  for (const auto& p : r.probes) {
    probes.push_back({{"vertex", p.vertex},
                      {"forward", std::string(to_string(p.forward))},
                      {"forward_half", std::string(to_string(p.forward_half))},
                      {"backward", std::string(to_string(p.backward))},
                      {"backward_half", std::string(to_string(p.backward_half))},
                      {"dense_bounds_hold", p.dense_bounds_hold}});
  }
  auto opt = [](const std::optional<Rational>& v) {
    return v ? rational_json(*v) : json(nullptr);
  };
  json j{{"l_length", r.l_length},
         {"l1_length", r.l1_length},
         {"n", r.n},
         {"k", r.k},
         {"epsilon", rational_json(r.epsilon)},
         {"heavy_threshold", rational_json(r.heavy_threshold)},
         {"sparse_threshold", rational_json(r.sparse_threshold)},
         {"ell_no", rational_json(r.ell_no)},
         {"density_threshold", rational_json(r.density_threshold)},
         {"v_h", r.v_h},
         {"v_h_pruned", r.v_h_pruned},
         {"t_removed", r.t_removed},
         {"density_vh", opt(r.density_vh)},
         {"density_pruned", opt(r.density_pruned)},
         {"padded_subset", r.padded_subset},
         {"padded_density", rational_json(r.padded_density)},
         {"subset_mode", std::string(to_string(r.subset_mode))},
         {"verdict", std::string(to_string(r.verdict))},
         {"probes", probes}};
  return dump(j);
}

ExtractionReport parse_extraction(std::string_view text) {
  return guarded("extraction JSON", [&] {
    const json j = json::parse(text);
    auto opt = [&](const char* key) -> std::optional<Rational> {
      if (j.at(key).is_null()) return std::nullopt;
      return rational_from(j.at(key));
    };
    auto case_from = [](const json& v) {
      return enum_from(v, {AlignmentCase::kSparsePrefix, AlignmentCase::kSparseShifted,
                           AlignmentCase::kDense},
                       [](AlignmentCase c) { return to_string(c); });
    };
    auto half_from = [](const json& v) {
      return enum_from(v, {HalfSide::kFirst, HalfSide::kLast, HalfSide::kBoth},
                       [](HalfSide s) { return to_string(s); });
    };
    ExtractionReport r;
    r.l_length = j.at("l_length").get<std::size_t>();
    r.l1_length = j.at("l1_length").get<std::size_t>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.epsilon = rational_from(j.at("epsilon"));
    r.heavy_threshold = rational_from(j.at("heavy_threshold"));
    r.sparse_threshold = rational_from(j.at("sparse_threshold"));
    r.ell_no = rational_from(j.at("ell_no"));
    r.density_threshold = rational_from(j.at("density_threshold"));
    r.v_h = j.at("v_h").get<VertexSet>();
    r.v_h_pruned = j.at("v_h_pruned").get<VertexSet>();
    r.t_removed = j.at("t_removed").get<VertexSet>();
    r.density_vh = opt("density_vh");
    r.density_pruned = opt("density_pruned");
    r.padded_subset = j.at("padded_subset").get<VertexSet>();
    r.padded_density = rational_from(j.at("padded_density"));
    r.subset_mode = enum_from(j.at("subset_mode"), {SubsetMode::kPadded, SubsetMode::kPeeled},
                              [](SubsetMode m) { return to_string(m); });
    r.verdict = enum_from(j.at("verdict"), {Verdict::kConsistent, Verdict::kSoundnessWitness},
                          [](Verdict v) { return to_string(v); });
    for (const auto& p : j.at("probes")) {
      AlignmentProbe probe;
      probe.vertex = p.at("vertex").get<Vertex>();
      probe.forward = case_from(p.at("forward"));
      probe.forward_half = half_from(p.at("forward_half"));
      probe.backward = case_from(p.at("backward"));
      probe.backward_half = half_from(p.at("backward_half"));
      probe.dense_bounds_hold = p.at("dense_bounds_hold").get<bool>();
      r.probes.push_back(probe);
    }
    return r;
  });
}

std::string format_sync_report(const SyncStringReport& r) {
  json j{{"is_valid", r.is_valid},
         {"c", rational_json(r.c)},
         {"epsilon", rational_json(r.epsilon)},
         {"long_span_threshold", r.long_span_threshold},
         {"cells", r.cells}};
  if (r.violating_quadruple) {
    const auto& q = *r.violating_quadruple;
    j["violating_quadruple"] = {q.i, q.j, q.i_prime, q.j_prime};
    j["violating_lcs"] = r.violating_lcs;
    j["violating_span"] = q.span();
  } else {
    j["violating_quadruple"] = nullptr;
  }
  return dump(j);
}

std::string format_error(const Error& e) {
  return dump(json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}});
}

}  // namespace lcsgap::io
