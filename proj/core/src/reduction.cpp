#include "lcsgap/reduction.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "lcsgap/lcs.hpp"

namespace lcsgap {

std::vector<Sequence> SymbolicInstance::all_strings() const {
  std::vector<Sequence> out(x);
  out.insert(out.end(), x_prime.begin(), x_prime.end());
  return out;
}

std::vector<Sequence> BlockInstance::all_strings() const {
  std::vector<Sequence> out(y);
  out.insert(out.end(), y_prime.begin(), y_prime.end());
  return out;
}

SymbolicInstance jiang_li(const Graph& g) {
  if (g.n() < 1) throw Error(ErrorKind::kParameter, "jiang_li needs n >= 1");
  SymbolicInstance inst;
  inst.n = g.n();
  inst.source = g;
  for (Vertex i = 1; i <= g.n(); ++i) {
    Sequence others;
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (v != i) others.push_back(v);
    }
    Sequence xi = others;
    xi.push_back(i);
    for (Vertex v : g.upper_neighbors(i)) xi.push_back(v);

    Sequence xpi = g.lower_neighbors(i);
    xpi.push_back(i);
    xpi.insert(xpi.end(), others.begin(), others.end());

    inst.x.push_back(std::move(xi));
    inst.x_prime.push_back(std::move(xpi));
  }
  return inst;
}

SymbolicInstance symbolic_from_strings(std::span<const Sequence> strings) {
  if (strings.empty() || strings.size() % 2 != 0) {
    throw Error(ErrorKind::kStructure,
                "a Jiang-Li instance has 2n strings, got " +
                    std::to_string(strings.size()));
  }
  const int n = static_cast<int>(strings.size() / 2);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    const Sequence& xi = strings[i - 1];
    if (xi.size() < static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::kStructure,
                  "X_" + std::to_string(i) + " is shorter than n");
    }
    for (std::size_t p = static_cast<std::size_t>(n); p < xi.size(); ++p) {
      const Symbol v = xi[p];
      if (v <= i || v > n) {
        throw Error(ErrorKind::kStructure,
                    "X_" + std::to_string(i) +
                        " has a suffix symbol that is not a larger vertex");
      }
      edges.emplace_back(i, v);
    }
  }
  Graph g;
  try {
    g = Graph(n, edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::kStructure, std::string("X strings: ") + e.what());
  }
  SymbolicInstance inst = jiang_li(g);
  for (int t = 0; t < 2 * n; ++t) {
    const Sequence& expect = t < n ? inst.x[t] : inst.x_prime[t - n];
    if (strings[t] != expect) {
      throw Error(ErrorKind::kStructure,
                  "string " + std::to_string(t + 1) +
                      " does not match the Jiang-Li template of the graph "
                      "read from the X strings");
    }
  }
  return inst;
}

Sequence clique_to_witness(const SymbolicInstance& inst,
                           std::span<const Vertex> clique) {
  Sequence out(clique.begin(), clique.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorKind::kWitness, "clique lists a vertex twice");
  }
  for (Vertex v : out) {
    if (v < 1 || v > inst.n) {
      throw Error(ErrorKind::kWitness, "vertex " + std::to_string(v) + " out of range");
    }
  }
  if (auto missing = inst.source.missing_edge(out)) {
    throw Error(ErrorKind::kWitness,
                "not a clique: edge {" + std::to_string(missing->first) + "," +
                    std::to_string(missing->second) + "} is missing");
  }
  if (!is_common_subsequence(out, inst.all_strings())) {
    throw Error(ErrorKind::kWitness,
                "clique witness failed the common-subsequence check");
  }
  return out;
}

CliqueCheck witness_to_clique_check(const SymbolicInstance& inst,
                                    std::span<const Symbol> s) {
  if (!is_common_subsequence(s, inst.all_strings())) {
    throw Error(ErrorKind::kPrecondition,
                "sequence is not a common subsequence of the instance");
  }
  CliqueCheck out;
  VertexSet distinct(s.begin(), s.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  out.missing = inst.source.missing_edge(distinct);
  out.is_clique = !out.missing.has_value();
  return out;
}

ReductionParams make_params(int n, const Rational& gamma, const Rational& beta,
                            int m) {
  if (n < 1) throw Error(ErrorKind::kParameter, "n must be >= 1");
  if (m < 1) throw Error(ErrorKind::kParameter, "m must be >= 1");
  if (!(beta > Rational(0))) {
    throw Error(ErrorKind::kParameter, "beta must be positive");
  }
  if (!(beta < gamma)) {
    throw Error(ErrorKind::kParameter,
                "need beta < gamma (beta=" + format_rational(beta) +
                    ", gamma=" + format_rational(gamma) + ")");
  }
  if (gamma > Rational(1)) {
    throw Error(ErrorKind::kParameter, "gamma must be <= 1");
  }
  const Rational k_exact = beta / gamma * Rational(n);
  if (k_exact.denominator() != 1) {
    throw Error(ErrorKind::kParameter,
                "k = (beta/gamma) n = " + format_rational(k_exact) +
                    " is not an integer; choose n as a multiple of " +
                    std::to_string((beta / gamma).denominator()));
  }
  ReductionParams p;
  p.n = n;
  p.k = static_cast<int>(k_exact.numerator());
  p.beta = beta;
  p.gamma = gamma;
  p.alpha = beta * beta / Rational(8);
  p.m = m;
  p.ell_yes = static_cast<std::int64_t>(p.k) * m;
  p.ell_no = Rational(2) * beta * Rational(m) * Rational(n);
  if (p.has_gap() != (gamma < Rational(1, 2))) {
    throw Error(ErrorKind::kParameter, "internal: gap sanity check failed");
  }
  return p;
}

BlockInstance alphabet_reduce(const SymbolicInstance& inst,
                              const StringFamily& family,
                              const ReductionParams& params) {
  if (family.n != inst.n || static_cast<int>(family.strings.size()) != inst.n) {
    throw Error(ErrorKind::kParameter,
                "family has " + std::to_string(family.n) +
                    " strings but the instance has " + std::to_string(inst.n) +
                    " vertices");
  }
  if (params.n != inst.n) {
    throw Error(ErrorKind::kParameter, "params.n does not match the instance");
  }
  if (params.m != family.m) {
    throw Error(ErrorKind::kParameter, "params.m does not match the family");
  }
  if (!family.certified) {
    throw Error(ErrorKind::kCertification, "family is not certified");
  }
  if (family.alpha > params.alpha) {
    throw Error(ErrorKind::kCertification,
                "family certified at alpha=" + format_rational(family.alpha) +
                    " but the reduction needs alpha <= " +
                    format_rational(params.alpha));
  }
  BlockInstance out;
  out.family = family;
  out.params = params;
  out.source = inst.source;
  for (const auto* group : {&inst.x, &inst.x_prime}) {
    for (const Sequence& symbolic : *group) {
      VertexSet layout(symbolic.begin(), symbolic.end());
      Sequence block = expand_witness(family, layout);
      (group == &inst.x ? out.y : out.y_prime).push_back(std::move(block));
      out.block_layout.push_back(std::move(layout));
    }
  }
  return out;
}

Sequence expand_witness(const StringFamily& family,
                        std::span<const Vertex> vertices) {
  Sequence out;
  out.reserve(vertices.size() * static_cast<std::size_t>(family.m));
  for (Vertex v : vertices) {
    if (v < 1 || v > static_cast<Vertex>(family.strings.size())) {
      throw Error(ErrorKind::kParameter, "block id " + std::to_string(v) + " out of range");
    }
    const Sequence& s = family.strings[v - 1];
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::optional<VertexSet> decode_blocks(std::span<const Symbol> y,
                                       const StringFamily& family) {
  const auto m = static_cast<std::size_t>(family.m);
  if (m == 0 || y.size() % m != 0) return std::nullopt;
  std::map<Sequence, Vertex> lookup;
  for (std::size_t t = 0; t < family.strings.size(); ++t) {
    lookup.emplace(family.strings[t], static_cast<Vertex>(t + 1));
  }
  VertexSet out;
  for (std::size_t start = 0; start < y.size(); start += m) {
    Sequence window(y.begin() + static_cast<std::ptrdiff_t>(start),
                    y.begin() + static_cast<std::ptrdiff_t>(start + m));
    const auto it = lookup.find(window);
    if (it == lookup.end()) return std::nullopt;
    out.push_back(it->second);
  }
  return out;
}

}  // namespace lcsgap
