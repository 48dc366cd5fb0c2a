#include <algorithm>
#include <limits>
#include <map>
#include <string>
#include <unordered_map>

#include "lcsgap/lcs.hpp"

namespace lcsgap {

std::string_view to_string(Solver solver) {
  switch (solver) {
    case Solver::kProductDp: return "PRODUCT_DP";
    case Solver::kSubsetEnum: return "SUBSET_ENUM";
    case Solver::kOncePerSymbol: return "ONCE_PER_SYMBOL";
    case Solver::kSingleSymbolApprox: return "SINGLE_SYMBOL_APPROX";
    case Solver::kHeuristic: return "HEURISTIC";
  }
  return "HEURISTIC";
}

Solver parse_solver(std::string_view text) {
  std::string norm(text);
  for (char& c : norm) {
    if (c == '-') c = '_';
    if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
  }
  if (norm == "PRODUCT_DP") return Solver::kProductDp;
  if (norm == "SUBSET_ENUM") return Solver::kSubsetEnum;
  if (norm == "ONCE_PER_SYMBOL") return Solver::kOncePerSymbol;
  if (norm == "SINGLE_SYMBOL_APPROX" || norm == "SINGLE_SYMBOL") {
    return Solver::kSingleSymbolApprox;
  }
  if (norm == "HEURISTIC") return Solver::kHeuristic;
  throw Error(ErrorKind::kParse, "unknown solver '" + std::string(text) + "'");
}

namespace {

/// Symbols present in every string, ascending.
Sequence shared_alphabet(std::span<const Sequence> strings) {
  if (strings.empty()) return {};
  Sequence common(strings[0].begin(), strings[0].end());
  std::sort(common.begin(), common.end());
  common.erase(std::unique(common.begin(), common.end()), common.end());
  for (std::size_t i = 1; i < strings.size() && !common.empty(); ++i) {
    Sequence here(strings[i].begin(), strings[i].end());
    std::sort(here.begin(), here.end());
    Sequence keep;
    std::set_intersection(common.begin(), common.end(), here.begin(),
                          here.end(), std::back_inserter(keep));
    common = std::move(keep);
  }
  return common;
}

class ProductDp {
 public:
  explicit ProductDp(std::span<const Sequence> strings)
      : strings_(strings), alphabet_(shared_alphabet(strings)) {
    const std::size_t k = strings.size();
    stride_.assign(k, 1);
    for (std::size_t i = 1; i < k; ++i) {
      stride_[i] = stride_[i - 1] * (strings[i - 1].size() + 1);
    }
    occ_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      occ_[i].resize(alphabet_.size());
      for (std::size_t p = 0; p < strings[i].size(); ++p) {
        const auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(),
                                         strings[i][p]);
        if (it != alphabet_.end() && *it == strings[i][p]) {
          occ_[i][static_cast<std::size_t>(it - alphabet_.begin())].push_back(
              static_cast<std::uint32_t>(p));
        }
      }
    }
  }

  MultiLcsResult solve() {
    std::vector<std::uint32_t> pos(strings_.size(), 0);
    MultiLcsResult out;
    out.exact = true;
    out.solver = Solver::kProductDp;
    out.length = value(pos);
    std::vector<std::uint32_t> next(pos.size());
    for (std::size_t remaining = out.length; remaining > 0; --remaining) {
      for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        if (!advance(pos, c, next)) continue;
        if (value(next) + 1 == remaining) {
          out.witness.push_back(alphabet_[c]);
          pos = next;
          break;
        }
      }
    }
    return out;
  }

 private:
  std::uint64_t key(const std::vector<std::uint32_t>& pos) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) k += pos[i] * stride_[i];
    return k;
  }

  /// Positions just past the first occurrence of symbol c at or after pos.
  bool advance(const std::vector<std::uint32_t>& pos, std::size_t c,
               std::vector<std::uint32_t>& next) const {
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const auto& list = occ_[i][c];
      const auto it = std::lower_bound(list.begin(), list.end(), pos[i]);
      if (it == list.end()) return false;
      next[i] = *it + 1;
    }
    return true;
  }

  std::uint32_t value(const std::vector<std::uint32_t>& pos) {
    const std::uint64_t k = key(pos);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    std::uint32_t best = 0;
    std::vector<std::uint32_t> next(pos.size());
    for (std::size_t c = 0; c < alphabet_.size(); ++c) {
      if (!advance(pos, c, next)) continue;
      best = std::max(best, value(next) + 1);
    }
    memo_.emplace(k, best);
    return best;
  }

  std::span<const Sequence> strings_;
  Sequence alphabet_;
  std::vector<std::uint64_t> stride_;
  std::vector<std::vector<std::vector<std::uint32_t>>> occ_;
  std::unordered_map<std::uint64_t, std::uint32_t> memo_;
};

}  // namespace

MultiLcsResult multi_lcs_product_dp(std::span<const Sequence> strings,
                                    std::uint64_t budget) {
  std::uint64_t states = 1;
  for (const auto& s : strings) {
    const std::uint64_t factor = s.size() + 1;
    if (states > budget / factor) {
      throw Error(ErrorKind::kBudget,
                  "product DP state space exceeds the budget of " +
                      std::to_string(budget));
    }
    states *= factor;
  }
  if (strings.empty()) {
    MultiLcsResult out;
    out.exact = true;
    out.solver = Solver::kProductDp;
    return out;
  }
  return ProductDp(strings).solve();
}

MultiLcsResult multi_lcs_once_per_symbol(std::span<const Sequence> strings) {
  MultiLcsResult out;
  out.exact = true;
  out.solver = Solver::kOncePerSymbol;
  if (strings.empty()) return out;

  const Sequence& first = strings[0];
  std::map<Symbol, std::size_t> index;
  for (std::size_t p = 0; p < first.size(); ++p) {
    if (!index.emplace(first[p], p).second) {
      throw Error(ErrorKind::kStructure,
                  "symbol " + std::to_string(first[p]) +
                      " repeats in string 0; once-per-symbol solver needs "
                      "every symbol exactly once in every string");
    }
  }
  const std::size_t n = first.size();
  const std::size_t k = strings.size();
  // rank[i][t] = position in string i of the symbol at position t of string 0
  std::vector<std::vector<std::size_t>> rank(k, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < k; ++i) {
    if (strings[i].size() != n) {
      throw Error(ErrorKind::kStructure,
                  "string " + std::to_string(i) +
                      " is not a permutation of string 0 (length differs)");
    }
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
      const auto it = index.find(strings[i][p]);
      if (it == index.end() || seen[it->second]) {
        throw Error(ErrorKind::kStructure,
                    "string " + std::to_string(i) +
                        " is not a permutation of string 0");
      }
      seen[it->second] = 1;
      rank[i][it->second] = p;
    }
  }

  auto precedes = [&](std::size_t t, std::size_t u) {
    for (std::size_t i = 0; i < k; ++i) {
      if (rank[i][t] >= rank[i][u]) return false;
    }
    return true;
  };

  // chain[t] = longest chain starting at the symbol at position t.
  std::vector<std::size_t> chain(n, 1);
  for (std::size_t t = n; t-- > 0;) {
    for (std::size_t u = t + 1; u < n; ++u) {
      if (precedes(t, u)) chain[t] = std::max(chain[t], chain[u] + 1);
    }
  }
  out.length = n == 0 ? 0 : *std::max_element(chain.begin(), chain.end());

  // Smallest symbol at every step gives the lexicographically smallest chain.
  std::size_t need = out.length;
  std::size_t prev = n;  // sentinel: no predecessor yet
  for (; need > 0; --need) {
    std::size_t pick = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (chain[u] != need) continue;
      if (prev != n && !precedes(prev, u)) continue;
      if (pick == n || first[u] < first[pick]) pick = u;
    }
    out.witness.push_back(first[pick]);
    prev = pick;
  }
  return out;
}

MultiLcsResult single_symbol_approx(std::span<const Sequence> strings,
                                    int sigma) {
  if (sigma < 1) throw Error(ErrorKind::kParameter, "alphabet size must be >= 1");
  MultiLcsResult out;
  out.exact = false;
  out.solver = Solver::kSingleSymbolApprox;
  if (strings.empty()) return out;

  std::map<Symbol, std::size_t> best;  // symbol -> min count so far
  for (Symbol c : strings[0]) ++best[c];
  for (std::size_t i = 1; i < strings.size(); ++i) {
    std::map<Symbol, std::size_t> here;
    for (Symbol c : strings[i]) ++here[c];
    for (auto& [c, count] : best) {
      const auto it = here.find(c);
      count = std::min(count, it == here.end() ? std::size_t{0} : it->second);
    }
  }
  Symbol winner = 0;
  for (const auto& [c, count] : best) {
    if (count > out.length) {
      out.length = count;
      winner = c;
    }
  }
  out.witness.assign(out.length, winner);
  return out;
}

}  // namespace lcsgap
