#include <algorithm>
#include <bit>
#include <string>

#include "lcsgap/lcs.hpp"

namespace lcsgap {

std::size_t Alignment::matched() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(mapping.begin(), mapping.end(),
                    [](std::int64_t t) { return t != kStar; }));
}

bool Alignment::is_valid(std::span<const Symbol> source,
                         std::span<const Symbol> target) const {
  if (mapping.size() != source.size()) return false;
  std::int64_t last = -1;
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    const std::int64_t t = mapping[i];
    if (t == kStar) continue;
    if (t < 0 || t >= static_cast<std::int64_t>(target.size())) return false;
    if (t <= last) return false;
    if (source[i] != target[static_cast<std::size_t>(t)]) return false;
    last = t;
  }
  return true;
}

Sequence Alignment::aligned_symbols(std::span<const Symbol> source) const {
  Sequence out;
  for (std::size_t i = 0; i < mapping.size() && i < source.size(); ++i) {
    if (mapping[i] != kStar) out.push_back(source[i]);
  }
  return out;
}

PairLcs lcs_pair(std::span<const Symbol> a, std::span<const Symbol> b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  const std::size_t width = m + 1;
  // table[i][j] = LCS(a[i..], b[j..])
  std::vector<std::uint32_t> table((n + 1) * width, 0);
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      std::uint32_t& cell = table[i * width + j];
      if (a[i] == b[j]) {
        cell = table[(i + 1) * width + j + 1] + 1;
      } else {
        cell = std::max(table[(i + 1) * width + j], table[i * width + j + 1]);
      }
    }
  }
  PairLcs out;
  out.length = table[0];
  out.alignment.mapping.assign(n, Alignment::kStar);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n && j < m) {
    if (a[i] == b[j] &&
        table[i * width + j] == table[(i + 1) * width + j + 1] + 1) {
      out.alignment.mapping[i] = static_cast<std::int64_t>(j);
      ++i;
      ++j;
    } else if (table[(i + 1) * width + j] >= table[i * width + j + 1]) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

std::size_t lcs_length_dp(std::span<const Symbol> a,
                          std::span<const Symbol> b) {
  if (a.size() < b.size()) std::swap(a, b);
  // b is the shorter string; one row of |b| + 1 cells.
  std::vector<std::uint32_t> row(b.size() + 1, 0);
  for (Symbol x : a) {
    std::uint32_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::uint32_t up = row[j];
      row[j] = (x == b[j - 1]) ? diag + 1 : std::max(up, row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

std::size_t lcs_length(std::span<const Symbol> a, std::span<const Symbol> b) {
  if (a.empty() || b.empty()) return 0;
  const std::size_t words = (a.size() + 63) / 64;

  // Match masks for the distinct symbols of a.
  Sequence alphabet(a.begin(), a.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  std::vector<std::uint64_t> masks(alphabet.size() * words, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto id = static_cast<std::size_t>(
        std::lower_bound(alphabet.begin(), alphabet.end(), a[i]) -
        alphabet.begin());
    masks[id * words + i / 64] |= std::uint64_t{1} << (i % 64);
  }

  // V starts all ones; each zero bit in the low |a| bits is one LCS unit.
  std::vector<std::uint64_t> v(words, ~std::uint64_t{0});
  for (Symbol c : b) {
    const auto it = std::lower_bound(alphabet.begin(), alphabet.end(), c);
    if (it == alphabet.end() || *it != c) continue;
    const std::uint64_t* m =
        masks.data() + static_cast<std::size_t>(it - alphabet.begin()) * words;
    std::uint64_t carry = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t u = v[w] & m[w];
      const std::uint64_t t = v[w] + carry;
      const std::uint64_t c1 = t < carry ? 1 : 0;
      const std::uint64_t sum = t + u;
      const std::uint64_t c2 = sum < u ? 1 : 0;
      carry = c1 | c2;
      v[w] = sum | (v[w] & ~m[w]);
    }
  }
  std::size_t zeros = 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t word = ~v[w];
    const std::size_t bits = std::min<std::size_t>(64, a.size() - w * 64);
    if (bits < 64) word &= (std::uint64_t{1} << bits) - 1;
    zeros += static_cast<std::size_t>(std::popcount(word));
  }
  return zeros;
}

bool is_subsequence(std::span<const Symbol> sub,
                    std::span<const Symbol> target) {
  std::size_t k = 0;
  for (std::size_t t = 0; t < target.size() && k < sub.size(); ++t) {
    if (target[t] == sub[k]) ++k;
  }
  return k == sub.size();
}

bool is_common_subsequence(std::span<const Symbol> s,
                           std::span<const Sequence> strings) {
  return std::all_of(strings.begin(), strings.end(), [&](const Sequence& x) {
    return is_subsequence(s, x);
  });
}

Alignment embed(std::span<const Symbol> sub, std::span<const Symbol> target) {
  Alignment out;
  out.mapping.reserve(sub.size());
  std::size_t t = 0;
  for (std::size_t k = 0; k < sub.size(); ++k) {
    while (t < target.size() && target[t] != sub[k]) ++t;
    if (t == target.size()) {
      throw Error(ErrorKind::kPrecondition,
                  "embed: symbol " + std::to_string(k) +
                      " of the source has no match; not a subsequence");
    }
    out.mapping.push_back(static_cast<std::int64_t>(t));
    ++t;
  }
  return out;
}

}  // namespace lcsgap
