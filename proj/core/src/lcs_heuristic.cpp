#include <algorithm>
#include <limits>

#include "lcsgap/lcs.hpp"
#include "lcsgap/rng.hpp"

namespace lcsgap {
namespace {

// Distinct candidate symbols examined per greedy step.
constexpr std::size_t kCandidateWindow = 48;

class HeuristicSearch {
 public:
  HeuristicSearch(std::span<const Sequence> strings, std::uint64_t effort)
      : strings_(strings), budget_(effort) {
    // Only symbols present in every string can appear in a witness.
    alphabet_ = Sequence(strings[0].begin(), strings[0].end());
    std::sort(alphabet_.begin(), alphabet_.end());
    alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()),
                    alphabet_.end());
    occ_.resize(strings.size());
    std::vector<std::uint8_t> everywhere(alphabet_.size(), 1);
    for (std::size_t i = 0; i < strings.size(); ++i) {
      occ_[i].resize(alphabet_.size());
      for (std::size_t p = 0; p < strings[i].size(); ++p) {
        const int id = id_of(strings[i][p]);
        if (id >= 0) occ_[i][id].push_back(static_cast<std::int32_t>(p));
      }
      for (std::size_t c = 0; c < alphabet_.size(); ++c) {
        if (occ_[i][c].empty()) everywhere[c] = 0;
      }
    }
    usable_ = everywhere;
    stamp_.assign(alphabet_.size(), 0);
  }

  bool exhausted() const { return spent_ >= budget_; }
  std::uint64_t spent() const { return spent_; }

  /// One greedy pass. noise = probability of not taking the best candidate.
  Sequence greedy_pass(Rng& rng, double noise) {
    std::vector<std::int32_t> pos(strings_.size(), 0);
    Sequence out;
    struct Scored {
      double score;
      std::size_t id;
    };
    std::vector<Scored> scored;
    std::vector<std::int32_t> next(strings_.size());
    while (!exhausted()) {
      // Reference string: the one with the fewest remaining symbols.
      std::size_t ref = 0;
      std::int64_t shortest = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < strings_.size(); ++i) {
        const std::int64_t rem =
            static_cast<std::int64_t>(strings_[i].size()) - pos[i];
        if (rem < shortest) {
          shortest = rem;
          ref = i;
        }
      }
      if (shortest <= 0) break;

      ++round_;
      scored.clear();
      const Sequence& r = strings_[ref];
      for (std::size_t p = static_cast<std::size_t>(pos[ref]);
           p < r.size() && scored.size() < kCandidateWindow && !exhausted();
           ++p) {
        const int id = id_of(r[p]);
        if (id < 0 || !usable_[id] || stamp_[id] == round_) continue;
        stamp_[id] = round_;
        ++spent_;
        double worst = 0.0;
        bool ok = true;
        for (std::size_t i = 0; i < strings_.size(); ++i) {
          const auto& list = occ_[i][id];
          const auto it = std::lower_bound(list.begin(), list.end(), pos[i]);
          if (it == list.end()) {
            ok = false;
            break;
          }
          next[i] = *it;
          const double rem =
              static_cast<double>(strings_[i].size()) - pos[i];
          worst = std::max(worst, (*it - pos[i] + 1) / rem);
        }
        if (ok) scored.push_back({worst, static_cast<std::size_t>(id)});
      }
      if (scored.empty()) break;
      std::sort(scored.begin(), scored.end(), [&](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score < b.score;
        return alphabet_[a.id] < alphabet_[b.id];
      });
      std::size_t pick = 0;
      if (scored.size() > 1 && rng.bernoulli(noise)) {
        pick = 1 + rng.below(std::min<std::size_t>(scored.size() - 1, 3));
      }
      const std::size_t id = scored[pick].id;
      for (std::size_t i = 0; i < strings_.size(); ++i) {
        const auto& list = occ_[i][id];
        pos[i] = *std::lower_bound(list.begin(), list.end(), pos[i]) + 1;
      }
      out.push_back(alphabet_[id]);
    }
    return out;
  }

  /// Inserts symbols into gaps of `w` while the budget lasts. A symbol fits
  /// gap g when every string has an occurrence strictly between the
  /// leftmost embedding of w[..g) and the rightmost embedding of w[g..).
  void extend_by_insertion(Sequence& w) {
    bool improved = true;
    while (improved && !exhausted()) {
      improved = false;
      const std::size_t len = w.size();
      std::vector<std::vector<std::int32_t>> left(strings_.size()),
          right(strings_.size());
      for (std::size_t i = 0; i < strings_.size(); ++i) {
        const Sequence& s = strings_[i];
        left[i].resize(len);
        right[i].resize(len);
        std::size_t t = 0;
        for (std::size_t q = 0; q < len; ++q) {
          while (s[t] != w[q]) ++t;
          left[i][q] = static_cast<std::int32_t>(t++);
        }
        std::size_t u = s.size();
        for (std::size_t q = len; q-- > 0;) {
          --u;
          while (s[u] != w[q]) --u;
          right[i][q] = static_cast<std::int32_t>(u);
        }
      }
      for (std::size_t g = 0; g <= len && !improved && !exhausted(); ++g) {
        ++round_;
        const std::int32_t lo0 = g == 0 ? -1 : left[0][g - 1];
        const std::int32_t hi0 = g == len
                                     ? static_cast<std::int32_t>(strings_[0].size())
                                     : right[0][g];
        for (std::int32_t p = lo0 + 1; p < hi0 && !exhausted(); ++p) {
          const int id = id_of(strings_[0][p]);
          if (id < 0 || !usable_[id] || stamp_[id] == round_) continue;
          stamp_[id] = round_;
          ++spent_;
          bool fits = true;
          for (std::size_t i = 1; i < strings_.size() && fits; ++i) {
            const std::int32_t lo = g == 0 ? -1 : left[i][g - 1];
            const std::int32_t hi =
                g == len ? static_cast<std::int32_t>(strings_[i].size())
                         : right[i][g];
            const auto& list = occ_[i][id];
            const auto it = std::upper_bound(list.begin(), list.end(), lo);
            fits = it != list.end() && *it < hi;
          }
          if (fits) {
            w.insert(w.begin() + static_cast<std::ptrdiff_t>(g),
                     alphabet_[id]);
            improved = true;
            break;
          }
        }
      }
    }
  }

 private:
  int id_of(Symbol c) const {
    const auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), c);
    if (it == alphabet_.end() || *it != c) return -1;
    return static_cast<int>(it - alphabet_.begin());
  }

  std::span<const Sequence> strings_;
  std::uint64_t budget_;
  std::uint64_t spent_ = 0;
  Sequence alphabet_;
  std::vector<std::uint8_t> usable_;
  std::vector<std::vector<std::vector<std::int32_t>>> occ_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t round_ = 0;
};

}  // namespace

MultiLcsResult heuristic_multi_lcs(std::span<const Sequence> strings,
                                   std::uint64_t effort, std::uint64_t seed) {
  MultiLcsResult best = single_symbol_approx(strings, 1);
  best.solver = Solver::kHeuristic;
  best.exact = false;
  if (strings.empty() || effort == 0) return best;

  // Three quarters of the effort go to restarts, the rest to insertion.
  const std::uint64_t polish_effort = effort / 4;
  HeuristicSearch search(strings, effort - polish_effort);
  Sequence champion = best.witness;
  for (std::uint64_t restart = 0; !search.exhausted(); ++restart) {
    Rng rng(derive_seed(seed, Stream::kHeuristic, restart));
    const double noise = restart == 0 ? 0.0 : 0.25;
    const std::uint64_t before = search.spent();
    Sequence w = search.greedy_pass(rng, noise);
    const bool stalled = search.spent() == before;
    if (w.size() > champion.size() ||
        (w.size() == champion.size() && w < champion)) {
      champion = std::move(w);
    }
    if (stalled) break;
  }
  HeuristicSearch polish(strings, polish_effort);
  polish.extend_by_insertion(champion);

  if (!is_common_subsequence(champion, strings)) {
    throw Error(ErrorKind::kWitness, "heuristic produced an invalid witness");
  }
  best.witness = std::move(champion);
  best.length = best.witness.size();
  return best;
}

}  // namespace lcsgap
