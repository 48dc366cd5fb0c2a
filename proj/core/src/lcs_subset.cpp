#include <string>

#include "lcsgap/lcs.hpp"
#include "lcsgap/reduction.hpp"

namespace lcsgap {
namespace {

class IncreasingSearch {
 public:
  explicit IncreasingSearch(const SymbolicInstance& inst)
      : n_(inst.n), strings_(inst.all_strings()) {
    // occ_[i][v] = ascending positions of vertex v in string i (at most two).
    occ_.resize(strings_.size());
    for (std::size_t i = 0; i < strings_.size(); ++i) {
      occ_[i].resize(static_cast<std::size_t>(n_) + 1);
      for (std::size_t p = 0; p < strings_[i].size(); ++p) {
        occ_[i][strings_[i][p]].push_back(static_cast<int>(p));
      }
    }
  }

  Sequence run() {
    std::vector<int> pos(strings_.size(), 0);
    extend(0, pos);
    return best_;
  }

 private:
  void extend(Vertex last, const std::vector<int>& pos) {
    if (current_.size() > best_.size()) best_ = current_;
    std::vector<int> next(pos.size());
    for (Vertex v = last + 1; v <= n_; ++v) {
      // Even taking every remaining vertex cannot beat the incumbent.
      if (current_.size() + static_cast<std::size_t>(n_ - v + 1) <= best_.size()) return;
      bool ok = true;
      for (std::size_t i = 0; i < strings_.size() && ok; ++i) {
        ok = false;
        for (int p : occ_[i][v]) {
          if (p >= pos[i]) {
            next[i] = p + 1;
            ok = true;
            break;
          }
        }
      }
      if (!ok) continue;
      current_.push_back(v);
      extend(v, next);
      current_.pop_back();
    }
  }

  int n_;
  std::vector<Sequence> strings_;
  std::vector<std::vector<std::vector<int>>> occ_;
  Sequence current_;
  Sequence best_;
};

}  // namespace

MultiLcsResult multi_lcs_subset_enum(const SymbolicInstance& inst,
                                     int max_vertices) {
  if (inst.n > max_vertices) {
    throw Error(ErrorKind::kBudget,
                "subset enumeration limited to n <= " +
                    std::to_string(max_vertices) + ", instance has n = " +
                    std::to_string(inst.n));
  }
  MultiLcsResult out;
  out.solver = Solver::kSubsetEnum;
  out.exact = true;
  out.witness = IncreasingSearch(inst).run();
  out.length = out.witness.size();
  if (!is_common_subsequence(out.witness, inst.all_strings())) {
    throw Error(ErrorKind::kWitness, "subset enumeration produced an invalid witness");
  }
  return out;
}

}  // namespace lcsgap
