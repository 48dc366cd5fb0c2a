#include "lcsgap/soundness.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcsgap/graph.hpp"
#include "lcsgap/lcs.hpp"

namespace lcsgap {

std::string_view to_string(Verdict v) {
  return v == Verdict::kSoundnessWitness ? "SOUNDNESS_WITNESS" : "CONSISTENT";
}

std::string_view to_string(AlignmentCase c) {
  switch (c) {
    case AlignmentCase::kSparsePrefix: return "SPARSE_PREFIX";
    case AlignmentCase::kSparseShifted: return "SPARSE_SHIFTED";
    case AlignmentCase::kDense: return "DENSE";
  }
  return "DENSE";
}

std::string_view to_string(HalfSide s) {
  switch (s) {
    case HalfSide::kFirst: return "FIRST";
    case HalfSide::kLast: return "LAST";
    case HalfSide::kBoth: return "BOTH";
  }
  return "BOTH";
}

std::string_view to_string(SubsetMode m) {
  return m == SubsetMode::kPeeled ? "PEELED" : "PADDED";
}

IntervalCount::IntervalCount(int n, std::span<const Vertex> heavy)
    : n_(n), prefix_(static_cast<std::size_t>(n) + 1, 0) {
  for (Vertex t : heavy) {
    if (t < 1 || t > n) throw Error(ErrorKind::kParameter, "heavy index out of range");
    ++prefix_[t];
  }
  std::partial_sum(prefix_.begin(), prefix_.end(), prefix_.begin());
}

int IntervalCount::operator()(int i, int j) const {
  i = std::max(i, 1);
  j = std::min(j, n_);
  if (i > j) return 0;
  return prefix_[j] - prefix_[i - 1];
}

BlockDecomposition decompose(std::span<const Symbol> L, const BlockInstance& inst) {
  const auto all = inst.all_strings();
  if (!is_common_subsequence(L, all)) {
    throw Error(ErrorKind::kPrecondition,
                "L is not a common subsequence of the block instance");
  }
  const int n = inst.params.n;
  const auto m = static_cast<std::size_t>(inst.family.m);
  const Sequence& y_n = inst.y[static_cast<std::size_t>(n) - 1];

  BlockDecomposition dec;
  dec.n = n;
  dec.z_blocks.assign(static_cast<std::size_t>(n), {});
  dec.z_offsets.assign(static_cast<std::size_t>(n), L.size());
  dec.heavy_threshold = inst.params.beta * Rational(static_cast<std::int64_t>(m));

  const Alignment emb = embed(L, y_n);
  for (std::size_t q = 0; q < L.size(); ++q) {
    const auto block = static_cast<std::size_t>(emb.mapping[q]) / m;  // 0-based
    if (dec.z_blocks[block].empty()) dec.z_offsets[block] = q;
    dec.z_blocks[block].push_back(L[q]);
  }
  // Empty blocks take the offset of the next non-empty one.
  for (std::size_t b = static_cast<std::size_t>(n); b-- > 0;) {
    if (dec.z_blocks[b].empty()) {
      dec.z_offsets[b] = b + 1 < static_cast<std::size_t>(n) ? dec.z_offsets[b + 1] : L.size();
    }
  }
  for (int i = 1; i <= n; ++i) {
    const auto size = static_cast<std::int64_t>(dec.z_blocks[i - 1].size());
    if (Rational(size) >= dec.heavy_threshold) {
      dec.heavy_set.push_back(i);
      dec.l1_length += static_cast<std::size_t>(size);
    }
  }
  return dec;
}

PruneResult prune_sparse(std::span<const Vertex> heavy, int n,
                         const ReductionParams& params) {
  const IntervalCount count(n, heavy);
  const Rational bound = Rational(2) * params.alpha / params.beta;
  std::vector<std::uint8_t> removed(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex i : heavy) {
    for (int j = n; j > i; --j) {
      if (Rational(count(i, j)) <= bound * Rational(j - i + 1)) {
        for (Vertex t : heavy) {
          if (t >= i && t <= j) removed[t] = 1;
        }
        break;
      }
    }
  }
  PruneResult out;
  for (Vertex t : heavy) (removed[t] ? out.t_removed : out.v_h_pruned).push_back(t);
  return out;
}

bool check_dense_case_bounds(const BlockDecomposition& dec,
                             const BlockInstance& inst, Vertex i) {
  if (!std::binary_search(dec.heavy_set.begin(), dec.heavy_set.end(), i)) {
    throw Error(ErrorKind::kDomain,
                "vertex " + std::to_string(i) + " is not in the heavy set");
  }
  const Rational weight = inst.params.beta / (Rational(2) * inst.params.alpha);
  std::int64_t above_in = 0, above_out = 0, below_in = 0, below_out = 0;
  for (Vertex t : dec.heavy_set) {
    if (t == i) continue;
    const bool adjacent = inst.source.has_edge(i, t);
    if (t > i) (adjacent ? above_in : above_out) += 1;
    else (adjacent ? below_in : below_out) += 1;
  }
  const std::int64_t n = dec.n;
  const bool forward =
      Rational(above_in) + weight * Rational(above_out) <= Rational(2 * (n - i) + 1);
  const bool backward =
      Rational(below_in) + weight * Rational(below_out) <= Rational(2 * i - 1);
  return forward && backward;
}

namespace {

// Greedy padding: repeatedly add the vertex with the most edges into the
// current set, preferring `preferred`, smallest label on ties.
VertexSet pad_to_size(const Graph& g, VertexSet base, const VertexSet& preferred,
                      int k) {
  std::vector<std::uint8_t> in(static_cast<std::size_t>(g.n()) + 1, 0);
  for (Vertex v : base) in[v] = 1;
  while (static_cast<int>(base.size()) < k) {
    auto pick_from = [&](auto&& range) {
      Vertex best = 0;
      std::size_t best_edges = 0;
      for (Vertex v : range) {
        if (in[v]) continue;
        std::size_t e = 0;
        for (Vertex u : base) e += g.has_edge(u, v) ? 1 : 0;
        if (best == 0 || e > best_edges || (e == best_edges && v < best)) {
          best = v;
          best_edges = e;
        }
      }
      return best;
    };
    Vertex v = pick_from(preferred);
    if (v == 0) {
      VertexSet everyone(static_cast<std::size_t>(g.n()));
      std::iota(everyone.begin(), everyone.end(), 1);
      v = pick_from(everyone);
    }
    in[v] = 1;
    base.push_back(v);
  }
  std::sort(base.begin(), base.end());
  return base;
}

struct HalfPlacement {
  bool first_in = false;  // first ceil(|Z|/2) images inside the region
  bool last_in = false;   // last ceil(|Z|/2) images inside the region
};

HalfPlacement place_halves(std::span<const std::int64_t> images, std::int64_t lo,
                           std::int64_t hi) {
  const std::size_t half = (images.size() + 1) / 2;
  auto inside = [&](std::size_t from, std::size_t to) {
    for (std::size_t q = from; q < to; ++q) {
      if (images[q] < lo || images[q] >= hi) return false;
    }
    return true;
  };
  return {inside(0, half), inside(images.size() - half, images.size())};
}

HalfSide side_of(const HalfPlacement& p) {
  if (p.first_in && p.last_in) return HalfSide::kBoth;
  return p.first_in ? HalfSide::kFirst : HalfSide::kLast;
}

}  // namespace

ExtractionReport extract_dense_subgraph(std::span<const Symbol> L,
                                        const BlockInstance& inst) {
  const ReductionParams& params = inst.params;
  if (!(params.alpha > Rational(0) && params.alpha < Rational(1, 8))) {
    throw Error(ErrorKind::kParameter, "alpha must lie in (0, 1/8)");
  }
  if (params.k < 2) {
    throw Error(ErrorKind::kParameter,
                "extraction needs k >= 2 (density of a smaller set is undefined)");
  }
  const Graph& g = inst.source;
  const BlockDecomposition dec = decompose(L, inst);
  const PruneResult pruned = prune_sparse(dec, params);

  ExtractionReport report;
  report.l_length = L.size();
  report.l1_length = dec.l1_length;
  report.n = params.n;
  report.k = params.k;
  report.heavy_threshold = dec.heavy_threshold;
  report.sparse_threshold = Rational(2) * params.alpha / params.beta;
  report.ell_no = params.ell_no;
  report.density_threshold = (params.gamma / Rational(2)) * (params.gamma / Rational(2));
  report.v_h = dec.heavy_set;
  report.v_h_pruned = pruned.v_h_pruned;
  report.t_removed = pruned.t_removed;
  if (report.v_h.size() >= 2) report.density_vh = induced_density(g, report.v_h);
  if (report.v_h_pruned.size() >= 2) {
    report.density_pruned = induced_density(g, report.v_h_pruned);
  }

  const auto k = static_cast<std::size_t>(params.k);
  if (report.v_h.size() <= k) {
    report.padded_subset = pad_to_size(g, report.v_h, {}, params.k);
    report.subset_mode = SubsetMode::kPadded;
  } else if (report.v_h_pruned.size() <= k) {
    report.padded_subset = pad_to_size(g, report.v_h_pruned, report.v_h, params.k);
    report.subset_mode = SubsetMode::kPadded;
  } else {
    report.padded_subset = dense_subgraph_peel(g, report.v_h, params.k);
    report.subset_mode = SubsetMode::kPeeled;
  }
  report.padded_density = induced_density(g, report.padded_subset);
  report.verdict = (Rational(static_cast<std::int64_t>(L.size())) > params.ell_no &&
                    report.padded_density >= report.density_threshold)
                       ? Verdict::kSoundnessWitness
                       : Verdict::kConsistent;

  // Alignment probes on L_1 (L without the light blocks).
  if (dec.heavy_set.empty()) return report;
  Sequence l1;
  std::vector<std::size_t> start(static_cast<std::size_t>(params.n) + 1, 0);
  std::vector<std::size_t> stop(static_cast<std::size_t>(params.n) + 1, 0);
  for (Vertex t : dec.heavy_set) {
    start[t] = l1.size();
    l1.insert(l1.end(), dec.z_blocks[t - 1].begin(), dec.z_blocks[t - 1].end());
    stop[t] = l1.size();
  }
  const auto m = static_cast<std::int64_t>(inst.family.m);
  const int n = params.n;
  std::vector<std::uint8_t> heavy(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex t : dec.heavy_set) heavy[t] = 1;

  // Is some heavy Z_j (j selected by `want`) matched into its own block
  // within slots [slot_lo, slot_hi] of the string with `layout`?
  auto own_block_hit = [&](const Alignment& emb, const VertexSet& layout,
                           std::int64_t slot_lo, std::int64_t slot_hi, auto want) {
    for (Vertex j : dec.heavy_set) {
      if (!want(j)) continue;
      for (std::size_t q = start[j]; q < stop[j]; ++q) {
        const std::int64_t slot = emb.mapping[q] / m;
        if (slot >= slot_lo && slot <= slot_hi && layout[slot] == j) return true;
      }
    }
    return false;
  };

  for (Vertex i : dec.heavy_set) {
    AlignmentProbe probe;
    probe.vertex = i;

    // Y_i = S_1..S_{i-1} | S_{i+1}..S_n S_i S_{N>(i)}
    {
      const Sequence& yi = inst.y[i - 1];
      const VertexSet& layout = inst.block_layout[i - 1];
      const Alignment emb = embed(l1, yi);
      const std::span<const std::int64_t> images(emb.mapping.data() + start[i],
                                                 stop[i] - start[i]);
      const std::int64_t cut = (i - 1) * m;
      const HalfPlacement left = place_halves(images, 0, cut);
      if (left.first_in) {
        probe.forward = AlignmentCase::kSparsePrefix;
        probe.forward_half = side_of(left);
      } else {
        const HalfPlacement right =
            place_halves(images, cut, static_cast<std::int64_t>(yi.size()));
        probe.forward_half = side_of(right);
        probe.forward = own_block_hit(emb, layout, i - 1, n - 1,
                                      [&](Vertex j) { return j > i; })
                            ? AlignmentCase::kSparseShifted
                            : AlignmentCase::kDense;
      }
    }
    // Y'_i = S_{N<(i)} S_i S_1..S_{i-1} | S_{i+1}..S_n
    {
      const Sequence& ypi = inst.y_prime[i - 1];
      const VertexSet& layout = inst.block_layout[static_cast<std::size_t>(n + i - 1)];
      const Alignment emb = embed(l1, ypi);
      const std::span<const std::int64_t> images(emb.mapping.data() + start[i],
                                                 stop[i] - start[i]);
      const auto lower = static_cast<std::int64_t>(g.lower_neighbors(i).size());
      const std::int64_t cut = (lower + i) * m;
      const HalfPlacement right =
          place_halves(images, cut, static_cast<std::int64_t>(ypi.size()));
      if (right.last_in) {
        probe.backward = AlignmentCase::kSparsePrefix;
        probe.backward_half = side_of(right);
      } else {
        const HalfPlacement left = place_halves(images, 0, cut);
        probe.backward_half = side_of(left);
        probe.backward = own_block_hit(emb, layout, lower, lower + i - 1,
                                       [&](Vertex j) { return j < i; })
                             ? AlignmentCase::kSparseShifted
                             : AlignmentCase::kDense;
      }
    }
    probe.dense_bounds_hold = check_dense_case_bounds(dec, inst, i);
    report.probes.push_back(probe);
  }
  return report;
}

}  // namespace lcsgap
