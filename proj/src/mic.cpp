#include "depadjust/mic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

#include "depadjust/error.hpp"
#include "depadjust/measures.hpp"

namespace depadjust {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Beyond this many distinct values the DP axis is pre-merged into
// mass-balanced superclumps; cut candidates stay between distinct values.
constexpr std::size_t kMaxDpClumps = 256;

struct CompactPairs {
  std::vector<double> x, y;
  std::size_t n = 0;
};

CompactPairs compact_pairs(const PairedSample& sample) {
  CompactPairs out;
  out.x.reserve(sample.n);
  out.y.reserve(sample.n);
  for (std::size_t k = 0; k < sample.present.size(); ++k) {
    if (!sample.present[k]) continue;
    out.x.push_back(sample.xs[k]);
    out.y.push_back(sample.ys[k]);
  }
  out.n = out.x.size();
  return out;
}

// Clump structure of one axis: point order sorted by value and the exclusive
// end position of every run of equal values.
struct Clumps {
  std::vector<std::size_t> order;
  std::vector<std::size_t> ends;  // cumulative point counts, last == n

  std::size_t count() const noexcept { return ends.size(); }
};

Clumps make_clumps(const std::vector<double>& values) {
  Clumps cl;
  cl.order.resize(values.size());
  std::iota(cl.order.begin(), cl.order.end(), std::size_t{0});
  std::sort(cl.order.begin(), cl.order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  for (std::size_t pos = 1; pos <= cl.order.size(); ++pos) {
    if (pos == cl.order.size() || values[cl.order[pos]] != values[cl.order[pos - 1]]) {
      cl.ends.push_back(pos);
    }
  }
  return cl;
}

// Greedy mass-balanced boundaries over clump cumulative counts; exactly
// min(bins, m) - 1 cuts, every bin nonempty. Returns exclusive clump-index
// boundaries including the final m.
std::vector<std::size_t> equip_boundaries(const std::vector<std::size_t>& cumulative,
                                          std::size_t bins) {
  const std::size_t m = cumulative.size();
  const std::size_t n = cumulative.back();
  if (bins > m) bins = m;
  std::vector<std::size_t> boundaries;
  std::size_t current = 0;  // clumps consumed
  std::size_t pos = 0;      // points consumed
  for (std::size_t b = 0; b + 1 < bins; ++b) {
    const std::size_t bins_left = bins - b;
    const std::size_t lo = current + 1;
    const std::size_t hi = m - bins_left + 1;
    const double ideal = pos + static_cast<double>(n - pos) / static_cast<double>(bins_left);
    // First admissible boundary at or beyond the ideal mass, then compare
    // with its predecessor; ties go to the smaller boundary.
    std::size_t j = lo;
    while (j < hi && static_cast<double>(cumulative[j - 1]) < ideal) ++j;
    if (j > lo) {
      const double below = ideal - static_cast<double>(cumulative[j - 2]);
      const double above = static_cast<double>(cumulative[j - 1]) - ideal;
      if (below <= above) --j;
    }
    boundaries.push_back(j);
    current = j;
    pos = cumulative[j - 1];
  }
  boundaries.push_back(m);
  return boundaries;
}

std::vector<int> codes_from_boundaries(const Clumps& cl,
                                       const std::vector<std::size_t>& boundaries,
                                       std::size_t total) {
  std::vector<int> codes(total, 0);
  std::size_t clump = 0;
  std::size_t bin = 0;
  for (std::size_t pos = 0; pos < cl.order.size(); ++pos) {
    while (pos >= cl.ends[clump]) ++clump;
    while (clump >= boundaries[bin]) ++bin;
    codes[cl.order[pos]] = static_cast<int>(bin);
  }
  return codes;
}

// k * log2(k) lookup for integer counts.
std::vector<double> log2_weight_table(std::size_t n) {
  std::vector<double> table(n + 1, 0.0);
  for (std::size_t k = 2; k <= n; ++k) {
    table[k] = static_cast<double>(k) * std::log2(static_cast<double>(k));
  }
  return table;
}

double literal_normalized_mi(const std::vector<std::vector<std::int64_t>>& counts,
                             std::size_t declared_r, std::size_t declared_c) {
  const auto table = ContingencyTable::from_counts(counts);
  return mutual_information(table) /
         std::log2(static_cast<double>(std::min(declared_r, declared_c)));
}

// One DP pass: fixed axis already coded into c bins, free axis optimized
// over every admissible cut placement for each bin count 2..r_max. Every
// candidate grid the DP selects is re-scored through the literal MI path so
// the returned values match normalized_mi of a real grid.
double optimize_free_axis(const Clumps& free_clumps, const std::vector<int>& fixed_codes,
                          std::size_t c, std::size_t r_max, const std::vector<double>& lw) {
  Clumps merged = free_clumps;
  if (merged.count() > kMaxDpClumps) {
    const auto boundaries = equip_boundaries(free_clumps.ends, kMaxDpClumps);
    std::vector<std::size_t> ends;
    ends.reserve(boundaries.size());
    for (const auto b : boundaries) ends.push_back(free_clumps.ends[b - 1]);
    merged.ends = std::move(ends);
  }
  const std::size_t m = merged.count();
  if (m < 2) return 0.0;
  if (r_max > m) r_max = m;
  if (r_max < 2) return 0.0;

  // prefix[t][j]: points of fixed-bin j within the first t clumps.
  std::vector<std::int64_t> prefix((m + 1) * c, 0);
  {
    std::size_t pos = 0;
    for (std::size_t t = 1; t <= m; ++t) {
      std::copy(prefix.begin() + (t - 1) * c, prefix.begin() + t * c, prefix.begin() + t * c);
      for (; pos < merged.ends[t - 1]; ++pos) {
        ++prefix[t * c + static_cast<std::size_t>(fixed_codes[merged.order[pos]])];
      }
    }
  }
  const auto clump_total = [&](std::size_t t) { return merged.ends[t - 1]; };

  // score[s] for the current t: sum_j L[cnt_j] - L[tot] over clumps (s, t].
  std::vector<double> score(m, 0.0);
  std::vector<std::vector<double>> best((r_max + 1), std::vector<double>(m + 1, kNegInf));
  std::vector<std::vector<int>> parent((r_max + 1), std::vector<int>(m + 1, -1));

  for (std::size_t t = 1; t <= m; ++t) {
    for (std::size_t s = 0; s < t; ++s) {
      double w = 0.0;
      for (std::size_t j = 0; j < c; ++j) {
        const std::int64_t cnt = prefix[t * c + j] - prefix[s * c + j];
        w += lw[static_cast<std::size_t>(cnt)];
      }
      const std::size_t tot = clump_total(t) - (s == 0 ? 0 : clump_total(s));
      score[s] = w - lw[tot];
    }
    best[1][t] = score[0];
    parent[1][t] = 0;
    const std::size_t top = std::min(r_max, t);
    for (std::size_t bins = 2; bins <= top; ++bins) {
      double value = kNegInf;
      int arg = -1;
      for (std::size_t s = bins - 1; s < t; ++s) {
        const double cand = best[bins - 1][s] + score[s];
        if (cand > value) {
          value = cand;
          arg = static_cast<int>(s);
        }
      }
      best[bins][t] = value;
      parent[bins][t] = arg;
    }
  }

  double best_value = 0.0;
  for (std::size_t bins = 2; bins <= r_max; ++bins) {
    if (best[bins][m] == kNegInf) continue;
    // Reconstruct the chosen cuts and evaluate the grid literally.
    std::vector<std::size_t> bounds(bins + 1, 0);
    bounds[bins] = m;
    for (std::size_t b = bins; b >= 1; --b) {
      bounds[b - 1] = static_cast<std::size_t>(parent[b][bounds[b]]);
    }
    std::vector<std::vector<std::int64_t>> counts(bins, std::vector<std::int64_t>(c, 0));
    for (std::size_t b = 0; b < bins; ++b) {
      for (std::size_t j = 0; j < c; ++j) {
        counts[b][j] = prefix[bounds[b + 1] * c + j] - prefix[bounds[b] * c + j];
      }
    }
    best_value = std::max(best_value, literal_normalized_mi(counts, bins, c));
  }
  return best_value;
}

double mic_approx(const CompactPairs& pts, std::size_t budget) {
  const auto lw = log2_weight_table(pts.n);
  double best = 0.0;
  for (int orientation = 0; orientation < 2; ++orientation) {
    const std::vector<double>& free_values = orientation == 0 ? pts.x : pts.y;
    const std::vector<double>& fixed_values = orientation == 0 ? pts.y : pts.x;
    const Clumps free_clumps = make_clumps(free_values);
    if (free_clumps.count() < 2) continue;
    for (std::size_t c = 2; c * 2 <= budget; ++c) {
      std::size_t c_used = 0;
      const auto fixed_codes = equipartition_codes(fixed_values, c, &c_used);
      if (c_used != c) break;  // fewer distinct values; same grids as c_used
      const std::size_t r_max = budget / c;
      best = std::max(best, optimize_free_axis(free_clumps, fixed_codes, c, r_max, lw));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

double mic_exhaustive(const CompactPairs& pts, std::size_t budget) {
  double best = 0.0;
  for (std::size_t r = 2; r * 2 <= budget; ++r) {
    std::size_t r_used = 0;
    const auto x_codes = equipartition_codes(pts.x, r, &r_used);
    if (r_used != r) break;
    for (std::size_t c = 2; r * c <= budget; ++c) {
      std::size_t c_used = 0;
      const auto y_codes = equipartition_codes(pts.y, c, &c_used);
      if (c_used != c) break;
      std::vector<std::vector<std::int64_t>> counts(r, std::vector<std::int64_t>(c, 0));
      for (std::size_t k = 0; k < pts.n; ++k) {
        ++counts[static_cast<std::size_t>(x_codes[k])][static_cast<std::size_t>(y_codes[k])];
      }
      best = std::max(best, literal_normalized_mi(counts, r, c));
    }
  }
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace

std::size_t mic_grid_budget(std::size_t n, double alpha_exponent) {
  const double raw = std::pow(static_cast<double>(n), alpha_exponent);
  const auto budget = static_cast<std::size_t>(std::floor(raw + 1e-9));
  return std::max<std::size_t>(budget, 4);
}

std::vector<int> equipartition_codes(const std::vector<double>& values, std::size_t bins,
                                     std::size_t* bins_used) {
  const Clumps cl = make_clumps(values);
  const auto boundaries = equip_boundaries(cl.ends, bins);
  if (bins_used != nullptr) *bins_used = boundaries.size();
  return codes_from_boundaries(cl, boundaries, values.size());
}

double normalized_mi(const PairedSample& sample, const Grid& grid) {
  if (std::min(grid.x_bins(), grid.y_bins()) < 2) {
    throw Error("degenerate-grid", "normalized MI needs at least 2 bins on each axis");
  }
  if (sample.n < 2) throw Error("sample-too-small", "normalized_mi needs n >= 2");
  const auto strictly_increasing = [](const std::vector<double>& cuts) {
    for (std::size_t i = 1; i < cuts.size(); ++i) {
      if (!(cuts[i - 1] < cuts[i])) return false;
    }
    return true;
  };
  if (!strictly_increasing(grid.x_cuts) || !strictly_increasing(grid.y_cuts)) {
    throw Error("bad-grid", "cut points must be strictly increasing");
  }

  const auto bin_of = [](const std::vector<double>& cuts, double v) {
    return static_cast<std::size_t>(
        std::upper_bound(cuts.begin(), cuts.end(), v) - cuts.begin());
  };
  std::vector<std::vector<std::int64_t>> counts(grid.x_bins(),
                                                std::vector<std::int64_t>(grid.y_bins(), 0));
  for (std::size_t k = 0; k < sample.present.size(); ++k) {
    if (!sample.present[k]) continue;
    ++counts[bin_of(grid.x_cuts, sample.xs[k])][bin_of(grid.y_cuts, sample.ys[k])];
  }
  // Empty grid rows/columns are dropped by table construction; they carry no
  // information mass, so the MI value is unchanged.
  return literal_normalized_mi(counts, grid.x_bins(), grid.y_bins());
}

double mic(const PairedSample& sample, const MicConfig& config) {
  if (!(config.alpha_exponent > 0.0 && config.alpha_exponent <= 1.0)) {
    throw Error("bad-config", "alpha_exponent must be in (0,1]");
  }
  const CompactPairs pts = compact_pairs(sample);
  if (pts.n < 4) throw Error("sample-too-small", "mic needs n >= 4");
  const std::size_t budget = mic_grid_budget(pts.n, config.alpha_exponent);
  if (config.mode == MicConfig::SearchMode::exhaustive_equipartition) {
    return mic_exhaustive(pts, budget);
  }
  return mic_approx(pts, budget);
}

}  // namespace depadjust
