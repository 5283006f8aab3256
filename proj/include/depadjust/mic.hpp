#pragma once

#include <cstddef>
#include <vector>

#include "depadjust/sample.hpp"

namespace depadjust {

// Axis-aligned grid over the scatter of two real variables. Cut points are
// strictly increasing; k cuts partition an axis into k+1 bins (a value v
// falls in the bin counting the cuts <= v).
struct Grid {
  std::vector<double> x_cuts;
  std::vector<double> y_cuts;

  std::size_t x_bins() const noexcept { return x_cuts.size() + 1; }
  std::size_t y_bins() const noexcept { return y_cuts.size() + 1; }
};

struct MicConfig {
  enum class SearchMode {
    // For every bin-count pair (r, c) inside the budget, equipartition one
    // axis and optimize the other by dynamic programming over the cut
    // candidates; both orientations are searched.
    approx,
    // Only grids with both axes equipartitioned; exact within that family
    // and cheap enough to cross-check by brute-force enumeration.
    exhaustive_equipartition,
  };

  // Exponent a of the grid budget: grids satisfy r*c <= floor(n^a), with a
  // floor of 4 so the 2x2 grid is always searchable.
  double alpha_exponent = 0.6;
  SearchMode mode = SearchMode::approx;
};

// Grid budget floor(n^alpha), never below 4.
std::size_t mic_grid_budget(std::size_t n, double alpha_exponent);

// MI of the sample binned through the grid, divided by log2(min(r, c)) of
// the grid dimensions. Requires min(r, c) >= 2.
double normalized_mi(const PairedSample& sample, const Grid& grid);

// Maximal normalized MI over the searched grid family. Deterministic for a
// fixed sample and config; result is in [0, 1].
double mic(const PairedSample& sample, const MicConfig& config = MicConfig{});

// Mass-balanced partition of sorted values into at most `bins` bins that
// never separates duplicate values. Exposed as the library-wide definition
// of an equipartition: cut b is placed at the admissible clump boundary
// whose cumulative count is closest to pos + (n - pos)/bins_left (ties
// toward fewer points), where admissible means at least one clump remains
// for every later bin. Returns the bin code of every value (input order)
// and writes the effective bin count, min(bins, #distinct values).
std::vector<int> equipartition_codes(const std::vector<double>& values, std::size_t bins,
                                     std::size_t* bins_used);

}  // namespace depadjust
