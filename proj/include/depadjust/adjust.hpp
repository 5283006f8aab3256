#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "depadjust/nulls.hpp"
#include "depadjust/sample.hpp"

namespace depadjust {

enum class AdjustScheme { quantification, standardized, ranking_alpha };

// Provenance of the null model an adjustment was computed against; enough to
// reproduce the adjusted value from scratch.
struct NullRef {
  NullModel::Kind kind = NullModel::Kind::empirical_permutation;
  std::size_t n = 0;
  std::size_t permutations = 0;
  std::uint64_t seed = 0;
  double mean = 0.0;
  double sd = 0.0;
};

// A raw estimate together with one chance-adjusted variant. Terminal value:
// combinators accept raw reals only, so adjustments cannot be stacked.
struct AdjustedScore {
  double raw = 0.0;
  double adjusted = 0.0;
  AdjustScheme scheme = AdjustScheme::quantification;
  std::optional<double> alpha;  // set iff scheme == ranking_alpha
  double max_value = 1.0;       // normalizer used by quantification
  NullRef null_ref;
};

// (raw - E0) / (max - E0); 1 iff raw attains the maximum, 0 on the null mean.
AdjustedScore adjust_quantification(double raw, const NullModel& null, double max_value);

// (raw - E0) / sd0.
AdjustedScore standardize(double raw, const NullModel& null);

// raw - q0(1 - alpha); analytic Gini moments use the Cantelli bound,
// empirical nulls the sorted-rank quantile.
AdjustedScore adjust_ranking(double raw, const NullModel& null, double alpha);

// Named instances composing measure, null and combinator.
AdjustedScore ar2(const PairedSample& sample);
AdjustedScore sr2(const PairedSample& sample);
AdjustedScore ar2_alpha(const PairedSample& sample, double alpha);
AdjustedScore amic(const PairedSample& sample, std::size_t permutations, std::uint64_t seed);
AdjustedScore smic(const PairedSample& sample, std::size_t permutations, std::uint64_t seed);
AdjustedScore amic_alpha(const PairedSample& sample, double alpha, std::size_t permutations,
                         std::uint64_t seed);
AdjustedScore sgini(const ContingencyTable& table);
AdjustedScore agini_alpha(const ContingencyTable& table, double alpha);

const char* scheme_name(AdjustScheme scheme);
const char* null_kind_name(NullModel::Kind kind);

}  // namespace depadjust
