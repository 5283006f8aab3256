#include "depadjust/adjust.hpp"

#include <cmath>

#include "depadjust/error.hpp"
#include "depadjust/measures.hpp"
#include "depadjust/mic.hpp"

namespace depadjust {
namespace {

NullRef make_ref(const NullModel& null) {
  NullRef ref;
  ref.kind = null.kind;
  ref.n = null.n;
  ref.permutations = null.permutations;
  ref.seed = null.seed;
  ref.mean = null.mean;
  ref.sd = std::sqrt(null.variance);
  return ref;
}

NullModel mic_permutation_null(const PairedSample& sample, std::size_t permutations,
                               std::uint64_t seed) {
  return permutation_null(
      sample, [](const PairedSample& s) { return mic(s); }, permutations, seed);
}

}  // namespace

AdjustedScore adjust_quantification(double raw, const NullModel& null, double max_value) {
  if (!(max_value > null.mean)) {
    throw Error("degenerate-normalizer", "max must exceed the null mean");
  }
  AdjustedScore score;
  score.raw = raw;
  score.scheme = AdjustScheme::quantification;
  score.max_value = max_value;
  score.adjusted = (raw - null.mean) / (max_value - null.mean);
  score.null_ref = make_ref(null);
  return score;
}

AdjustedScore standardize(double raw, const NullModel& null) {
  if (!(null.variance > 0.0)) {
    throw Error("degenerate-null-variance", "null variance must be positive");
  }
  AdjustedScore score;
  score.raw = raw;
  score.scheme = AdjustScheme::standardized;
  score.adjusted = (raw - null.mean) / std::sqrt(null.variance);
  score.null_ref = make_ref(null);
  return score;
}

AdjustedScore adjust_ranking(double raw, const NullModel& null, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("bad-alpha", "alpha outside (0,1]");
  AdjustedScore score;
  score.raw = raw;
  score.scheme = AdjustScheme::ranking_alpha;
  score.alpha = alpha;
  const double q = null.kind == NullModel::Kind::analytic_gini_moments
                       ? cantelli_quantile(null, alpha)
                       : null.quantile(1.0 - alpha);
  score.adjusted = raw - q;
  score.null_ref = make_ref(null);
  return score;
}

AdjustedScore ar2(const PairedSample& sample) {
  return adjust_quantification(pearson_r2(sample), r2_null(sample.n), 1.0);
}

AdjustedScore sr2(const PairedSample& sample) {
  return standardize(pearson_r2(sample), r2_null(sample.n));
}

AdjustedScore ar2_alpha(const PairedSample& sample, double alpha) {
  return adjust_ranking(pearson_r2(sample), r2_null(sample.n), alpha);
}

AdjustedScore amic(const PairedSample& sample, std::size_t permutations, std::uint64_t seed) {
  return adjust_quantification(mic(sample), mic_permutation_null(sample, permutations, seed), 1.0);
}

AdjustedScore smic(const PairedSample& sample, std::size_t permutations, std::uint64_t seed) {
  return standardize(mic(sample), mic_permutation_null(sample, permutations, seed));
}

AdjustedScore amic_alpha(const PairedSample& sample, double alpha, std::size_t permutations,
                         std::uint64_t seed) {
  return adjust_ranking(mic(sample), mic_permutation_null(sample, permutations, seed), alpha);
}

AdjustedScore sgini(const ContingencyTable& table) {
  return standardize(gini_gain(table), gini_null_moments(table));
}

AdjustedScore agini_alpha(const ContingencyTable& table, double alpha) {
  return adjust_ranking(gini_gain(table), gini_null_moments(table), alpha);
}

const char* scheme_name(AdjustScheme scheme) {
  switch (scheme) {
    case AdjustScheme::quantification: return "quantification";
    case AdjustScheme::standardized: return "standardized";
    case AdjustScheme::ranking_alpha: return "ranking_alpha";
  }
  return "unknown";
}

const char* null_kind_name(NullModel::Kind kind) {
  switch (kind) {
    case NullModel::Kind::analytic_beta_r2: return "analytic_beta_r2";
    case NullModel::Kind::analytic_gini_moments: return "analytic_gini_moments";
    case NullModel::Kind::empirical_permutation: return "empirical_permutation";
  }
  return "unknown";
}

}  // namespace depadjust
