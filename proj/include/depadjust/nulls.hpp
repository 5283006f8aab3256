#pragma once

#include <cstdint>
#include <cstddef>
#include <functional>
#include <vector>

#include "depadjust/sample.hpp"

namespace depadjust {

// Distribution model of an estimator under the hypothesis that the two
// variables are independent, at the observed n and marginals. Analytic kinds
// carry closed-form moments; the empirical kind stores the sorted values of
// a Monte-Carlo permutation batch.
struct NullModel {
  enum class Kind { analytic_beta_r2, analytic_gini_moments, empirical_permutation };

  Kind kind = Kind::empirical_permutation;
  double mean = 0.0;
  double variance = 0.0;

  std::size_t n = 0;               // sample size the model refers to
  std::size_t permutations = 0;    // empirical only
  std::uint64_t seed = 0;          // empirical only
  std::vector<double> values;      // empirical only, ascending

  // (p)-quantile of the null, nondecreasing in p.
  //  - beta null: inverse regularized incomplete beta;
  //  - Gini moments: the Cantelli upper bound at alpha = 1-p;
  //  - empirical: entry ceil(p*S) of the ascending permutation values.
  double quantile(double p) const;
};

// Beta(1/2, (n-2)/2) null of r^2: mean 1/(n-1), variance
// 2(n-2)/((n-1)^2 (n+1)). Requires n >= 4.
NullModel r2_null(std::size_t n);

// Multinomial-model mean and variance of Gini gain under independence, from
// the table's shape and marginals.
NullModel gini_null_moments(const ContingencyTable& table);

// Distribution-free upper bound for the (1-alpha)-quantile:
// mean + sqrt((1-alpha)/alpha * variance).
double cantelli_quantile(const NullModel& model, double alpha);

// Monte-Carlo null: S evaluations of the estimator with the y side permuted
// against the fixed x side. Deterministic for fixed (sample, S, seed) and
// independent of worker scheduling; permutation s draws its own RNG
// substream keyed by s.
NullModel permutation_null(const PairedSample& sample,
                           const std::function<double(const PairedSample&)>& estimator,
                           std::size_t permutations, std::uint64_t seed, unsigned threads = 0);

}  // namespace depadjust
