#include "depadjust/nulls.hpp"

#include <algorithm>
#include <cmath>

#include "depadjust/error.hpp"
#include "depadjust/parallel.hpp"
#include "depadjust/rng.hpp"
#include "depadjust/special.hpp"

namespace depadjust {

double NullModel::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("bad-quantile", "p outside [0,1]");
  switch (kind) {
    case Kind::analytic_beta_r2:
      return incomplete_beta_inverse(0.5, 0.5 * (static_cast<double>(n) - 2.0), p);
    case Kind::analytic_gini_moments: {
      if (p >= 1.0) throw Error("bad-quantile", "Cantelli bound undefined at p = 1");
      return mean + std::sqrt(p / (1.0 - p) * variance);
    }
    case Kind::empirical_permutation: {
      const std::size_t s = values.size();
      std::size_t rank = static_cast<std::size_t>(
          std::ceil(p * static_cast<double>(s) - 1e-12));
      if (rank < 1) rank = 1;
      if (rank > s) rank = s;
      return values[rank - 1];
    }
  }
  throw Error("bad-null-model");
}

NullModel r2_null(std::size_t n) {
  if (n < 4) throw Error("sample-too-small", "r2_null needs n >= 4");
  NullModel model;
  model.kind = NullModel::Kind::analytic_beta_r2;
  model.n = n;
  const double nn = static_cast<double>(n);
  model.mean = 1.0 / (nn - 1.0);
  model.variance = 2.0 * (nn - 2.0) / ((nn - 1.0) * (nn - 1.0) * (nn + 1.0));
  return model;
}

NullModel gini_null_moments(const ContingencyTable& table) {
  const double n = static_cast<double>(table.n());
  const double r = static_cast<double>(table.rows());

  double p2 = 0.0, p3 = 0.0;  // sums of squared / cubed column masses
  for (std::size_t j = 0; j < table.cols(); ++j) {
    const double p = static_cast<double>(table.col_marginal(j)) / n;
    p2 += p * p;
    p3 += p * p * p;
  }
  double inv_rows = 0.0;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (table.row_marginal(i) <= 0) throw Error("empty-category");
    inv_rows += 1.0 / static_cast<double>(table.row_marginal(i));
  }

  NullModel model;
  model.kind = NullModel::Kind::analytic_gini_moments;
  model.n = static_cast<std::size_t>(table.n());
  model.mean = (r - 1.0) / n * (1.0 - p2);
  const double shape_term = (r - 1.0) * (2.0 * p2 + 2.0 * p2 * p2 - 4.0 * p3);
  const double row_term = (inv_rows - 2.0 * r / n + 1.0 / n) *
                          (-2.0 * p2 - 6.0 * p2 * p2 + 8.0 * p3);
  model.variance = (shape_term + row_term) / (n * n);
  if (model.variance < 0.0) model.variance = 0.0;
  return model;
}

double cantelli_quantile(const NullModel& model, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error("bad-alpha", "alpha outside (0,1]");
  if (!std::isfinite(model.mean) || !std::isfinite(model.variance)) {
    throw Error("bad-null-model", "Cantelli bound needs finite moments");
  }
  return model.mean + std::sqrt((1.0 - alpha) / alpha * model.variance);
}

NullModel permutation_null(const PairedSample& sample,
                           const std::function<double(const PairedSample&)>& estimator,
                           std::size_t permutations, std::uint64_t seed, unsigned threads) {
  if (permutations < 2) throw Error("insufficient-permutations", "need S >= 2");
  const PairedSample base = sample.compact();

  std::vector<double> values(permutations);
  parallel_for(
      permutations,
      [&](std::size_t s) {
        Rng rng = Rng::substream(seed, s);
        PairedSample permuted = base;
        rng.shuffle(permuted.ys);
        values[s] = estimator(permuted);
      },
      threads);

  std::sort(values.begin(), values.end());
  long double sum = 0.0L;
  for (const double v : values) sum += v;
  const long double mean = sum / static_cast<long double>(permutations);
  long double ss = 0.0L;
  for (const double v : values) {
    const long double d = v - mean;
    ss += d * d;
  }

  NullModel model;
  model.kind = NullModel::Kind::empirical_permutation;
  model.n = base.n;
  model.permutations = permutations;
  model.seed = seed;
  model.mean = static_cast<double>(mean);
  model.variance = static_cast<double>(ss / static_cast<long double>(permutations - 1));
  model.values = std::move(values);
  return model;
}

}  // namespace depadjust
