#include "depadjust/measures.hpp"

#include <cmath>
#include <cstddef>

#include "depadjust/error.hpp"

namespace depadjust {

double pearson_r2(const PairedSample& sample) {
  if (sample.n < 3) throw Error("sample-too-small", "pearson_r2 needs n >= 3");

  long double mean_x = 0.0L, mean_y = 0.0L;
  long double sxx = 0.0L, syy = 0.0L, sxy = 0.0L;
  std::size_t k = 0;
  for (std::size_t i = 0; i < sample.present.size(); ++i) {
    if (!sample.present[i]) continue;
    ++k;
    const long double x = sample.xs[i];
    const long double y = sample.ys[i];
    const long double dx = x - mean_x;
    mean_x += dx / k;
    const long double dy = y - mean_y;
    mean_y += dy / k;
    sxx += dx * (x - mean_x);
    syy += dy * (y - mean_y);
    sxy += dx * (y - mean_y);
  }
  if (sxx <= 0.0L || syy <= 0.0L) {
    throw Error("degenerate-variance", "zero variance in x or y");
  }
  return static_cast<double>((sxy * sxy) / (sxx * syy));
}

double mutual_information(const ContingencyTable& table) {
  const long double n = static_cast<long double>(table.n());
  long double mi = 0.0L;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const long double row = static_cast<long double>(table.row_marginal(i));
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const std::int64_t cell = table.at(i, j);
      if (cell == 0) continue;
      const long double nij = static_cast<long double>(cell);
      mi += (nij / n) * std::log2(nij * n / (row * static_cast<long double>(table.col_marginal(j))));
    }
  }
  return mi < 0.0L ? 0.0 : static_cast<double>(mi);
}

double gini_gain(const ContingencyTable& table) {
  const long double n = static_cast<long double>(table.n());
  long double y_impurity = 1.0L;
  for (std::size_t j = 0; j < table.cols(); ++j) {
    const long double p = static_cast<long double>(table.col_marginal(j)) / n;
    y_impurity -= p * p;
  }
  long double conditional = 0.0L;
  for (std::size_t i = 0; i < table.rows(); ++i) {
    const long double row = static_cast<long double>(table.row_marginal(i));
    long double within = 1.0L;
    for (std::size_t j = 0; j < table.cols(); ++j) {
      const long double q = static_cast<long double>(table.at(i, j)) / row;
      within -= q * q;
    }
    conditional += (row / n) * within;
  }
  const long double gain = y_impurity - conditional;
  return gain < 0.0L ? 0.0 : static_cast<double>(gain);
}

}  // namespace depadjust
