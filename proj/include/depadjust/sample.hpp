#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

namespace depadjust {

enum class VariableKind { real, categorical };

// Aligned observation pairs with a pairwise-complete mask. Categorical
// variables are stored as integer codes (in first-appearance order) with the
// label text kept for reporting. A pair takes part in estimation only when
// present[k] is true, i.e. both coordinates were observed.
struct PairedSample {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<std::uint8_t> present;
  std::size_t n = 0;  // number of present pairs

  VariableKind x_kind = VariableKind::real;
  VariableKind y_kind = VariableKind::real;
  std::vector<std::string> x_labels;  // set when the side is categorical
  std::vector<std::string> y_labels;

  static PairedSample from_real(std::vector<double> xs, std::vector<double> ys);
  static PairedSample from_real(std::vector<double> xs, std::vector<double> ys,
                                std::vector<std::uint8_t> present);
  static PairedSample from_categorical(const std::vector<std::string>& xs,
                                       const std::vector<std::string>& ys);
  // Codes are dense nonnegative integers; labels default to the code text.
  static PairedSample from_codes(std::vector<double> x_codes, std::vector<double> y_codes);

  // Drops absent pairs; the result has present[k] == true everywhere.
  PairedSample compact() const;
};

// r x c contingency table of joint counts with both marginals. Empty rows and
// columns are dropped at construction, so every n_i^X and n_j^Y is >= 1.
class ContingencyTable {
public:
  static ContingencyTable from_counts(const std::vector<std::vector<std::int64_t>>& counts);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t at(std::size_t i, std::size_t j) const { return counts_[i * cols_ + j]; }
  std::int64_t row_marginal(std::size_t i) const { return row_marginals_[i]; }
  std::int64_t col_marginal(std::size_t j) const { return col_marginals_[j]; }
  const std::vector<std::int64_t>& row_marginals() const noexcept { return row_marginals_; }
  const std::vector<std::int64_t>& col_marginals() const noexcept { return col_marginals_; }

  // Category labels in the order rows/columns appear in the table; empty when
  // the table was built from raw counts.
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

private:
  ContingencyTable() = default;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> counts_;  // row-major
  std::vector<std::int64_t> row_marginals_;
  std::vector<std::int64_t> col_marginals_;
  std::int64_t n_ = 0;
};

// Tallies the present pairs of a categorical sample. Rows and columns are
// ordered by first appearance among present pairs.
ContingencyTable build_contingency(const PairedSample& sample);

}  // namespace depadjust
