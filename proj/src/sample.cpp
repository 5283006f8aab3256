#include "depadjust/sample.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "depadjust/error.hpp"

namespace depadjust {
namespace {

std::size_t count_present(const std::vector<std::uint8_t>& present) {
  std::size_t n = 0;
  for (const auto flag : present) n += flag ? 1 : 0;
  return n;
}

void check_lengths(std::size_t xs, std::size_t ys, std::size_t present) {
  if (xs != ys || xs != present) {
    throw Error("length-mismatch", "xs, ys and present must have equal length");
  }
}

}  // namespace

PairedSample PairedSample::from_real(std::vector<double> xs, std::vector<double> ys) {
  std::vector<std::uint8_t> present(xs.size(), 1);
  return from_real(std::move(xs), std::move(ys), std::move(present));
}

PairedSample PairedSample::from_real(std::vector<double> xs, std::vector<double> ys,
                                     std::vector<std::uint8_t> present) {
  check_lengths(xs.size(), ys.size(), present.size());
  PairedSample sample;
  sample.xs = std::move(xs);
  sample.ys = std::move(ys);
  sample.present = std::move(present);
  sample.n = count_present(sample.present);
  return sample;
}

PairedSample PairedSample::from_categorical(const std::vector<std::string>& xs,
                                            const std::vector<std::string>& ys) {
  if (xs.size() != ys.size()) throw Error("length-mismatch");
  PairedSample sample;
  sample.x_kind = VariableKind::categorical;
  sample.y_kind = VariableKind::categorical;
  sample.xs.reserve(xs.size());
  sample.ys.reserve(ys.size());
  sample.present.assign(xs.size(), 1);
  std::unordered_map<std::string, std::size_t> x_codes, y_codes;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto [xit, xnew] = x_codes.try_emplace(xs[k], x_codes.size());
    if (xnew) sample.x_labels.push_back(xs[k]);
    auto [yit, ynew] = y_codes.try_emplace(ys[k], y_codes.size());
    if (ynew) sample.y_labels.push_back(ys[k]);
    sample.xs.push_back(static_cast<double>(xit->second));
    sample.ys.push_back(static_cast<double>(yit->second));
  }
  sample.n = xs.size();
  return sample;
}

PairedSample PairedSample::from_codes(std::vector<double> x_codes, std::vector<double> y_codes) {
  if (x_codes.size() != y_codes.size()) throw Error("length-mismatch");
  PairedSample sample;
  sample.x_kind = VariableKind::categorical;
  sample.y_kind = VariableKind::categorical;
  sample.xs = std::move(x_codes);
  sample.ys = std::move(y_codes);
  sample.present.assign(sample.xs.size(), 1);
  sample.n = sample.xs.size();
  return sample;
}

PairedSample PairedSample::compact() const {
  if (n == present.size()) return *this;
  PairedSample out;
  out.x_kind = x_kind;
  out.y_kind = y_kind;
  out.x_labels = x_labels;
  out.y_labels = y_labels;
  out.xs.reserve(n);
  out.ys.reserve(n);
  for (std::size_t k = 0; k < present.size(); ++k) {
    if (!present[k]) continue;
    out.xs.push_back(xs[k]);
    out.ys.push_back(ys[k]);
  }
  out.present.assign(out.xs.size(), 1);
  out.n = out.xs.size();
  return out;
}

ContingencyTable ContingencyTable::from_counts(
    const std::vector<std::vector<std::int64_t>>& counts) {
  if (counts.empty() || counts.front().empty()) {
    throw Error("empty-sample", "contingency table needs at least one cell");
  }
  const std::size_t raw_cols = counts.front().size();
  for (const auto& row : counts) {
    if (row.size() != raw_cols) throw Error("length-mismatch", "ragged count matrix");
    for (const auto cell : row) {
      if (cell < 0) throw Error("negative-count");
    }
  }

  std::vector<std::int64_t> row_sums(counts.size(), 0), col_sums(raw_cols, 0);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (std::size_t j = 0; j < raw_cols; ++j) {
      row_sums[i] += counts[i][j];
      col_sums[j] += counts[i][j];
      total += counts[i][j];
    }
  }
  if (total == 0) throw Error("empty-sample", "all counts are zero");

  ContingencyTable table;
  std::vector<std::size_t> keep_rows, keep_cols;
  for (std::size_t i = 0; i < counts.size(); ++i)
    if (row_sums[i] > 0) keep_rows.push_back(i);
  for (std::size_t j = 0; j < raw_cols; ++j)
    if (col_sums[j] > 0) keep_cols.push_back(j);

  table.rows_ = keep_rows.size();
  table.cols_ = keep_cols.size();
  table.counts_.resize(table.rows_ * table.cols_);
  table.row_marginals_.resize(table.rows_);
  table.col_marginals_.resize(table.cols_);
  table.n_ = total;
  for (std::size_t i = 0; i < table.rows_; ++i) {
    table.row_marginals_[i] = row_sums[keep_rows[i]];
    for (std::size_t j = 0; j < table.cols_; ++j) {
      table.counts_[i * table.cols_ + j] = counts[keep_rows[i]][keep_cols[j]];
    }
  }
  for (std::size_t j = 0; j < table.cols_; ++j) table.col_marginals_[j] = col_sums[keep_cols[j]];
  return table;
}

ContingencyTable build_contingency(const PairedSample& sample) {
  if (sample.n == 0) throw Error("empty-sample");
  if (sample.x_kind != VariableKind::categorical || sample.y_kind != VariableKind::categorical) {
    throw Error("type-mismatch", "build_contingency needs categorical pairs");
  }

  // First-appearance order among present pairs.
  std::unordered_map<std::int64_t, std::size_t> row_of, col_of;
  std::vector<std::int64_t> row_code, col_code;
  for (std::size_t k = 0; k < sample.present.size(); ++k) {
    if (!sample.present[k]) continue;
    const auto x = static_cast<std::int64_t>(sample.xs[k]);
    const auto y = static_cast<std::int64_t>(sample.ys[k]);
    if (row_of.try_emplace(x, row_of.size()).second) row_code.push_back(x);
    if (col_of.try_emplace(y, col_of.size()).second) col_code.push_back(y);
  }

  std::vector<std::vector<std::int64_t>> counts(row_code.size(),
                                                std::vector<std::int64_t>(col_code.size(), 0));
  for (std::size_t k = 0; k < sample.present.size(); ++k) {
    if (!sample.present[k]) continue;
    const auto i = row_of.at(static_cast<std::int64_t>(sample.xs[k]));
    const auto j = col_of.at(static_cast<std::int64_t>(sample.ys[k]));
    ++counts[i][j];
  }

  ContingencyTable table = ContingencyTable::from_counts(counts);
  const auto label_for = [](const std::vector<std::string>& labels, std::int64_t code) {
    if (code >= 0 && static_cast<std::size_t>(code) < labels.size())
      return labels[static_cast<std::size_t>(code)];
    return std::to_string(code);
  };
  for (const auto code : row_code) table.row_labels.push_back(label_for(sample.x_labels, code));
  for (const auto code : col_code) table.col_labels.push_back(label_for(sample.y_labels, code));
  return table;
}

}  // namespace depadjust
