#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "depadjust/sample.hpp"

namespace depadjust {

// Rectangular column store with explicit missingness. Real columns keep the
// parsed number; categorical columns keep an integer code into `labels`
// (first-appearance order).
struct DataColumn {
  std::string name;
  VariableKind kind = VariableKind::real;
  std::vector<double> values;
  std::vector<std::uint8_t> present;
  std::vector<std::string> labels;
};

struct Dataset {
  std::vector<DataColumn> columns;
  std::size_t n_rows = 0;

  const DataColumn& column(const std::string& name) const;  // throws unknown-column
  std::size_t column_index(const std::string& name) const;
  bool has_column(const std::string& name) const;

  // Pairwise-complete sample of two real columns.
  PairedSample paired_real(const std::string& x, const std::string& y) const;

  // Row subset in the given order.
  Dataset select_rows(const std::vector<std::size_t>& rows) const;
};

struct CsvOptions {
  char delimiter = ',';
  std::vector<std::string> missing_markers = {"", "?", "NA"};
  // Force a column to a kind regardless of inference.
  std::vector<std::pair<std::string, VariableKind>> type_overrides;
};

// Header row required. A column is real iff every non-missing cell parses as
// a number (unless overridden); ragged rows and duplicate headers are errors.
Dataset load_csv(const std::string& path, const CsvOptions& options = CsvOptions{});
Dataset parse_csv(const std::string& text, const CsvOptions& options = CsvOptions{});

}  // namespace depadjust
