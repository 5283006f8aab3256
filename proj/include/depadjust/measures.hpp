#pragma once

#include "depadjust/sample.hpp"

namespace depadjust {

// Squared Pearson correlation over the present pairs, one-pass accumulation.
// Requires n >= 3 and positive variance in both coordinates.
double pearson_r2(const PairedSample& sample);

// Mutual information of the table in bits; cells with zero count contribute 0.
double mutual_information(const ContingencyTable& table);

// Gini impurity of the column variable minus its weighted impurity
// conditional on the row variable.
double gini_gain(const ContingencyTable& table);

}  // namespace depadjust
