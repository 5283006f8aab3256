#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "depadjust/sample.hpp"

namespace depadjust {

enum class RelationShape { linear, quadratic, cubic, fourth_root, independent };

struct RelationSpec {
  RelationShape shape = RelationShape::linear;
  std::size_t n = 0;
  double noise_fraction = 0.0;  // fraction of points whose Y is replaced
  std::uint64_t seed = 0;
};

// X uniform on [0,1]; Y = f(X) mapped into [0,1]; then exactly
// round(noise_fraction * n) points, chosen uniformly without replacement,
// get an independent uniform Y. Bitwise deterministic given the spec.
PairedSample gen_relationship(const RelationSpec& spec);

// Independent categorical pair, both sides uniform over their categories.
PairedSample gen_categorical_independent(std::size_t n, std::size_t x_categories,
                                         std::size_t y_categories, std::uint64_t seed);

// One independent sample per requested size; sample i draws from substream i
// of the base seed.
std::vector<PairedSample> gen_missingness_suite(const std::vector<std::size_t>& n_values,
                                                RelationShape shape, double noise_fraction,
                                                std::uint64_t seed);

RelationShape relation_shape_from_name(const std::string& name);
const char* relation_shape_name(RelationShape shape);

}  // namespace depadjust
