#include "depadjust/synth.hpp"

#include <algorithm>
#include <cmath>

#include "depadjust/error.hpp"
#include "depadjust/rng.hpp"

namespace depadjust {
namespace {

double shape_function(RelationShape shape, double x) {
  switch (shape) {
    case RelationShape::linear: return x;
    case RelationShape::quadratic: return (2.0 * x - 1.0) * (2.0 * x - 1.0);
    case RelationShape::cubic: {
      const double t = 2.0 * x - 1.0;
      return (t * t * t + 1.0) / 2.0;
    }
    case RelationShape::fourth_root: return std::pow(x, 0.25);
    case RelationShape::independent: return 0.0;  // unused, Y drawn directly
  }
  throw Error("bad-shape");
}

}  // namespace

PairedSample gen_relationship(const RelationSpec& spec) {
  if (spec.n < 4) throw Error("sample-too-small", "gen_relationship needs n >= 4");
  if (!(spec.noise_fraction >= 0.0 && spec.noise_fraction <= 1.0)) {
    throw Error("bad-noise-fraction");
  }
  Rng rng(spec.seed);
  std::vector<double> xs(spec.n), ys(spec.n);
  for (std::size_t k = 0; k < spec.n; ++k) xs[k] = rng.next_unit();
  if (spec.shape == RelationShape::independent) {
    for (std::size_t k = 0; k < spec.n; ++k) ys[k] = rng.next_unit();
  } else {
    for (std::size_t k = 0; k < spec.n; ++k) ys[k] = shape_function(spec.shape, xs[k]);
  }

  const auto replaced = static_cast<std::size_t>(
      std::llround(spec.noise_fraction * static_cast<double>(spec.n)));
  if (replaced > 0) {
    auto picks = rng.sample_without_replacement(spec.n, replaced);
    std::sort(picks.begin(), picks.end());
    for (const auto k : picks) ys[k] = rng.next_unit();
  }
  return PairedSample::from_real(std::move(xs), std::move(ys));
}

PairedSample gen_categorical_independent(std::size_t n, std::size_t x_categories,
                                         std::size_t y_categories, std::uint64_t seed) {
  if (n < 2) throw Error("sample-too-small", "need n >= 2");
  if (x_categories < 1 || y_categories < 1) throw Error("bad-category-count");
  Rng rng(seed);
  std::vector<double> xs(n), ys(n);
  for (std::size_t k = 0; k < n; ++k) {
    xs[k] = static_cast<double>(rng.next_below(x_categories));
  }
  for (std::size_t k = 0; k < n; ++k) {
    ys[k] = static_cast<double>(rng.next_below(y_categories));
  }
  return PairedSample::from_codes(std::move(xs), std::move(ys));
}

std::vector<PairedSample> gen_missingness_suite(const std::vector<std::size_t>& n_values,
                                                RelationShape shape, double noise_fraction,
                                                std::uint64_t seed) {
  std::vector<PairedSample> samples;
  samples.reserve(n_values.size());
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    RelationSpec spec;
    spec.shape = shape;
    spec.n = n_values[i];
    spec.noise_fraction = noise_fraction;
    spec.seed = Rng::substream_seed(seed, i);
    samples.push_back(gen_relationship(spec));
  }
  return samples;
}

RelationShape relation_shape_from_name(const std::string& name) {
  if (name == "linear") return RelationShape::linear;
  if (name == "quadratic") return RelationShape::quadratic;
  if (name == "cubic") return RelationShape::cubic;
  if (name == "fourth_root") return RelationShape::fourth_root;
  if (name == "independent") return RelationShape::independent;
  throw Error("bad-shape", name);
}

const char* relation_shape_name(RelationShape shape) {
  switch (shape) {
    case RelationShape::linear: return "linear";
    case RelationShape::quadratic: return "quadratic";
    case RelationShape::cubic: return "cubic";
    case RelationShape::fourth_root: return "fourth_root";
    case RelationShape::independent: return "independent";
  }
  return "unknown";
}

}  // namespace depadjust
