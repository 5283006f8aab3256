#pragma once

#include <cstdint>
#include <cstddef>
#include <string>
#include <vector>

#include "depadjust/dataset.hpp"
#include "depadjust/synth.hpp"

namespace depadjust {

enum class MeasureKind { r2, mic };
enum class AdjustKind { raw, quantification, standardized, ranking_alpha };

// Measure plus adjustment used to score one paired sample. Permutation-based
// nulls (MIC adjustments) draw their seed from the caller.
struct ScoreSpec {
  MeasureKind measure = MeasureKind::r2;
  AdjustKind adjust = AdjustKind::raw;
  double alpha = 0.05;               // ranking_alpha only
  std::size_t permutations = 1000;   // MIC adjustments only

  std::string label() const;
};

double score_sample(const PairedSample& sample, const ScoreSpec& spec, std::uint64_t null_seed);

struct SelectionCandidate {
  RelationShape shape = RelationShape::independent;
  std::size_t n = 0;
  double noise_fraction = 0.0;
  std::string label;
};

struct SelectionTrialConfig {
  std::vector<SelectionCandidate> candidates;
  ScoreSpec score;
  std::size_t trials = 10000;
  std::uint64_t seed = 0;
};

struct RankResult {
  std::vector<std::string> labels;
  std::vector<double> selection_probability;  // sums to 1
  std::vector<double> win_counts;
  std::vector<double> mean_score;
  std::vector<double> mean_score_stderr;
  std::size_t trials = 0;
};

// Per trial: generate every candidate, score, record the argmax (ties broken
// uniformly at random). Candidate i of trial t generates from substream
// (seed -> t -> i); trials are independent and may run in parallel.
RankResult selection_experiment(const SelectionTrialConfig& config, unsigned threads = 0);

// Fraction of trials where Gini gain of a ternary independent feature beats
// a binary independent feature against a binary target; ties count 0.5.
double gini_inflation_experiment(std::size_t n, std::size_t trials, std::uint64_t seed,
                                 unsigned threads = 0);

struct NoiseSweepConfig {
  std::vector<std::pair<RelationShape, std::size_t>> relations;
  std::vector<ScoreSpec> scores;
  std::vector<double> noise_levels;
  std::size_t trials = 2000;
  std::uint64_t seed = 0;
};

struct NoiseSweepCell {
  RelationShape shape;
  std::size_t n;
  double noise;
  std::string score_label;
  double mean;
  double stderr_of_mean;
  std::size_t trials;
};

// Mean score (with standard error) per (relation, noise level, score) cell;
// all scores of a cell are evaluated on the same per-trial samples.
std::vector<NoiseSweepCell> noise_sweep(const NoiseSweepConfig& config, unsigned threads = 0);

struct RankedPair {
  std::string column;
  std::size_t column_index;
  double score;
  std::size_t n_used;
};

// Scores every real column against the target on the rows where both are
// present, skipping pairs below min_n (or whose estimator is undefined), and
// sorts descending; equal scores keep column order. Pair for column j uses
// null-seed substream j.
std::vector<RankedPair> rank_against_target(const Dataset& dataset, const std::string& target,
                                            const ScoreSpec& spec, std::size_t min_n,
                                            std::uint64_t seed);

}  // namespace depadjust
