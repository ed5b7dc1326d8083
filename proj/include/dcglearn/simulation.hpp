#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcglearn/evaluation.hpp"
#include "dcglearn/learner.hpp"
#include "dcglearn/ranking.hpp"
#include "dcglearn/rng.hpp"

namespace dcglearn {

// Ground-truth family: gains G_l = l (data1) or 2^l - 1 (data2), discounts
// 1/log(k+1).
enum class DataSetting { data1, data2 };

// How training pairs are drawn: two free permutations, one side pinned to
// the best ordering of the same list, or one side pinned to a best ordering
// while the other list carries freshly drawn grades.
enum class PairMode { general, optimal_same_list, optimal_different_lists };

enum class ModelKind { base, hamming_margin, grade_free };

std::string to_string(DataSetting s);
std::string to_string(PairMode m);
std::string to_string(ModelKind m);
DataSetting data_setting_from_string(const std::string& s);
PairMode pair_mode_from_string(const std::string& s);
ModelKind model_kind_from_string(const std::string& s);

struct GroundTruthSpec {
  DataSetting setting = DataSetting::data1;
  int positions = 10;
  int levels = 5;
  double log_base = 0.0;  // 0 selects the natural log
};

// Block k of the result holds G_l / log(k+1) with the best grade first;
// strictly ordered within every block.
UtilityVector make_ground_truth(const GroundTruthSpec& spec);

struct NoiseSpec {
  int pair_flips = 0;
  int grade_flips = 0;
};

struct ExperimentConfig {
  GroundTruthSpec truth;
  std::vector<int> base_list = {5, 5, 4, 4, 3, 3, 2, 2, 1, 1};
  std::vector<int> train_sizes = {20, 40, 60, 80, 100, 120, 140, 160, 180, 200};
  int test_pairs = 1000;
  int validation_pairs = 200;
  NoiseSpec noise;
  PairMode pair_mode = PairMode::general;
  ModelKind model = ModelKind::base;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> c_grid = {0.01, 0.1, 1.0, 10.0, 100.0};
  double c = 1.0;          // slack trade-off when no grid selection runs
  double tolerance = 1e-10;
  int max_iterations = 50000;
  int threads = 0;  // 0 = hardware concurrency
};

// Throws std::invalid_argument when the configuration breaks an invariant.
void validate(const ExperimentConfig& cfg);

struct ResultRow {
  std::uint64_t seed = 0;
  int train_pairs = 0;
  int pair_flips = 0;
  int grade_flips = 0;
  ModelKind model = ModelKind::base;
  PairMode pair_mode = PairMode::general;
  double chosen_c = 1.0;
  double precision = 0.0;
  double similarity = 0.0;
};

// A ranking list: grades by rank plus the item order that produced them.
struct RankedList {
  GradeSequence grades;
  Permutation items;
};

// A judged pair of lists; winner is the first list iff first_wins.
struct LabeledListPair {
  RankedList first;
  RankedList second;
  bool first_wins = false;
  double margin = 1.0;
};

struct SampleSet {
  std::vector<LabeledListPair> train;
  std::vector<PreferencePair> validation;
  std::vector<PreferencePair> test;
};

// Draws train/validation/test pairs for one sweep point. Train and
// validation follow cfg.pair_mode; test pairs are always free permutations
// of the same universe. All draws are independent (collisions permitted).
SampleSet sample_pairs(const ExperimentConfig& cfg, int n_train, Rng& rng);

// Encodes judged list pairs for the configured model (graded K*L blocks,
// or K*K document blocks for grade-free fitting).
std::vector<PreferencePair> build_preference_pairs(const std::vector<LabeledListPair>& lists,
                                                   const ExperimentConfig& cfg);

// Swaps winner and loser of m distinct pairs chosen uniformly.
std::vector<PreferencePair> inject_pair_noise(std::vector<PreferencePair> pairs, int m, Rng& rng);

// Rewrites the grades of m distinct (list, rank) slots chosen uniformly
// across the whole training set; each corrupted slot gets a uniformly
// drawn different grade. Labels are not regenerated.
std::vector<LabeledListPair> inject_grade_noise(std::vector<LabeledListPair> pairs, int m, int levels,
                                                Rng& rng);

// Utility vector over document blocks that scores a permutation of the
// fixed document set exactly like the graded ground truth scores its grade
// sequence.
UtilityVector make_grade_free_truth(const GroundTruthSpec& spec, const std::vector<int>& base_list);

// One row per (seed, sweep point): sample, optionally select C on the
// validation set, fit, evaluate. Reproducible: each task owns an RNG
// stream derived from (seed, sweep index), independent of scheduling.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg);

}  // namespace dcglearn
