#include "dcglearn/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dcglearn/encoding.hpp"
#include "dcglearn/errors.hpp"

namespace dcglearn {

namespace {

double gain_value(DataSetting setting, int grade) {
  return setting == DataSetting::data1 ? static_cast<double>(grade)
                                       : std::pow(2.0, grade) - 1.0;
}

double position_log(const GroundTruthSpec& spec, int position) {
  const double x = std::log(static_cast<double>(position + 1));
  return spec.log_base > 0.0 ? x / std::log(spec.log_base) : x;
}

Permutation identity_permutation(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace

std::string to_string(DataSetting s) { return s == DataSetting::data1 ? "Data1" : "Data2"; }

std::string to_string(PairMode m) {
  switch (m) {
    case PairMode::general: return "general";
    case PairMode::optimal_same_list: return "optimalSameList";
    default: return "optimalDifferentLists";
  }
}

std::string to_string(ModelKind m) {
  switch (m) {
    case ModelKind::base: return "base";
    case ModelKind::hamming_margin: return "hammingMargin";
    default: return "gradeFree";
  }
}

DataSetting data_setting_from_string(const std::string& s) {
  if (s == "Data1") return DataSetting::data1;
  if (s == "Data2") return DataSetting::data2;
  throw std::invalid_argument("unknown data setting: " + s);
}

PairMode pair_mode_from_string(const std::string& s) {
  if (s == "general") return PairMode::general;
  if (s == "optimalSameList") return PairMode::optimal_same_list;
  if (s == "optimalDifferentLists") return PairMode::optimal_different_lists;
  throw std::invalid_argument("unknown pair mode: " + s);
}

ModelKind model_kind_from_string(const std::string& s) {
  if (s == "base") return ModelKind::base;
  if (s == "hammingMargin") return ModelKind::hamming_margin;
  if (s == "gradeFree") return ModelKind::grade_free;
  throw std::invalid_argument("unknown model: " + s);
}

UtilityVector make_ground_truth(const GroundTruthSpec& spec) {
  if (spec.positions < 1 || spec.levels < 1) {
    throw std::invalid_argument("positions and levels must be >= 1");
  }
  UtilityVector w;
  w.block_size = spec.levels;
  w.weights.resize(static_cast<std::size_t>(spec.positions) *
                   static_cast<std::size_t>(spec.levels));
  for (int k = 0; k < spec.positions; ++k) {
    const double discount = 1.0 / position_log(spec, k + 1);
    for (int j = 0; j < spec.levels; ++j) {
      w.weights[static_cast<std::size_t>(k * spec.levels + j)] =
          discount * gain_value(spec.setting, spec.levels - j);
    }
  }
  return w;
}

UtilityVector make_grade_free_truth(const GroundTruthSpec& spec, const std::vector<int>& base_list) {
  const int k = spec.positions;
  if (static_cast<int>(base_list.size()) < k) {
    throw std::invalid_argument("base list shorter than the position count");
  }
  UtilityVector w;
  w.block_size = k;
  w.weights.resize(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int rank = 0; rank < k; ++rank) {
    const double discount = 1.0 / position_log(spec, rank + 1);
    for (int doc = 0; doc < k; ++doc) {
      w.weights[static_cast<std::size_t>(rank * k + doc)] =
          discount * gain_value(spec.setting, base_list[static_cast<std::size_t>(doc)]);
    }
  }
  return w;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.truth.levels < 2) throw std::invalid_argument("levels must be >= 2");
  if (cfg.truth.positions < 1) throw std::invalid_argument("positions must be >= 1");
  if (static_cast<int>(cfg.base_list.size()) < cfg.truth.positions) {
    throw std::invalid_argument("base list must cover every position");
  }
  for (int grade : cfg.base_list) {
    if (grade < 1 || grade > cfg.truth.levels) {
      throw std::invalid_argument("base list grade outside {1..levels}");
    }
  }
  if (cfg.train_sizes.empty()) throw std::invalid_argument("no training sizes");
  int min_train = cfg.train_sizes.front();
  for (int n : cfg.train_sizes) {
    if (n < 0) throw std::invalid_argument("training size must be >= 0");
    min_train = std::min(min_train, n);
  }
  if (cfg.noise.pair_flips < 0 || cfg.noise.grade_flips < 0) {
    throw std::invalid_argument("noise counts must be >= 0");
  }
  if (cfg.noise.pair_flips > min_train) {
    throw std::invalid_argument("more pair flips than training pairs");
  }
  if (cfg.noise.grade_flips > 2 * min_train * cfg.truth.positions) {
    throw std::invalid_argument("more grade flips than training document slots");
  }
  if (cfg.test_pairs < 1) throw std::invalid_argument("need at least one test pair");
  if (cfg.validation_pairs < 1) throw std::invalid_argument("need at least one validation pair");
  if (cfg.seeds.empty()) throw std::invalid_argument("no seeds");
  if (cfg.c_grid.empty()) throw std::invalid_argument("empty C grid");
  for (double c : cfg.c_grid) {
    if (!(c > 0.0)) throw std::invalid_argument("C grid values must be positive");
  }
  if (!(cfg.c > 0.0)) throw std::invalid_argument("C must be positive");
  if (!(cfg.tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (cfg.max_iterations < 1) throw std::invalid_argument("max iterations must be >= 1");
  if (cfg.threads < 0) throw std::invalid_argument("threads must be >= 0");
  if (cfg.truth.log_base != 0.0 && !(cfg.truth.log_base > 1.0)) {
    throw std::invalid_argument("log base must be > 1 (or 0 for natural)");
  }
  if (cfg.model == ModelKind::grade_free && cfg.pair_mode != PairMode::general) {
    throw std::invalid_argument("grade-free fitting uses the general pair mode");
  }
}

namespace {

struct Sampler {
  const ExperimentConfig& cfg;
  UtilityVector truth;
  int k;      // scored positions
  int n;      // universe size
  int levels;

  explicit Sampler(const ExperimentConfig& config)
      : cfg(config),
        truth(make_ground_truth(config.truth)),
        k(config.truth.positions),
        n(config.model == ModelKind::grade_free
              ? config.truth.positions
              : static_cast<int>(config.base_list.size())),
        levels(config.truth.levels) {}

  RankedList ranked_from_items(Permutation items) const {
    RankedList list;
    list.grades.reserve(items.size());
    for (int item : items) {
      list.grades.push_back(cfg.base_list[static_cast<std::size_t>(item - 1)]);
    }
    list.items = std::move(items);
    return list;
  }

  RankedList random_list(Rng& rng) const {
    Permutation items = identity_permutation(n);
    rng.shuffle(items);
    return ranked_from_items(std::move(items));
  }

  RankedList optimal_list() const {
    Permutation items = identity_permutation(n);
    std::stable_sort(items.begin(), items.end(), [this](int a, int b) {
      return cfg.base_list[static_cast<std::size_t>(a - 1)] >
             cfg.base_list[static_cast<std::size_t>(b - 1)];
    });
    return ranked_from_items(std::move(items));
  }

  // Fresh grades per rank; a universe of its own, not comparable item-wise
  // with the base list.
  RankedList fresh_grade_list(Rng& rng) const {
    RankedList list;
    list.grades.resize(static_cast<std::size_t>(n));
    for (auto& grade : list.grades) grade = 1 + rng.next_int(levels);
    list.items = identity_permutation(n);
    return list;
  }

  double list_utility(const RankedList& list) const {
    GradeSequence top(list.grades.begin(), list.grades.begin() + k);
    return utility(truth, encode_grades(top, levels));
  }

  LabeledListPair judge(RankedList first, RankedList second, bool shared_universe) const {
    LabeledListPair pair;
    pair.first_wins = list_utility(first) > list_utility(second);
    if (cfg.model == ModelKind::hamming_margin) {
      pair.margin = shared_universe ? static_cast<double>(hamming(first.items, second.items))
                                    : static_cast<double>(k);
    }
    pair.first = std::move(first);
    pair.second = std::move(second);
    return pair;
  }

  LabeledListPair draw_train_pair(Rng& rng) const {
    switch (cfg.pair_mode) {
      case PairMode::general:
        return judge(random_list(rng), random_list(rng), true);
      case PairMode::optimal_same_list:
        return judge(optimal_list(), random_list(rng), true);
      default:
        return judge(optimal_list(), fresh_grade_list(rng), false);
    }
  }

  LabeledListPair draw_test_pair(Rng& rng) const {
    return judge(random_list(rng), random_list(rng), true);
  }
};

}  // namespace

std::vector<PreferencePair> build_preference_pairs(const std::vector<LabeledListPair>& lists,
                                                   const ExperimentConfig& cfg) {
  const int k = cfg.truth.positions;
  std::vector<PreferencePair> out;
  out.reserve(lists.size());
  for (const auto& pair : lists) {
    const RankedList& win = pair.first_wins ? pair.first : pair.second;
    const RankedList& lose = pair.first_wins ? pair.second : pair.first;
    PreferencePair enc;
    if (cfg.model == ModelKind::grade_free) {
      enc.winner = encode_permutation(win.items);
      enc.loser = encode_permutation(lose.items);
    } else {
      enc.winner = encode_grades(GradeSequence(win.grades.begin(), win.grades.begin() + k),
                                 cfg.truth.levels);
      enc.loser = encode_grades(GradeSequence(lose.grades.begin(), lose.grades.begin() + k),
                                cfg.truth.levels);
    }
    enc.margin = pair.margin;
    out.push_back(std::move(enc));
  }
  return out;
}

SampleSet sample_pairs(const ExperimentConfig& cfg, int n_train, Rng& rng) {
  if (n_train < 0) throw std::invalid_argument("negative training size");
  Sampler sampler(cfg);
  SampleSet out;
  out.train.reserve(static_cast<std::size_t>(n_train));
  for (int i = 0; i < n_train; ++i) out.train.push_back(sampler.draw_train_pair(rng));

  std::vector<LabeledListPair> validation;
  validation.reserve(static_cast<std::size_t>(cfg.validation_pairs));
  for (int i = 0; i < cfg.validation_pairs; ++i) validation.push_back(sampler.draw_train_pair(rng));
  out.validation = build_preference_pairs(validation, cfg);

  std::vector<LabeledListPair> test;
  test.reserve(static_cast<std::size_t>(cfg.test_pairs));
  for (int i = 0; i < cfg.test_pairs; ++i) test.push_back(sampler.draw_test_pair(rng));
  out.test = build_preference_pairs(test, cfg);
  return out;
}

std::vector<PreferencePair> inject_pair_noise(std::vector<PreferencePair> pairs, int m, Rng& rng) {
  if (m < 0 || static_cast<std::size_t>(m) > pairs.size()) {
    throw std::invalid_argument("cannot flip more pairs than exist");
  }
  // partial Fisher-Yates over pair indices
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < m; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.next_below(order.size() - static_cast<std::size_t>(i)));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
    auto& p = pairs[order[static_cast<std::size_t>(i)]];
    std::swap(p.winner, p.loser);
  }
  return pairs;
}

std::vector<LabeledListPair> inject_grade_noise(std::vector<LabeledListPair> pairs, int m,
                                                int levels, Rng& rng) {
  const std::size_t slots_per_list = pairs.empty() ? 0 : pairs.front().first.grades.size();
  const std::size_t total = 2 * pairs.size() * slots_per_list;
  if (m < 0 || static_cast<std::size_t>(m) > total) {
    throw std::invalid_argument("cannot corrupt more document slots than exist");
  }
  if (levels < 2) throw std::invalid_argument("levels must be >= 2");
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), 0);
  for (int i = 0; i < m; ++i) {
    const std::size_t j =
        static_cast<std::size_t>(i) +
        static_cast<std::size_t>(rng.next_below(order.size() - static_cast<std::size_t>(i)));
    std::swap(order[static_cast<std::size_t>(i)], order[j]);
    const std::size_t slot = order[static_cast<std::size_t>(i)];
    const std::size_t pair_index = slot / (2 * slots_per_list);
    const std::size_t within = slot % (2 * slots_per_list);
    RankedList& list =
        within < slots_per_list ? pairs[pair_index].first : pairs[pair_index].second;
    int& grade = list.grades[within % slots_per_list];
    int fresh;
    do {
      fresh = 1 + rng.next_int(levels);
    } while (fresh == grade);
    grade = fresh;
  }
  return pairs;
}

namespace {

struct TaskOutcome {
  ResultRow row;
  std::exception_ptr error;
};

ResultRow run_task(const ExperimentConfig& cfg, std::uint64_t seed, std::size_t sweep_index) {
  const int n_train = cfg.train_sizes[sweep_index];
  Rng rng(Rng::mix(seed, sweep_index));
  SampleSet sample = sample_pairs(cfg, n_train, rng);
  if (cfg.noise.grade_flips > 0) {
    sample.train =
        inject_grade_noise(std::move(sample.train), cfg.noise.grade_flips, cfg.truth.levels, rng);
  }
  auto train = build_preference_pairs(sample.train, cfg);
  if (cfg.noise.pair_flips > 0) {
    train = inject_pair_noise(std::move(train), cfg.noise.pair_flips, rng);
  }

  FitConfig fit_cfg;
  fit_cfg.monotone = cfg.model != ModelKind::grade_free;
  fit_cfg.tolerance = cfg.tolerance;
  fit_cfg.max_iterations = cfg.max_iterations;
  fit_cfg.seed = seed;

  const bool noisy = cfg.noise.pair_flips > 0 || cfg.noise.grade_flips > 0;
  double chosen_c = cfg.c;
  if (noisy && cfg.c_grid.size() > 1 && !train.empty()) {
    double best_precision = -1.0;
    for (double candidate : cfg.c_grid) {
      fit_cfg.c = candidate;
      const UtilityVector w = fit(train, fit_cfg);
      const double p = precision(w, sample.validation);
      if (p > best_precision) {
        best_precision = p;
        chosen_c = candidate;
      }
    }
  }
  fit_cfg.c = chosen_c;

  ResultRow row;
  row.seed = seed;
  row.train_pairs = n_train;
  row.pair_flips = cfg.noise.pair_flips;
  row.grade_flips = cfg.noise.grade_flips;
  row.model = cfg.model;
  row.pair_mode = cfg.pair_mode;
  row.chosen_c = chosen_c;

  if (train.empty()) {
    // nothing to fit; the zero vector predicts no preference
    row.precision = 0.0;
    row.similarity = 0.0;
    return row;
  }
  const UtilityVector fitted = fit(train, fit_cfg);
  row.precision = precision(fitted, sample.test);
  const UtilityVector reference = cfg.model == ModelKind::grade_free
                                      ? make_grade_free_truth(cfg.truth, cfg.base_list)
                                      : make_ground_truth(cfg.truth);
  row.similarity = similarity(reference, fitted);
  return row;
}

}  // namespace

std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const std::size_t n_tasks = cfg.seeds.size() * cfg.train_sizes.size();
  std::vector<TaskOutcome> outcomes(n_tasks);

  auto run_one = [&cfg, &outcomes](std::size_t task) {
    const std::uint64_t seed = cfg.seeds[task / cfg.train_sizes.size()];
    const std::size_t sweep_index = task % cfg.train_sizes.size();
    try {
      outcomes[task].row = run_task(cfg, seed, sweep_index);
    } catch (const ConvergenceError& e) {
      outcomes[task].error = std::make_exception_ptr(ConvergenceError(
          std::string(e.what()) + " (seed " + std::to_string(seed) + ", " +
              std::to_string(cfg.train_sizes[sweep_index]) + " training pairs)",
          e.last_objective()));
    } catch (...) {
      outcomes[task].error = std::current_exception();
    }
  };

  unsigned threads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                     : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(n_tasks));
  if (threads <= 1) {
    for (std::size_t t = 0; t < n_tasks; ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&]() {
        for (;;) {
          const std::size_t task = next.fetch_add(1);
          if (task >= n_tasks) return;
          run_one(task);
        }
      });
    }
    for (auto& worker : pool) worker.join();
  }

  for (const auto& outcome : outcomes) {
    if (outcome.error) std::rethrow_exception(outcome.error);
  }
  std::vector<ResultRow> rows;
  rows.reserve(n_tasks);
  for (auto& outcome : outcomes) rows.push_back(outcome.row);
  return rows;
}

}  // namespace dcglearn
