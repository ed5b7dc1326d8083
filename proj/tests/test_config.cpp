#include <cstdio>
#include <fstream>
#include <sstream>

#include "dcglearn/config.hpp"
#include "dcglearn/csv.hpp"
#include "doctest.h"

using namespace dcglearn;

TEST_CASE("a config file sets every field it names") {
  const std::string text =
      "# harness settings\n"
      "setting = Data2\n"
      "levels = 4\n"
      "positions = 6\n"
      "log_base = e\n"
      "base_list = 4,4,3,3,2,1\n"
      "train_pairs = 10, 20, 30\n"
      "test_pairs = 111\n"
      "validation_pairs = 22\n"
      "noise_pairs = 3\n"
      "noise_grades = 7\n"
      "pair_mode = optimalDifferentLists\n"
      "model = hammingMargin\n"
      "seeds = 5,6,7\n"
      "c_grid = 0.5, 2\n"
      "c = 0.25\n"
      "tolerance = 1e-8\n"
      "max_iterations = 1234\n"
      "threads = 2   # trailing comment\n";
  const ExperimentConfig cfg = parse_config(text);
  CHECK(cfg.truth.setting == DataSetting::data2);
  CHECK(cfg.truth.levels == 4);
  CHECK(cfg.truth.positions == 6);
  CHECK(cfg.truth.log_base == 0.0);
  CHECK(cfg.base_list == std::vector<int>{4, 4, 3, 3, 2, 1});
  CHECK(cfg.train_sizes == std::vector<int>{10, 20, 30});
  CHECK(cfg.test_pairs == 111);
  CHECK(cfg.validation_pairs == 22);
  CHECK(cfg.noise.pair_flips == 3);
  CHECK(cfg.noise.grade_flips == 7);
  CHECK(cfg.pair_mode == PairMode::optimal_different_lists);
  CHECK(cfg.model == ModelKind::hamming_margin);
  CHECK(cfg.seeds == std::vector<std::uint64_t>{5, 6, 7});
  CHECK(cfg.c_grid == std::vector<double>{0.5, 2.0});
  CHECK(cfg.c == 0.25);
  CHECK(cfg.tolerance == 1e-8);
  CHECK(cfg.max_iterations == 1234);
  CHECK(cfg.threads == 2);
}

TEST_CASE("untouched keys keep their defaults") {
  const ExperimentConfig cfg = parse_config("levels = 3\n");
  CHECK(cfg.truth.levels == 3);
  CHECK(cfg.truth.positions == 10);
  CHECK(cfg.test_pairs == 1000);
  CHECK(cfg.seeds.size() == 10);
}

TEST_CASE("later assignments and per-entry application override") {
  ExperimentConfig cfg = parse_config("levels = 3\nlevels = 4\n");
  CHECK(cfg.truth.levels == 4);
  apply_config_entry(cfg, "model", "gradeFree");
  CHECK(cfg.model == ModelKind::grade_free);
  apply_config_entry(cfg, "log_base", "2.0");
  CHECK(cfg.truth.log_base == 2.0);
}

TEST_CASE("malformed config text is reported with context") {
  CHECK_THROWS_WITH_AS(parse_config("banana = 3\n"), doctest::Contains("unknown config key"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("levels\n"), doctest::Contains("line 1"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("levels = abc\n"), doctest::Contains("expected an integer"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("c = 1..5\n"), doctest::Contains("expected a number"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("= 4\n"), doctest::Contains("empty key"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("seeds = -1\n"), doctest::Contains("non-negative"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("model = fancy\n"), doctest::Contains("unknown model"),
                       ConfigError);
}

TEST_CASE("formatting and reparsing is the identity") {
  ExperimentConfig cfg;
  cfg.truth.setting = DataSetting::data2;
  cfg.truth.log_base = 2.0;
  cfg.noise.grade_flips = 4;
  cfg.c_grid = {0.25, 4.0};
  cfg.seeds = {11, 12};
  const std::string text = format_config(cfg);
  const ExperimentConfig back = parse_config(text);
  CHECK(format_config(back) == text);
  CHECK(back.truth.setting == DataSetting::data2);
  CHECK(back.truth.log_base == 2.0);
  CHECK(back.noise.grade_flips == 4);
}

TEST_CASE("missing config files raise a config error") {
  CHECK_THROWS_AS(load_config_file("/nonexistent/path/experiment.cfg"), ConfigError);
}

TEST_CASE("result rows survive a csv round trip") {
  std::vector<ResultRow> rows(2);
  rows[0].seed = 3;
  rows[0].train_pairs = 40;
  rows[0].pair_flips = 5;
  rows[0].grade_flips = 0;
  rows[0].model = ModelKind::hamming_margin;
  rows[0].pair_mode = PairMode::optimal_same_list;
  rows[0].chosen_c = 0.1;
  rows[0].precision = 0.8725;
  rows[0].similarity = 0.91234567890123457;
  rows[1].seed = 4;
  rows[1].train_pairs = 200;
  rows[1].model = ModelKind::grade_free;
  rows[1].precision = 1.0 / 3.0;
  rows[1].similarity = -0.25;

  const std::string text = to_csv(rows);
  CHECK(text.rfind("seed,n_train_pairs,noise_pairs,noise_grades,model,pair_mode,"
                   "chosen_c,precision,similarity\n",
                   0) == 0);
  std::istringstream in(text);
  const auto back = read_result_csv(in);
  REQUIRE(back.size() == 2);
  CHECK(back[0].seed == 3);
  CHECK(back[0].model == ModelKind::hamming_margin);
  CHECK(back[0].pair_mode == PairMode::optimal_same_list);
  CHECK(back[0].chosen_c == 0.1);
  CHECK(back[0].precision == 0.8725);
  CHECK(back[1].precision == rows[1].precision);  // %.17g keeps every bit
  CHECK(back[1].similarity == -0.25);

  std::istringstream bad_header("a,b,c\n1,2,3\n");
  CHECK_THROWS_AS(read_result_csv(bad_header), std::invalid_argument);
  std::istringstream short_row(std::string(kResultCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(read_result_csv(short_row), std::invalid_argument);
  std::istringstream empty("");
  CHECK_THROWS_AS(read_result_csv(empty), std::invalid_argument);
}
