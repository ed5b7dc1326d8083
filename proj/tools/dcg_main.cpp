#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcglearn/coherence.hpp"
#include "dcglearn/config.hpp"
#include "dcglearn/csv.hpp"
#include "dcglearn/errors.hpp"
#include "dcglearn/factorization.hpp"
#include "dcglearn/plot.hpp"
#include "dcglearn/ranking.hpp"
#include "dcglearn/simulation.hpp"

namespace {

using namespace dcglearn;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<double> parse_reals(const std::string& flag, const std::string& s) {
  std::vector<double> out;
  for (const std::string& item : split_commas(s)) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError(flag + ": expected a number, got '" + item + "'");
    }
  }
  return out;
}

std::vector<int> parse_ints(const std::string& flag, const std::string& s) {
  std::vector<int> out;
  for (const std::string& item : split_commas(s)) {
    try {
      std::size_t pos = 0;
      out.push_back(static_cast<int>(std::stol(item, &pos)));
      if (pos != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw ConfigError(flag + ": expected an integer, got '" + item + "'");
    }
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ostringstream text;
  if (path == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open input file: " + path);
    text << in.rdbuf();
  }
  return text.str();
}

// Config keys exposed one-to-one as simulate flags; a flag set on the
// command line wins over the same key in --config.
struct KeyFlag {
  const char* key;
  const char* flag;
  const char* help;
};

constexpr KeyFlag kKeyFlags[] = {
    {"setting", "--setting", "ground-truth family: Data1 (G_l = l) or Data2 (G_l = 2^l - 1)"},
    {"positions", "--positions", "ranking depth K"},
    {"levels", "--levels", "number of grade levels L"},
    {"log_base", "--log-base", "discount log base ('e' = natural)"},
    {"base_list", "--base-list", "comma-separated grades of the fixed document set"},
    {"train_pairs", "--train-pairs", "comma-separated training sizes to sweep"},
    {"test_pairs", "--test-pairs", "test pairs per task"},
    {"validation_pairs", "--validation-pairs", "validation pairs for C selection"},
    {"noise_pairs", "--noise-pairs", "training preference labels to flip"},
    {"noise_grades", "--noise-grades", "training grade slots to corrupt"},
    {"pair_mode", "--pair-mode", "general, optimalSameList or optimalDifferentLists"},
    {"model", "--model", "base, hammingMargin or gradeFree"},
    {"seeds", "--seeds", "comma-separated seeds, one task series each"},
    {"c_grid", "--c-grid", "C values searched on the validation set under noise"},
    {"c", "--c", "slack trade-off C when no grid search runs"},
    {"tolerance", "--tolerance", "relative objective-decrease stopping threshold"},
    {"max_iterations", "--max-iterations", "iteration budget before the solver gives up"},
    {"threads", "--threads", "worker threads (0 = all cores)"},
};

struct SimulateArgs {
  std::string config_path;
  std::string output = "-";
  bool print_config = false;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
};

int run_simulate(const SimulateArgs& a) {
  ExperimentConfig cfg;
  if (!a.config_path.empty()) cfg = load_config_file(a.config_path);
  for (const KeyFlag& kf : kKeyFlags) {
    const auto it = a.options.find(kf.key);
    if (it != a.options.end() && it->second->count() > 0)
      apply_config_entry(cfg, kf.key, a.values.at(kf.key));
  }
  if (a.print_config) {
    std::cout << format_config(cfg);
    return 0;
  }
  const std::vector<ResultRow> rows = run_experiment(cfg);
  write_text(a.output, to_csv(rows));
  return 0;
}

struct CoherenceArgs {
  std::string grades;
  std::string gains;
  std::string gains_b;
  std::string discounts;
  double exponent = 0.0;
  double max_exponent = 8.0;
  int depth = 0;
  int trials = 100;
  int items = 6;
  std::uint64_t seed = 1;
};

int run_coherence_check(const CoherenceArgs& a) {
  const LabeledSet set{parse_ints("--grades", a.grades)};
  const GainVector ga{parse_reals("--gains", a.gains)};
  const DiscountVector c{parse_reals("--discounts", a.discounts)};
  if (a.gains_b.empty() == (a.exponent == 0.0))
    throw ConfigError("give exactly one of --gains-b or --exponent");
  const GainVector gb =
      a.gains_b.empty() ? apply_power_transform(ga, a.exponent) : GainVector{parse_reals("--gains-b", a.gains_b)};
  const int depth = a.depth > 0 ? a.depth : c.positions();

  const CoherenceVerdict v = check_coherence(set, ga, gb, c, depth);
  if (v.coherent) {
    std::cout << "verdict: coherent\n";
  } else {
    std::cout << "verdict: incoherent\n";
    const auto& [pi1, pi2] = *v.witness;
    std::cout << "pi1:";
    for (int d : pi1) std::cout << ' ' << d;
    std::cout << "\npi2:";
    for (int d : pi2) std::cout << ' ' << d;
    std::cout << '\n';
    std::cout << "dcg_a: " << fmt17(v.a_pi1) << ' ' << fmt17(v.a_pi2) << '\n';
    std::cout << "dcg_b: " << fmt17(v.b_pi1) << ' ' << fmt17(v.b_pi2) << '\n';
  }
  std::cout << "note: ranking pairs tied under either parameterization are skipped\n";
  return 0;
}

int run_coherence_exponent(const CoherenceArgs& a) {
  const LabeledSet set{parse_ints("--grades", a.grades)};
  const GainVector g{parse_reals("--gains", a.gains)};
  const DiscountVector c{parse_reals("--discounts", a.discounts)};
  const int depth = a.depth > 0 ? a.depth : c.positions();
  const auto found = find_counterexample_exponent(set, g, c, depth, a.max_exponent);
  if (found)
    std::cout << "exponent: " << fmt17(*found) << '\n';
  else
    std::cout << "exponent: none\n";
  return 0;
}

int run_coherence_binary(const CoherenceArgs& a) {
  const int depth = a.depth > 0 ? a.depth : 4;
  const bool ok = verify_binary_coherence(a.trials, a.items, depth, a.seed);
  if (ok)
    std::cout << "coherent across " << a.trials << " trials (N=" << a.items << ", K=" << depth << ")\n";
  else
    std::cout << "violation found within " << a.trials << " trials (N=" << a.items << ", K=" << depth
              << ")\n";
  return 0;
}

// Input: one line per rank, each line the block's weights best label first.
WeightMatrix parse_weight_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> blocks;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r" || line[0] == '#') continue;
    blocks.push_back(parse_reals("weights", line));
    if (blocks.back().size() != blocks.front().size())
      throw ConfigError("ragged weight rows: expected " + std::to_string(blocks.front().size()) +
                        " values, got " + std::to_string(blocks.back().size()));
  }
  if (blocks.empty()) throw ConfigError("no weight rows found");
  UtilityVector w;
  w.block_size = static_cast<int>(blocks.front().size());
  for (const auto& block : blocks) w.weights.insert(w.weights.end(), block.begin(), block.end());
  return WeightMatrix::from_utility(w);
}

int run_factorize(const std::string& input, const std::string& output) {
  const RankOneFactors f = rank_one_factorize(parse_weight_lines(read_text(input)));
  std::ostringstream out;
  out << "gains_est:";
  for (double g : f.gains_est) out << ' ' << fmt17(g);
  out << "\ndiscounts_est:";
  for (double c : f.discounts_est) out << ' ' << fmt17(c);
  out << "\nsigma1: " << fmt17(f.sigma1) << '\n';
  out << "residual_ratio: " << fmt17(f.residual_ratio) << '\n';
  write_text(output, out.str());
  return 0;
}

int run_plot(const std::string& input, const std::string& output, const std::string& metric,
             const std::string& title) {
  std::istringstream in(read_text(input));
  const std::vector<ResultRow> rows = read_result_csv(in);
  write_text(output, render_svg(rows, metric, title));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DCG utility learning toolkit: simulate preference-learning sweeps, probe "
               "gain/discount coherency, factor learned weights, plot results"};
  app.require_subcommand(1);

  SimulateArgs sim;
  CLI::App* simulate = app.add_subcommand("simulate", "run a sweep and write result rows as CSV");
  simulate->add_option("--config", sim.config_path, "flat key=value config file");
  simulate->add_option("-o,--output", sim.output, "output CSV path ('-' = stdout)");
  simulate->add_flag("--print-config", sim.print_config, "print the effective config instead of running");
  for (const KeyFlag& kf : kKeyFlags)
    sim.options[kf.key] = simulate->add_option(kf.flag, sim.values[kf.key], kf.help);

  CoherenceArgs coh;
  CLI::App* coherence =
      app.add_subcommand("coherence", "compare DCG parameterizations over a ranking universe");
  coherence->require_subcommand(1);
  CLI::App* check = coherence->add_subcommand("check", "exhaustive pairwise comparison of two rankers");
  check->add_option("--grades", coh.grades, "comma-separated document grades")->required();
  check->add_option("--gains", coh.gains, "gain per grade, grade 1 first")->required();
  check->add_option("--discounts", coh.discounts, "discount per rank, rank 1 first")->required();
  check->add_option("--gains-b", coh.gains_b, "second ranker's gains (grade 1 first)");
  check->add_option("--exponent", coh.exponent, "derive the second ranker as gains^exponent");
  check->add_option("--depth", coh.depth, "ranking depth (default: all discount positions)");
  CLI::App* exponent = coherence->add_subcommand(
      "exponent", "smallest power-transform exponent that breaks coherence, if any");
  exponent->add_option("--grades", coh.grades, "comma-separated document grades")->required();
  exponent->add_option("--gains", coh.gains, "gain per grade, grade 1 first")->required();
  exponent->add_option("--discounts", coh.discounts, "discount per rank, rank 1 first")->required();
  exponent->add_option("--max-exponent", coh.max_exponent, "largest exponent scanned (step 0.25)");
  exponent->add_option("--depth", coh.depth, "ranking depth (default: all discount positions)");
  CLI::App* binary =
      coherence->add_subcommand("binary", "randomized coherence check over two-level gain vectors");
  binary->add_option("--trials", coh.trials, "random instances to draw");
  binary->add_option("--items", coh.items, "documents per instance");
  binary->add_option("--depth", coh.depth, "ranking depth (default 4)");
  binary->add_option("--seed", coh.seed, "RNG seed");

  std::string fact_input;
  std::string fact_output = "-";
  CLI::App* factorize =
      app.add_subcommand("factorize", "rank-1 factor a learned weight vector into gains and discounts");
  factorize
      ->add_option("input", fact_input,
                   "weight file: one line per rank, comma-separated block weights best label first "
                   "('-' = stdin)")
      ->required();
  factorize->add_option("-o,--output", fact_output, "output path ('-' = stdout)");

  std::string plot_input;
  std::string plot_output = "-";
  std::string plot_metric = "precision";
  std::string plot_title;
  CLI::App* plot = app.add_subcommand("plot", "render a result CSV as an SVG line chart");
  plot->add_option("input", plot_input, "result CSV produced by simulate ('-' = stdin)")->required();
  plot->add_option("-o,--output", plot_output, "output SVG path ('-' = stdout)");
  plot->add_option("--metric", plot_metric, "precision or similarity");
  plot->add_option("--title", plot_title, "chart title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*simulate) return run_simulate(sim);
    if (*check) return run_coherence_check(coh);
    if (*exponent) return run_coherence_exponent(coh);
    if (*binary) return run_coherence_binary(coh);
    if (*factorize) return run_factorize(fact_input, fact_output);
    if (*plot) return run_plot(plot_input, plot_output, plot_metric, plot_title);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
