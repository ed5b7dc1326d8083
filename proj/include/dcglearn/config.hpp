#pragma once

#include <stdexcept>
#include <string>

#include "dcglearn/simulation.hpp"

namespace dcglearn {

// Anything wrong with a config file or an override value: unknown key,
// unparsable number, malformed line. Distinct from std::invalid_argument so
// the CLI can map it to its own exit code.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Applies one `key=value` assignment to cfg. Keys mirror ExperimentConfig:
//   setting, positions, levels, log_base, base_list, train_pairs,
//   test_pairs, validation_pairs, noise_pairs, noise_grades, pair_mode,
//   model, seeds, c_grid, c, tolerance, max_iterations, threads
// List-valued keys take comma-separated entries; log_base accepts "e".
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Parses flat `key = value` text. '#' starts a comment, blank lines are
// skipped. Later assignments win. Throws ConfigError on any malformed line.
ExperimentConfig parse_config(const std::string& text, const ExperimentConfig& base = {});

ExperimentConfig load_config_file(const std::string& path, const ExperimentConfig& base = {});

// Round-trips an ExperimentConfig back into parseable key=value text.
std::string format_config(const ExperimentConfig& cfg);

}  // namespace dcglearn
