#include "dcglearn/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dcglearn {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : value) {
    if (ch == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(trim(cur));
  return out;
}

long parse_long(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + s + "'");
  }
}

double parse_real(const std::string& key, const std::string& s) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + s + "'");
  }
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const std::string& item : split_list(value)) out.push_back(static_cast<int>(parse_long(key, item)));
  return out;
}

std::vector<double> parse_real_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) out.push_back(parse_real(key, item));
  return out;
}

template <typename Fn>
auto lift(const std::string& key, const std::string& value, Fn fn) {
  try {
    return fn(value);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "setting") {
    cfg.truth.setting = lift(key, value, [](const std::string& v) { return data_setting_from_string(v); });
  } else if (key == "positions") {
    cfg.truth.positions = static_cast<int>(parse_long(key, value));
  } else if (key == "levels") {
    cfg.truth.levels = static_cast<int>(parse_long(key, value));
  } else if (key == "log_base") {
    cfg.truth.log_base = (value == "e") ? 0.0 : parse_real(key, value);
  } else if (key == "base_list") {
    cfg.base_list = parse_int_list(key, value);
  } else if (key == "train_pairs") {
    cfg.train_sizes = parse_int_list(key, value);
  } else if (key == "test_pairs") {
    cfg.test_pairs = static_cast<int>(parse_long(key, value));
  } else if (key == "validation_pairs") {
    cfg.validation_pairs = static_cast<int>(parse_long(key, value));
  } else if (key == "noise_pairs") {
    cfg.noise.pair_flips = static_cast<int>(parse_long(key, value));
  } else if (key == "noise_grades") {
    cfg.noise.grade_flips = static_cast<int>(parse_long(key, value));
  } else if (key == "pair_mode") {
    cfg.pair_mode = lift(key, value, [](const std::string& v) { return pair_mode_from_string(v); });
  } else if (key == "model") {
    cfg.model = lift(key, value, [](const std::string& v) { return model_kind_from_string(v); });
  } else if (key == "seeds") {
    cfg.seeds.clear();
    for (int s : parse_int_list(key, value)) {
      if (s < 0) throw ConfigError("seeds: must be non-negative, got " + std::to_string(s));
      cfg.seeds.push_back(static_cast<std::uint64_t>(s));
    }
  } else if (key == "c_grid") {
    cfg.c_grid = parse_real_list(key, value);
  } else if (key == "c") {
    cfg.c = parse_real(key, value);
  } else if (key == "tolerance") {
    cfg.tolerance = parse_real(key, value);
  } else if (key == "max_iterations") {
    cfg.max_iterations = static_cast<int>(parse_long(key, value));
  } else if (key == "threads") {
    cfg.threads = static_cast<int>(parse_long(key, value));
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

ExperimentConfig parse_config(const std::string& text, const ExperimentConfig& base) {
  ExperimentConfig cfg = base;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    const std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(line_no) + ": empty key");
    apply_config_entry(cfg, key, value);
  }
  return cfg;
}

ExperimentConfig load_config_file(const std::string& path, const ExperimentConfig& base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), base);
}

std::string format_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "setting = " << to_string(cfg.truth.setting) << '\n';
  out << "positions = " << cfg.truth.positions << '\n';
  out << "levels = " << cfg.truth.levels << '\n';
  out << "log_base = " << (cfg.truth.log_base == 0.0 ? std::string("e") : format_real(cfg.truth.log_base))
      << '\n';
  out << "base_list = " << join_ints(cfg.base_list) << '\n';
  out << "train_pairs = " << join_ints(cfg.train_sizes) << '\n';
  out << "test_pairs = " << cfg.test_pairs << '\n';
  out << "validation_pairs = " << cfg.validation_pairs << '\n';
  out << "noise_pairs = " << cfg.noise.pair_flips << '\n';
  out << "noise_grades = " << cfg.noise.grade_flips << '\n';
  out << "pair_mode = " << to_string(cfg.pair_mode) << '\n';
  out << "model = " << to_string(cfg.model) << '\n';
  out << "seeds = ";
  for (std::size_t i = 0; i < cfg.seeds.size(); ++i) {
    if (i) out << ',';
    out << cfg.seeds[i];
  }
  out << '\n';
  out << "c_grid = ";
  for (std::size_t i = 0; i < cfg.c_grid.size(); ++i) {
    if (i) out << ',';
    out << format_real(cfg.c_grid[i]);
  }
  out << '\n';
  out << "c = " << format_real(cfg.c) << '\n';
  out << "tolerance = " << format_real(cfg.tolerance) << '\n';
  out << "max_iterations = " << cfg.max_iterations << '\n';
  out << "threads = " << cfg.threads << '\n';
  return out.str();
}

}  // namespace dcglearn
