#include "dcglearn/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace dcglearn {
namespace {

std::string format_double(double v, const char* fmt) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s, const std::string& column) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad numeric value '" + s + "' in column " + column);
  }
}

int parse_int(const std::string& s, const std::string& column) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("trailing characters");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer value '" + s + "' in column " + column);
  }
}

}  // namespace

const char* const kResultCsvHeader =
    "seed,n_train_pairs,noise_pairs,noise_grades,model,pair_mode,chosen_c,precision,similarity";

std::string to_csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << kResultCsvHeader << '\n';
  for (const ResultRow& r : rows) {
    out << r.seed << ',' << r.train_pairs << ',' << r.pair_flips << ',' << r.grade_flips << ','
        << to_string(r.model) << ',' << to_string(r.pair_mode) << ','
        << format_double(r.chosen_c, "%g") << ',' << format_double(r.precision, "%.17g") << ','
        << format_double(r.similarity, "%.17g") << '\n';
  }
}

std::vector<ResultRow> read_result_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty result file");
  if (split_fields(line) != split_fields(kResultCsvHeader))
    throw std::invalid_argument("unexpected result header: " + line);

  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split_fields(line);
    if (f.size() != 9)
      throw std::invalid_argument("expected 9 fields, got " + std::to_string(f.size()) + ": " + line);
    ResultRow r;
    r.seed = static_cast<std::uint64_t>(parse_int(f[0], "seed"));
    r.train_pairs = parse_int(f[1], "n_train_pairs");
    r.pair_flips = parse_int(f[2], "noise_pairs");
    r.grade_flips = parse_int(f[3], "noise_grades");
    r.model = model_kind_from_string(f[4]);
    r.pair_mode = pair_mode_from_string(f[5]);
    r.chosen_c = parse_double(f[6], "chosen_c");
    r.precision = parse_double(f[7], "precision");
    r.similarity = parse_double(f[8], "similarity");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<ResultRow> read_result_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open result file: " + path);
  return read_result_csv(in);
}

}  // namespace dcglearn
