#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dcglearn/simulation.hpp"

namespace dcglearn {

// Fixed column order:
// seed,n_train_pairs,noise_pairs,noise_grades,model,pair_mode,chosen_c,precision,similarity
extern const char* const kResultCsvHeader;

std::string to_csv(const std::vector<ResultRow>& rows);
void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);

// Parses a result CSV produced by write_csv; validates the header.
std::vector<ResultRow> read_result_csv(std::istream& in);
std::vector<ResultRow> read_result_csv_file(const std::string& path);

}  // namespace dcglearn
