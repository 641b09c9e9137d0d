#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "artinlab/census.hpp"

namespace artinlab {

// Floats are rendered at 12 significant digits; identical inputs yield
// byte-identical output (LF line endings, fixed column order).
std::string format_double(double v);

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(const std::string& s);  // "csv" | "json"

struct NaRangeRow {
  int64_t a = 0;
  uint64_t count = 0;
  double predicted = 0.0;
};

std::string census_csv(const CensusResult& r);
std::string levelsets_csv(const std::vector<LevelSetStat>& rows);
std::string moments_csv(const MomentReport& r);
std::string titchmarsh_csv(const std::vector<TitchmarshResult>& rows);
std::string na_range_csv(const std::vector<NaRangeRow>& rows);

std::string census_json(const CensusResult& r);
std::string levelsets_json(const std::vector<LevelSetStat>& rows);
std::string moments_json(const MomentReport& r);
std::string titchmarsh_json(const std::vector<TitchmarshResult>& rows);
std::string na_range_json(const std::vector<NaRangeRow>& rows);

// Per-run summary: parameters, wall time, exceptional counts per threshold.
std::string census_summary_json(const CensusResult& r, int threads, double wall_seconds);

// I/O failures are surfaced with the path in the message.
void write_text_file(const std::string& path, const std::string& content);

}  // namespace artinlab
