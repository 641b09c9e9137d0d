#include "artinlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace artinlab {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  throw std::invalid_argument("unknown output format: " + s);
}

std::string census_csv(const CensusResult& r) {
  std::string out = "q,num_primitive,max_abs,normalized";
  for (size_t i = 0; i < r.thresholds.size(); ++i) {
    out += ",exceeds_t" + std::to_string(i + 1);
  }
  out += "\n";
  for (const auto& row : r.rows) {
    out += std::to_string(row.q) + "," + std::to_string(row.num_primitive) + "," +
           format_double(row.max_abs) + "," + format_double(row.normalized);
    for (uint8_t e : row.exceeds) out += e ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

std::string levelsets_csv(const std::vector<LevelSetStat>& rows) {
  std::string out = "y,w,count,nicolas_main,lower_ref\n";
  for (const auto& s : rows) {
    out += std::to_string(s.y) + "," + std::to_string(s.w) + "," + std::to_string(s.count) + "," +
           format_double(s.nicolas_main) + "," + format_double(s.lower_ref) + "\n";
  }
  return out;
}

std::string moments_csv(const MomentReport& r) {
  std::string out =
      "x,y,first_moment,first_prediction,second_central,normalized_variance,lambda_used\n";
  out += std::to_string(r.x) + "," + std::to_string(r.y) + "," + std::to_string(r.first_moment) +
         "," + format_double(r.first_prediction) + "," + format_double(r.second_central) + "," +
         format_double(r.normalized_variance) + "," + format_double(r.lambda_used) + "\n";
  return out;
}

std::string titchmarsh_csv(const std::vector<TitchmarshResult>& rows) {
  std::string out = "x,sum,ratio\n";
  for (const auto& t : rows) {
    out += std::to_string(t.x) + "," + std::to_string(t.sum) + "," + format_double(t.ratio) + "\n";
  }
  return out;
}

std::string na_range_csv(const std::vector<NaRangeRow>& rows) {
  std::string out = "a,count,predicted\n";
  for (const auto& r : rows) {
    out += std::to_string(r.a) + "," + std::to_string(r.count) + "," + format_double(r.predicted) +
           "\n";
  }
  return out;
}

std::string census_json(const CensusResult& r) {
  ordered_json j = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json o;
    o["q"] = row.q;
    o["num_primitive"] = row.num_primitive;
    o["max_abs"] = row.max_abs;
    o["normalized"] = row.normalized;
    ordered_json ex = ordered_json::array();
    for (uint8_t e : row.exceeds) ex.push_back(e != 0);
    o["exceeds"] = ex;
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string levelsets_json(const std::vector<LevelSetStat>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& s : rows) {
    ordered_json o;
    o["y"] = s.y;
    o["w"] = s.w;
    o["count"] = s.count;
    o["nicolas_main"] = s.nicolas_main;
    o["lower_ref"] = s.lower_ref;
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string moments_json(const MomentReport& r) {
  ordered_json o;
  o["x"] = r.x;
  o["y"] = r.y;
  o["first_moment"] = r.first_moment;
  o["first_prediction"] = r.first_prediction;
  o["second_central"] = r.second_central;
  o["normalized_variance"] = r.normalized_variance;
  o["lambda_used"] = r.lambda_used;
  return o.dump(2) + "\n";
}

std::string titchmarsh_json(const std::vector<TitchmarshResult>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& t : rows) {
    ordered_json o;
    o["x"] = t.x;
    o["sum"] = t.sum;
    o["ratio"] = t.ratio;
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string na_range_json(const std::vector<NaRangeRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const auto& r : rows) {
    ordered_json o;
    o["a"] = r.a;
    o["count"] = r.count;
    o["predicted"] = r.predicted;
    j.push_back(o);
  }
  return j.dump(2) + "\n";
}

std::string census_summary_json(const CensusResult& r, int threads, double wall_seconds) {
  ordered_json o;
  o["parameters"]["x"] = r.x;
  o["parameters"]["y"] = r.y;
  o["parameters"]["lambda"] = r.lambda;
  o["parameters"]["thresholds"] = r.thresholds;
  o["parameters"]["threads"] = threads;
  o["wall_time_seconds"] = wall_seconds;
  ordered_json counts = ordered_json::array();
  for (uint64_t c : r.exceed_counts) counts.push_back(c);
  o["exceptional_counts"] = counts;
  return o.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out.write(content.data(), std::streamsize(content.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace artinlab
