#include "artinlab/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace artinlab {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

uint64_t parse_u64(const std::string& v, int line_no) {
  size_t pos = 0;
  uint64_t r = 0;
  if (v.empty() || v[0] == '-' || v[0] == '+')
    throw std::invalid_argument("config: malformed value at line " + std::to_string(line_no));
  try {
    r = std::stoull(v, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: malformed value at line " + std::to_string(line_no));
  }
  if (pos != v.size())
    throw std::invalid_argument("config: malformed value at line " + std::to_string(line_no));
  return r;
}

}  // namespace

RunConfig default_config() {
  RunConfig cfg;
  unsigned hw = std::thread::hardware_concurrency();
  cfg.threads = hw == 0 ? 1 : int(hw);
  cfg.budgets = {
      {"census_x", 100'000},       {"tk_tuples", 100'000'000},
      {"large_sieve_x", 100},      {"large_sieve_y", 50},
      {"moments_cells", 2'000'000'000}, {"sieve_limit", 1'000'000'000},
      {"spf_limit", 100'000'000},
  };
  return cfg;
}

RunConfig load_config(const std::string& path) {
  RunConfig cfg = default_config();
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: malformed line " + std::to_string(line_no) +
                                  " (expected key=value)");
    std::string key = trim(s.substr(0, eq));
    std::string value = trim(s.substr(eq + 1));
    if (key == "threads") {
      uint64_t t = parse_u64(value, line_no);
      if (t == 0)
        throw std::invalid_argument("config: threads must be at least 1 (line " +
                                    std::to_string(line_no) + ")");
      cfg.threads = int(t);
    } else if (key == "prime_cutoff") {
      uint64_t c = parse_u64(value, line_no);
      if (c < 100)
        throw std::invalid_argument("config: prime_cutoff must be at least 100 (line " +
                                    std::to_string(line_no) + ")");
      cfg.prime_cutoff = c;
    } else if (key == "output_dir") {
      cfg.output_dir = value;
    } else if (key == "prime_cache") {
      cfg.prime_cache = value;
    } else if (key == "deterministic") {
      if (value == "true") {
        cfg.deterministic = true;
      } else if (value == "false") {
        cfg.deterministic = false;
      } else {
        throw std::invalid_argument("config: malformed value at line " + std::to_string(line_no));
      }
    } else if (key.rfind("budget.", 0) == 0) {
      std::string name = key.substr(7);
      if (cfg.budgets.find(name) == cfg.budgets.end())
        throw std::invalid_argument("config: unknown budget '" + name + "' at line " +
                                    std::to_string(line_no));
      cfg.budgets[name] = parse_u64(value, line_no);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "' at line " +
                                  std::to_string(line_no));
    }
  }
  return cfg;
}

void apply_env(RunConfig& cfg) {
  const char* t = std::getenv("ARTINLAB_THREADS");
  if (t != nullptr && *t != '\0') {
    std::string v(t);
    uint64_t n = parse_u64(v, 0);
    if (n == 0) throw std::invalid_argument("ARTINLAB_THREADS must be at least 1");
    cfg.threads = int(n);
  }
}

uint64_t budget_of(const RunConfig& cfg, const std::string& name) {
  auto it = cfg.budgets.find(name);
  if (it == cfg.budgets.end()) throw std::logic_error("unknown budget: " + name);
  return it->second;
}

}  // namespace artinlab
