#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace artinlab {

// Resolution order: defaults, then config file, then environment
// (ARTINLAB_THREADS), then command-line flags.
struct RunConfig {
  int threads = 1;                      // >= 1; default is machine parallelism
  uint64_t prime_cutoff = 1'000'000;    // Euler product truncation, >= 100
  std::string output_dir = ".";
  std::string prime_cache;              // optional PrimeTable cache path
  bool deterministic = true;            // seedless determinism contract
  std::map<std::string, uint64_t> budgets;
};

RunConfig default_config();

// Line-oriented key=value text; '#' comments and blank lines allowed.
// Malformed or unknown lines raise an error naming the line number.
RunConfig load_config(const std::string& path);

// ARTINLAB_THREADS overrides the file value.
void apply_env(RunConfig& cfg);

uint64_t budget_of(const RunConfig& cfg, const std::string& name);

}  // namespace artinlab
