// Benchmark of the OpenMP kernels against their serial reference
// implementations. The references double as correctness anchors: each
// comparison aborts if the two routes disagree.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "artinlab/census.hpp"
#include "artinlab/config.hpp"
#include "artinlab/io.hpp"

using namespace artinlab;

namespace {

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

template <typename F>
double time_it(F&& f) {
  double t0 = now_seconds();
  f();
  return now_seconds() - t0;
}

void report(const char* name, double t_ref, double t_1, double t_n, int threads) {
  std::printf("%-22s reference %8.3fs | kernel x1 %8.3fs | kernel x%d %8.3fs | speedup %.2f\n",
              name, t_ref, t_1, threads, t_n, t_1 / t_n);
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : 0;
  if (threads <= 0) threads = default_config().threads;
  std::printf("benchmarking with %d threads\n\n", threads);

  // --- N_a batch kernel ---
  {
    const uint64_t x = 20000;
    const int64_t y = 2000;
    PrimeTable primes = sieve_primes(x);
    SpfTable spf = sieve_spf(x);
    std::vector<uint64_t> fast1, fastn, ref;
    double t_ref = time_it([&] { ref = count_na_batch_serial(-y, y, x, primes, spf); });
    double t_1 = time_it([&] { fast1 = count_na_batch(-y, y, x, primes, spf, 1); });
    double t_n = time_it([&] { fastn = count_na_batch(-y, y, x, primes, spf, threads); });
    if (fast1 != ref || fastn != ref) {
      std::fprintf(stderr, "count_na_batch mismatch\n");
      return 1;
    }
    report("count_na_batch", t_ref, t_1, t_n, threads);
  }

  // --- character-sum census ---
  {
    const uint64_t x = 1200, y = 400;
    std::vector<double> thresholds{0.0, 0.1, 0.5};
    CensusResult r1, rn, ref;
    double t_ref = time_it([&] { ref = charsum_census_serial(x, y, thresholds, 3.0); });
    double t_1 = time_it([&] { r1 = charsum_census(x, y, thresholds, 3.0, 1); });
    double t_n = time_it([&] { rn = charsum_census(x, y, thresholds, 3.0, threads); });
    if (census_csv(r1) != census_csv(rn)) {
      std::fprintf(stderr, "census thread-count mismatch\n");
      return 1;
    }
    for (size_t i = 0; i < ref.rows.size(); ++i) {
      if (std::abs(ref.rows[i].max_abs - r1.rows[i].max_abs) > 1e-6) {
        std::fprintf(stderr, "census reference mismatch at q=%llu\n",
                     static_cast<unsigned long long>(ref.rows[i].q));
        return 1;
      }
    }
    report("charsum_census", t_ref, t_1, t_n, threads);
  }

  // --- moments ---
  {
    const uint64_t x = 20000, y = 1500;
    PrimeTable primes = sieve_primes(x);
    SpfTable spf = sieve_spf(x);
    MomentReport m1, mn, ref;
    double t_ref =
        time_it([&] { ref = moments_serial_reference(x, y, 10.0, 100000, primes, spf); });
    double t_1 = time_it([&] { m1 = moments(x, y, 10.0, 100000, primes, spf, 1); });
    double t_n = time_it([&] { mn = moments(x, y, 10.0, 100000, primes, spf, threads); });
    if (m1.first_moment != ref.first_moment || mn.first_moment != ref.first_moment) {
      std::fprintf(stderr, "moments mismatch\n");
      return 1;
    }
    report("moments", t_ref, t_1, t_n, threads);
  }

  return 0;
}
