// Times the serial reference sampler against the OpenMP kernel and checks
// that both produce the same batch. Usage: bench_sampler [count] [k] [lambda].

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "orderk/verification.hpp"

using namespace orderk;

namespace {

template <typename F>
double time_once(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t count = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4'000'000;
  std::int64_t k = argc > 2 ? std::strtoll(argv[2], nullptr, 10) : 3;
  std::string lambda = argc > 3 ? argv[3] : "1";
  const std::uint64_t seed = 42;

  OrderKParams params(k, rational_from_string(lambda));
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("count=%llu k=%lld lambda=%s\n",
              static_cast<unsigned long long>(count), static_cast<long long>(k),
              lambda.c_str());

  SampleBatch serial, parallel;
  const double t_serial = time_once([&] { serial = sample_serial(params, count, seed); });
  const double t_parallel = time_once([&] { parallel = sample(params, count, seed); });

  std::printf("serial:   %.3f s  (%.1f Mdraws/s)\n", t_serial,
              static_cast<double>(count) / t_serial / 1e6);
  std::printf("parallel: %.3f s  (%.1f Mdraws/s)\n", t_parallel,
              static_cast<double>(count) / t_parallel / 1e6);
  std::printf("speedup:  %.2fx\n", t_serial / t_parallel);

  if (serial.values != parallel.values) {
    std::printf("MISMATCH: parallel batch differs from serial reference\n");
    return 1;
  }
  std::printf("batches identical\n");
  return 0;
}
