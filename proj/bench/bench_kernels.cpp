// Times the serial kernel references against the OpenMP versions and prints
// a speedup table. Inputs are seeded, so both variants factor identical data.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cornerdet/kernels.hpp"
#include "cornerdet/types.hpp"

using cornerdet::Cplx;
namespace kernels = cornerdet::kernels;

namespace {

std::vector<Cplx> random_values(size_t count, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Cplx> v(count);
  for (Cplx& x : v) x = Cplx(dist(rng), dist(rng));
  return v;
}

template <typename F>
double time_best_of(int reps, F body) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, int size, double serial, double parallel) {
  std::printf("%-10s %6d   %10.4f ms   %10.4f ms   %6.2fx\n", name, size,
              serial * 1e3, parallel * 1e3, serial / parallel);
}

}  // namespace

int main() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n", threads);
  std::printf("%-10s %6s   %13s   %13s   %7s\n", "kernel", "size", "serial",
              "parallel", "speedup");

  for (int n : {128, 256, 512}) {
    auto base = random_values(size_t(n) * n, 12345 + n);
    std::vector<int> piv(n);
    int singular = -1;
    double ts = time_best_of(3, [&] {
      auto a = base;
      kernels::lu_factor_serial(a.data(), n, piv.data(), &singular);
    });
    double tp = time_best_of(3, [&] {
      auto a = base;
      kernels::lu_factor_parallel(a.data(), n, piv.data(), &singular);
    });
    report("lu_factor", n, ts, tp);
  }

  for (int n : {128, 256, 512}) {
    auto a = random_values(size_t(n) * n, 777 + n);
    auto b = random_values(size_t(n) * n, 778 + n);
    std::vector<Cplx> c(size_t(n) * n);
    double ts = time_best_of(3, [&] {
      kernels::matmul_serial(a.data(), b.data(), c.data(), n, n, n);
    });
    double tp = time_best_of(3, [&] {
      kernels::matmul_parallel(a.data(), b.data(), c.data(), n, n, n);
    });
    report("matmul", n, ts, tp);
  }

  for (int half : {1024, 4096, 16384}) {
    auto u = random_values(size_t(2 * half + 1), 31 + half);
    auto v = random_values(size_t(2 * half + 1), 32 + half);
    double ts = time_best_of(3, [&] { kernels::convolve_serial(u, v, half); });
    double tp = time_best_of(3, [&] { kernels::convolve_parallel(u, v, half); });
    report("convolve", half, ts, tp);
  }
  return 0;
}
