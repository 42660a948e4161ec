// Compares the OpenMP-parallel sweep/assembly kernels against the serial
// reference paths and checks that both produce identical results.

#include <omp.h>

#include <chrono>
#include <iostream>

#include "svb/catalog.hpp"
#include "svb/solver.hpp"

using namespace svb;

namespace {

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_algebra(const AlgebraSpec& alg, int n, int b) {
  std::cout << "== " << alg.name() << " (N=" << n << ", B=" << b << ") ==\n";

  SweepResult js, jp;
  double ts = time_ms([&] { js = jacobi_sweep(alg, n, /*parallel=*/false); });
  double tp = time_ms([&] { jp = jacobi_sweep(alg, n, /*parallel=*/true); });
  bool same = js.checked == jp.checked && js.violations == jp.violations;
  std::cout << "jacobi sweep      serial " << ts << " ms, parallel " << tp
            << " ms, " << js.checked << " triples, match="
            << (same ? "yes" : "NO") << "\n";

  Window w(n, b);
  UnknownIndex index(alg, w, Parity::even, HalfInt::whole(0));
  SparseMatrix ms = matrix_from_rows(index.size(), {});
  SparseMatrix mp = matrix_from_rows(index.size(), {});
  ts = time_ms([&] { ms = build_bider_system(alg, index, false); });
  tp = time_ms([&] { mp = build_bider_system(alg, index, true); });
  std::cout << "bider assembly    serial " << ts << " ms, parallel " << tp
            << " ms, " << ms.rows() << "x" << ms.cols() << ", match="
            << (ms == mp ? "yes" : "NO") << "\n";

  double te = time_ms([&] { (void)nullspace(mp); });
  std::cout << "elimination       " << te << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 8;
  int b = argc > 2 ? std::atoi(argv[2]) : 3;
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  bench_algebra(make_super_virasoro(HalfInt::whole(0)), n, b);
  bench_algebra(make_super_virasoro(HalfInt::from_doubled(1)), n, b);
  bench_algebra(make_witt(), n, b);
  return 0;
}
