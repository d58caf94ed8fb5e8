// Times the three-engine agreement sweep: serial reference vs the OpenMP
// kernel, checking that both produce identical outcomes.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "jocp/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  const auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(d).count();
}

}  // namespace

int main(int argc, char** argv) {
  long m_max = 12;
  int n_random = 50;
  unsigned long seed = 424242;
  long bound = 100;
  if (argc > 1) m_max = std::strtol(argv[1], nullptr, 10);
  if (argc > 2) n_random = static_cast<int>(std::strtol(argv[2], nullptr, 10));
  if (argc > 3) seed = std::strtoul(argv[3], nullptr, 10);
  if (m_max < 2 || m_max % 2 != 0) {
    std::fprintf(stderr, "usage: %s [m_max even] [n_random] [seed]\n", argv[0]);
    return 2;
  }

  const auto grid = jocp::agreement_grid(m_max, n_random, seed, bound);
  std::printf("agreement sweep: %zu cases (m <= %ld, %d random elements per m)\n",
              grid.size(), m_max, n_random);
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: not enabled (parallel kernel runs serially)\n");
#endif

  auto t0 = std::chrono::steady_clock::now();
  const auto serial = jocp::run_agreement_serial(grid);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const auto parallel = jocp::run_agreement_parallel(grid);
  const double parallel_s = seconds_since(t0);

  std::printf("serial reference : %8.3f s\n", serial_s);
  std::printf("parallel kernel  : %8.3f s\n", parallel_s);
  std::printf("speedup          : %8.2fx\n",
              parallel_s > 0 ? serial_s / parallel_s : 0.0);

  bool identical = serial.size() == parallel.size();
  for (std::size_t i = 0; identical && i < serial.size(); ++i) {
    identical = serial[i].v_psi == parallel[i].v_psi &&
                serial[i].v_theta == parallel[i].v_theta &&
                serial[i].v_snf == parallel[i].v_snf &&
                serial[i].error == parallel[i].error;
  }
  const auto bad = jocp::count_disagreements(serial);
  std::printf("kernels identical: %s\n", identical ? "yes" : "NO");
  std::printf("engine mismatches: %zu\n", bad);
  return (identical && bad == 0) ? 0 : 1;
}
