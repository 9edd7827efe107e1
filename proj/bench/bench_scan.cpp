// Wall-clock comparison of the serial and OpenMP paths of the grid kernels.
// Usage: bench_scan [repeats]
#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <vector>

#include "rieszwell/analysis.hpp"
#include "rieszwell/scan.hpp"

namespace {

using namespace rieszwell;
using Clock = std::chrono::steady_clock;

double best_of(int repeats, const std::function<void()>& body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = Clock::now();
    body();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void report(const char* name, double serial, double parallel, bool identical) {
  std::printf("%-18s serial %8.4f s  parallel %8.4f s  speedup %5.2fx  identical %s\n", name,
              serial, parallel, serial / parallel, identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());

  const QuadratureSettings cfg;
  const FractionalOrder order(0.5);
  const WellConfig well;
  const auto xs = scan::x_grid(0.0, 3.0, 301, true);

  std::vector<scan::ScanIRow> ser_rows, par_rows;
  const double s1 = best_of(repeats, [&] {
    ser_rows = scan::scan_i(order, well, xs, cfg, Execution::serial);
  });
  const double p1 = best_of(repeats, [&] {
    par_rows = scan::scan_i(order, well, xs, cfg, Execution::parallel);
  });
  bool same = ser_rows.size() == par_rows.size();
  for (std::size_t i = 0; same && i < ser_rows.size(); ++i) {
    same = ser_rows[i].i_closed == par_rows[i].i_closed &&
           ser_rows[i].i_oracle == par_rows[i].i_oracle;
  }
  report("scan_i", s1, p1, same);

  const auto alphas = scan::alpha_grid(-0.9, 0.9, 19);
  const auto sweep_x = scan::linspace(0.0, 3.0, 31);
  analysis::ConsistencyReport ser_rep, par_rep;
  const double s2 = best_of(repeats, [&] {
    ser_rep = analysis::consistency_sweep(alphas, sweep_x, well, cfg, 1e-6, Execution::serial);
  });
  const double p2 = best_of(repeats, [&] {
    par_rep = analysis::consistency_sweep(alphas, sweep_x, well, cfg, 1e-6, Execution::parallel);
  });
  report("consistency_sweep", s2, p2, ser_rep.max_mixed_diff == par_rep.max_mixed_diff);
  return same ? 0 : 1;
}
