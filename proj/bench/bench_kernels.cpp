// Benchmark comparing the OpenMP kernels against the serial reference
// implementations that the tests pin them to. Not a ctest; run directly:
//
//   ./build/bench_kernels [repeats]
//
// Output is one line per kernel with serial seconds, parallel seconds, and
// the ratio. On a single-core host the ratio hovers around 1; the point of
// the target is to keep both code paths exercised and comparable.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crux/crux_ops.hpp"
#include "crux/exec.hpp"
#include "crux/expansion.hpp"
#include "crux/generators.hpp"
#include "crux/graph.hpp"

using namespace crux;

namespace {

double time_best_of(int repeats, const std::function<void()>& fn) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto start = std::chrono::steady_clock::now();
    fn();
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs < best) best = secs;
  }
  return best;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %8.4fs   parallel %8.4fs   ratio %.2fx\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  if (repeats < 1) repeats = 1;
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d, repeats %d (best-of)\n",
              omp_get_max_threads(), repeats);
#else
  std::printf("OpenMP disabled at build time, repeats %d (best-of)\n",
              repeats);
#endif

  // Kernel 1: exact robust-expander check (set enumeration x deletions).
  {
    Graph g = generate_gnp(14, 0.5, 7);
    ExpanderParams params(0.1, 3.0);
    auto run = [&](ExecMode exec) {
      ExpanderCheckOptions opts;
      opts.mode = CheckMode::Exact;
      opts.exec = exec;
      auto res = check_robust_expander(g, params, opts);
      if (res.sets_tested == 0) std::abort();
    };
    report("expander check n=14",
           time_best_of(repeats, [&] { run(ExecMode::Serial); }),
           time_best_of(repeats, [&] { run(ExecMode::Parallel); }));
  }

  // Kernel 2: exact crux computation (densest-subset branch and bound).
  // A sparse host with a high alpha forces refutations across many sizes,
  // which is the expensive half of the scan.
  {
    Graph g = generate_gnp(24, 0.45, 7);
    auto run = [&](ExecMode exec) {
      CruxOptions opts;
      opts.exact_threshold = 24;
      opts.exec = exec;
      auto rep = crux_exact(g, Rational(7, 8), opts);
      if (rep.upper <= 0) std::abort();
    };
    report("crux exact n=24",
           time_best_of(repeats, [&] { run(ExecMode::Serial); }),
           time_best_of(repeats, [&] { run(ExecMode::Parallel); }));
  }

  // Kernel 3: exact expansion profile (boundary minimisation over subsets).
  {
    Graph g = generate_gnp(20, 0.4, 13);
    auto run = [&](ExecMode exec) {
      ProfileOptions opts;
      opts.exec = exec;
      auto rep = expansion_profile(g, 0.5, ProfileMode::Exact, opts);
      if (rep.sets_tested == 0) std::abort();
    };
    report("expansion profile n=20",
           time_best_of(repeats, [&] { run(ExecMode::Serial); }),
           time_best_of(repeats, [&] { run(ExecMode::Parallel); }));
  }

  return 0;
}
