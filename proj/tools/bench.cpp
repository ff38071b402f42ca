// Times the exhaustive grid sweep: serial reference loop versus the OpenMP
// driver, checking that the two produce identical tallies.

#include <chrono>
#include <cstdio>

#include <CLI11.hpp>

#include "arflab/parallel.hpp"
#include "arflab/sweep.hpp"

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid sweep benchmark: serial reference vs OpenMP"};
  int max_genus = 8;
  bool closure = false;
  app.add_option("--max-genus", max_genus, "genus bound for the grid (default 8)");
  app.add_flag("--closure", closure, "include the Arf-closure inclusion pass");
  CLI11_PARSE(app, argc, argv);

  arflab::GridConfig config;
  config.max_genus = max_genus;
  config.closure_checks = closure;

  std::printf("grid: genus <= %d, closure pass %s, %d worker thread(s)\n", max_genus,
              closure ? "on" : "off", arflab::configured_thread_count());

  auto t0 = std::chrono::steady_clock::now();
  const arflab::SweepChecks serial = arflab::run_grid_checks_serial(config);
  const double serial_s = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  const arflab::SweepChecks parallel = arflab::run_grid_checks_parallel(config);
  const double parallel_s = seconds_since(t0);

  std::printf("instances          %lld\n", serial.instances);
  std::printf("serial             %.3f s\n", serial_s);
  std::printf("parallel           %.3f s\n", parallel_s);
  std::printf("speedup            %.2fx\n", parallel_s > 0 ? serial_s / parallel_s : 0.0);
  std::printf("tallies agree      %s\n", serial == parallel ? "yes" : "NO");
  std::printf("oracle mismatches  %lld\n", serial.oracle_mismatches);
  return serial == parallel ? 0 : 1;
}
