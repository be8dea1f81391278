// Times the serial reference kernel against the OpenMP one on the same
// workload and verifies they produce identical reports.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "gruss/fuzz.hpp"

namespace {

double run_once(const gruss::FuzzConfig& cfg, gruss::Execution exec,
                gruss::FuzzReport& out) {
  const auto start = std::chrono::steady_clock::now();
  out = gruss::fuzz_all(cfg, exec);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

bool same_report(const gruss::FuzzReport& a, const gruss::FuzzReport& b) {
  return a.seed == b.seed && a.samples == b.samples &&
         a.violations == b.violations;
}

}  // namespace

int main(int argc, char** argv) {
  gruss::FuzzConfig cfg;
  cfg.seed = 7;
  cfg.samples = argc > 1 ? std::stoull(argv[1]) : 20000;
  cfg.field = gruss::Field::complex;

  std::printf("samples            %zu\n", cfg.samples);
  std::printf("threads available  %d\n", gruss::fuzz_thread_count());

  gruss::FuzzReport serial_report, parallel_report;
  const double t_serial = run_once(cfg, gruss::Execution::serial, serial_report);
  const double t_parallel = run_once(cfg, gruss::Execution::parallel, parallel_report);

  std::printf("serial             %.3f s\n", t_serial);
  std::printf("parallel           %.3f s\n", t_parallel);
  std::printf("speedup            %.2fx\n", t_parallel > 0 ? t_serial / t_parallel : 0.0);
  std::printf("violations         %llu\n",
              static_cast<unsigned long long>(serial_report.total_violations()));

  if (!same_report(serial_report, parallel_report)) {
    std::fprintf(stderr, "serial and parallel reports disagree\n");
    return 1;
  }
  std::printf("reports identical  yes\n");
  return 0;
}
