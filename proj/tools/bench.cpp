// Benchmarks the OpenMP per-order norm construction against the serial
// reference path and checks they agree exactly.
#include <chrono>
#include <iostream>

#include "convrad/acceptance.hpp"

using namespace convrad;

namespace {

double time_ms(Exec exec, const DiffModule& dm, int N, RadiusEstimate& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = emb_radius_pl(dm, N, exec);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 4;
  bool all_equal = true;
  std::cout << "instance\tN\tserial_ms\tparallel_ms\tspeedup\tequal\n";
  for (const auto& inst : bundled_instances()) {
    int N = inst.order * scale;
    RadiusEstimate serial, parallel;
    double ts = time_ms(Exec::Serial, inst.dm, N, serial);
    double tp = time_ms(Exec::Parallel, inst.dm, N, parallel);
    bool equal = serial.on_skeleton == parallel.on_skeleton;
    all_equal = all_equal && equal;
    std::cout << inst.name << "\t" << N << "\t" << ts << "\t" << tp << "\t"
              << (tp > 0 ? ts / tp : 0.0) << "\t" << (equal ? "yes" : "NO")
              << "\n";
  }
#ifdef CONVRAD_HAVE_OPENMP
  std::cout << "# OpenMP enabled\n";
#else
  std::cout << "# OpenMP not available; parallel path runs serially\n";
#endif
  return all_equal ? 0 : 1;
}
