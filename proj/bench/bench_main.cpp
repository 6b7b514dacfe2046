// Compares the OpenMP kernels with their serial references and checks that
// the outputs agree bit for bit.
//
//   fhsic_bench [gram_n] [grid_points] [study_n] [study_reps]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fhsic/kernel.hpp"
#include "fhsic/rng.hpp"
#include "fhsic/simulate.hpp"

using namespace fhsic;

namespace {

double seconds_of(const std::chrono::steady_clock::time_point& t0) {
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - t0;
  return d.count();
}

CurveSet random_curves(std::size_t n, std::size_t grid_points) {
  RngStream rng(1234, 0);
  std::vector<Curve> curves(n);
  for (Curve& c : curves) {
    c.values.resize(grid_points);
    for (double& v : c.values) v = 4.0 * rng.next_uniform() - 2.0;
  }
  return CurveSet(Grid::equispaced(grid_points), std::move(curves));
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t gram_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 600;
  const std::size_t grid_points =
      argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 51;
  const std::size_t study_n =
      argc > 3 ? std::strtoul(argv[3], nullptr, 10) : 80;
  const std::size_t study_reps =
      argc > 4 ? std::strtoul(argv[4], nullptr, 10) : 32;

#ifdef _OPENMP
  std::printf("OpenMP max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP\n");
#endif

  {
    const CurveSet data = random_curves(gram_n, grid_points);
    KernelSpec spec;
    spec.coefficient = 1.0 / 150.0;

    auto t0 = std::chrono::steady_clock::now();
    const GramMatrix serial = gram_matrix_serial(data, spec);
    const double t_serial = seconds_of(t0);

    t0 = std::chrono::steady_clock::now();
    const GramMatrix parallel = gram_matrix(data, spec);
    const double t_parallel = seconds_of(t0);

    const bool identical =
        std::memcmp(serial.entries().data(), parallel.entries().data(),
                    serial.entries().size() * sizeof(double)) == 0;
    std::printf("gram %zux%zu (%zu grid points):\n", gram_n, gram_n,
                grid_points);
    std::printf("  serial   %8.3f s\n", t_serial);
    std::printf("  parallel %8.3f s   speedup %.2fx   bit-identical: %s\n",
                t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");
    if (!identical) return 1;
  }

  {
    ScenarioConfig cfg;
    cfg.n = study_n;
    cfg.replicates = study_reps;
    cfg.master_seed = 99;
    TestSettings settings;

    auto t0 = std::chrono::steady_clock::now();
    const StudyResult serial = run_study_serial(cfg, settings);
    const double t_serial = seconds_of(t0);

    t0 = std::chrono::steady_clock::now();
    const StudyResult parallel = run_study(cfg, settings);
    const double t_parallel = seconds_of(t0);

    bool identical = serial.records.size() == parallel.records.size();
    for (std::size_t i = 0; identical && i < serial.records.size(); ++i) {
      identical = serial.records[i].statistic == parallel.records[i].statistic &&
                  serial.records[i].z == parallel.records[i].z &&
                  serial.records[i].p_value == parallel.records[i].p_value;
    }
    std::printf("study n=%zu, %zu replicates:\n", study_n, study_reps);
    std::printf("  serial   %8.3f s\n", t_serial);
    std::printf("  parallel %8.3f s   speedup %.2fx   identical records: %s\n",
                t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");
    if (!identical) return 1;
  }
  return 0;
}
