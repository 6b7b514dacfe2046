#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fhsic/curve.hpp"
#include "fhsic/independence.hpp"
#include "fhsic/kernel.hpp"
#include "fhsic/weights.hpp"

namespace fhsic {

// Coefficient link applied to the first `dependence_order` coefficients of
// the second process: x^3, x^2 or x^2 sin(x).
enum class Link { cube, square, square_sin };

double apply_link(Link link, double x);
const char* link_name(Link link);                 // "x^3", "x^2", "x^2*sin(x)"
const char* link_cli_name(Link link);             // "cube", "square", "square-sin"

// One synthetic-data scenario. Both processes are random cosine series on
// an equispaced grid over [0, 1]:
//   X(t) = sqrt(2) sum_k xi_k cos(k pi t),   xi_k iid Cauchy(location, scale)
//   Y(t) = sqrt(2) sum_k nu_k cos(k pi t)
// with nu_k = link(xi_k) for k <= dependence_order and nu_k iid standard
// normal beyond. dependence_order = 0 makes X and Y independent; dependence
// strength grows with it.
struct ScenarioConfig {
  std::size_t n = 100;
  std::size_t grid_points = 51;
  std::size_t series_terms = 50;
  std::size_t dependence_order = 0;  // in {0 .. series_terms}
  Link link = Link::cube;
  double cauchy_location = 0.0;
  double cauchy_scale = 0.5;
  std::size_t replicates = 300;
  std::uint64_t master_seed = 1;

  void validate() const;
  std::string label() const;  // e.g. "x^3:m=1:n=100"
};

enum class TestMethod { mhsic, permutation_baseline };

const char* method_name(TestMethod m);  // "mhsic", "perm"

// Test configuration shared by every replicate of a study.
struct TestSettings {
  TestMethod method = TestMethod::mhsic;
  WeightScheme weights{};
  KernelSpec kernel{};
  double significance = 0.05;
  int permutations = 50;  // permutation baseline only
};

struct ReplicateRecord {
  std::size_t replicate = 0;
  double statistic = 0.0;
  double z = 0.0;  // meaningful only when has_z
  double p_value = 1.0;
  bool reject = false;
  bool degenerate = false;
  bool has_z = false;  // false for the permutation baseline
};

struct StudyResult {
  ScenarioConfig scenario;
  TestMethod method = TestMethod::mhsic;
  double rejection_rate = 0.0;       // rejections / replicates
  std::size_t degenerate_count = 0;  // counted as non-rejections
  std::vector<ReplicateRecord> records;
  double wall_seconds = 0.0;
};

// Summary of the z-scores collected under an independent scenario, for
// checking the standard-normal limit. Degenerate replicates are excluded
// from the moments and counted separately.
struct NullDiagnostic {
  double z_mean = 0.0;
  double z_variance = 0.0;  // sample variance, n-1 denominator
  double ks_distance = 0.0;
  std::size_t replicates_used = 0;
  std::size_t degenerate_count = 0;
};

// Draws the replicate's (X, Y) curve sets. All randomness comes from the
// (master_seed, replicate_index) substream, so the output is bit-identical
// no matter where or when the replicate runs.
std::pair<CurveSet, CurveSet> generate_pair(const ScenarioConfig& cfg,
                                            std::size_t replicate_index);

// Runs every replicate of the scenario and aggregates rejections. Errors
// from inside a replicate are rethrown tagged with the replicate index.
//
// run_study parallelizes over replicates with OpenMP; run_study_serial is
// the plain-loop reference kept for tests and the benchmark. Both produce
// identical records because each replicate seeds its own substream and the
// records are stored by replicate index.
StudyResult run_study(const ScenarioConfig& cfg, const TestSettings& settings);
StudyResult run_study_serial(const ScenarioConfig& cfg,
                             const TestSettings& settings);

// Runs an mhsic study under dependence_order == 0 and summarizes the
// z-scores against the standard normal.
NullDiagnostic null_z_diagnostic(const ScenarioConfig& cfg,
                                 const TestSettings& settings);

// Kolmogorov-Smirnov distance between a sample and the standard normal CDF.
double ks_distance_to_normal(std::vector<double> sample);

}  // namespace fhsic
