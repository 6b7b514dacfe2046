#include "fhsic/simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fhsic/normal_dist.hpp"
#include "fhsic/rng.hpp"

namespace fhsic {

double apply_link(Link link, double x) {
  switch (link) {
    case Link::cube:
      return x * x * x;
    case Link::square:
      return x * x;
    case Link::square_sin:
      return x * x * std::sin(x);
  }
  throw std::invalid_argument("apply_link: unknown link");
}

const char* link_name(Link link) {
  switch (link) {
    case Link::cube:
      return "x^3";
    case Link::square:
      return "x^2";
    case Link::square_sin:
      return "x^2*sin(x)";
  }
  return "?";
}

const char* link_cli_name(Link link) {
  switch (link) {
    case Link::cube:
      return "cube";
    case Link::square:
      return "square";
    case Link::square_sin:
      return "square-sin";
  }
  return "?";
}

const char* method_name(TestMethod m) {
  return m == TestMethod::mhsic ? "mhsic" : "perm";
}

void ScenarioConfig::validate() const {
  if (n < 2) throw std::invalid_argument("ScenarioConfig: n must be >= 2");
  if (grid_points < 2) {
    throw std::invalid_argument("ScenarioConfig: grid_points must be >= 2");
  }
  if (series_terms < 1) {
    throw std::invalid_argument("ScenarioConfig: series_terms must be >= 1");
  }
  if (dependence_order > series_terms) {
    throw std::invalid_argument(
        "ScenarioConfig: dependence order exceeds series terms");
  }
  if (replicates < 1) {
    throw std::invalid_argument("ScenarioConfig: replicates must be >= 1");
  }
  if (!(cauchy_scale > 0.0)) {
    throw std::invalid_argument("ScenarioConfig: cauchy_scale must be > 0");
  }
}

std::string ScenarioConfig::label() const {
  return std::string(link_name(link)) + ":m=" +
         std::to_string(dependence_order) + ":n=" + std::to_string(n);
}

std::pair<CurveSet, CurveSet> generate_pair(const ScenarioConfig& cfg,
                                            std::size_t replicate_index) {
  cfg.validate();
  RngStream rng(cfg.master_seed, replicate_index);

  const std::size_t terms = cfg.series_terms;
  const std::size_t gp = cfg.grid_points;
  Grid grid = Grid::equispaced(gp);

  // basis[k][j] = sqrt(2) cos((k+1) pi t_j)
  const double pi = std::acos(-1.0);
  const double sqrt2 = std::sqrt(2.0);
  std::vector<double> basis(terms * gp);
  for (std::size_t k = 0; k < terms; ++k) {
    const double freq = static_cast<double>(k + 1) * pi;
    for (std::size_t j = 0; j < gp; ++j) {
      basis[k * gp + j] = sqrt2 * std::cos(freq * grid.points()[j]);
    }
  }

  std::vector<Curve> xs(cfg.n), ys(cfg.n);
  std::vector<double> xi(terms), nu(terms);
  for (std::size_t i = 0; i < cfg.n; ++i) {
    for (std::size_t k = 0; k < terms; ++k) {
      xi[k] = rng.next_cauchy(cfg.cauchy_location, cfg.cauchy_scale);
    }
    for (std::size_t k = 0; k < terms; ++k) {
      nu[k] = (k < cfg.dependence_order) ? apply_link(cfg.link, xi[k])
                                         : rng.next_normal();
    }
    Curve cx, cy;
    cx.values.assign(gp, 0.0);
    cy.values.assign(gp, 0.0);
    for (std::size_t k = 0; k < terms; ++k) {
      const double* row = &basis[k * gp];
      for (std::size_t j = 0; j < gp; ++j) {
        cx.values[j] += xi[k] * row[j];
        cy.values[j] += nu[k] * row[j];
      }
    }
    xs[i] = std::move(cx);
    ys[i] = std::move(cy);
  }
  return {CurveSet(grid, std::move(xs)), CurveSet(Grid::equispaced(gp),
                                                  std::move(ys))};
}

namespace {

// Distinct substream space for the permutation baseline's seeds.
constexpr std::uint64_t kPermSalt = 0x7065726D73616C74ull;

ReplicateRecord run_replicate(const ScenarioConfig& cfg,
                              const TestSettings& settings, std::size_t rep) {
  const auto [x, y] = generate_pair(cfg, rep);
  const GramMatrix K = gram_matrix_serial(x, settings.kernel);
  const GramMatrix L = gram_matrix_serial(y, settings.kernel);

  ReplicateRecord rec;
  rec.replicate = rep;
  if (settings.method == TestMethod::mhsic) {
    const TestOutcome out =
        independence_test(K, L, settings.weights, settings.significance);
    rec.statistic = out.statistic;
    rec.z = out.z;
    rec.p_value = out.p_value;
    rec.reject = out.reject;
    rec.degenerate = out.degenerate;
    rec.has_z = !out.degenerate;
  } else {
    const std::uint64_t perm_seed =
        RngStream::derive(cfg.master_seed ^ kPermSalt, rep);
    rec.statistic = naive_hsic(K, L).value;
    rec.p_value =
        permutation_test_naive(K, L, settings.permutations, perm_seed);
    rec.reject = rec.p_value <= settings.significance;
    rec.z = 0.0;
    rec.degenerate = false;
    rec.has_z = false;
  }
  return rec;
}

void validate_study_inputs(const ScenarioConfig& cfg,
                           const TestSettings& settings) {
  cfg.validate();
  settings.kernel.validate();
  settings.weights.validate();
  if (!(settings.significance > 0.0) || !(settings.significance < 1.0)) {
    throw std::invalid_argument("run_study: significance must lie in (0, 1)");
  }
  if (settings.method == TestMethod::permutation_baseline &&
      settings.permutations < 1) {
    throw std::invalid_argument("run_study: permutations must be >= 1");
  }
}

StudyResult aggregate(const ScenarioConfig& cfg, const TestSettings& settings,
                      std::vector<ReplicateRecord> records, double seconds) {
  StudyResult result;
  result.scenario = cfg;
  result.method = settings.method;
  result.records = std::move(records);
  std::size_t rejections = 0;
  for (const ReplicateRecord& r : result.records) {
    if (r.reject) ++rejections;
    if (r.degenerate) ++result.degenerate_count;
  }
  result.rejection_rate =
      static_cast<double>(rejections) / static_cast<double>(cfg.replicates);
  result.wall_seconds = seconds;
  return result;
}

}  // namespace

StudyResult run_study(const ScenarioConfig& cfg, const TestSettings& settings) {
  validate_study_inputs(cfg, settings);
  const std::int64_t reps = static_cast<std::int64_t>(cfg.replicates);
  std::vector<ReplicateRecord> records(cfg.replicates);
  bool failed = false;
  std::string what;
  const auto start = std::chrono::steady_clock::now();
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t rep = 0; rep < reps; ++rep) {
    try {
      records[rep] = run_replicate(cfg, settings, static_cast<std::size_t>(rep));
    } catch (const std::exception& e) {
#pragma omp critical
      {
        failed = true;
        what = "replicate " + std::to_string(rep) + ": " + e.what();
      }
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  if (failed) {
    throw std::runtime_error("run_study: " + what);
  }
  return aggregate(cfg, settings, std::move(records), elapsed.count());
}

StudyResult run_study_serial(const ScenarioConfig& cfg,
                             const TestSettings& settings) {
  validate_study_inputs(cfg, settings);
  std::vector<ReplicateRecord> records(cfg.replicates);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t rep = 0; rep < cfg.replicates; ++rep) {
    try {
      records[rep] = run_replicate(cfg, settings, rep);
    } catch (const std::exception& e) {
      throw std::runtime_error("run_study: replicate " + std::to_string(rep) +
                               ": " + e.what());
    }
  }
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  return aggregate(cfg, settings, std::move(records), elapsed.count());
}

double ks_distance_to_normal(std::vector<double> sample) {
  if (sample.empty()) {
    throw std::invalid_argument("ks_distance_to_normal: empty sample");
  }
  std::sort(sample.begin(), sample.end());
  const double dn = static_cast<double>(sample.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double cdf = normal_cdf(sample[i]);
    dist = std::max(dist, (static_cast<double>(i) + 1.0) / dn - cdf);
    dist = std::max(dist, cdf - static_cast<double>(i) / dn);
  }
  return dist;
}

NullDiagnostic null_z_diagnostic(const ScenarioConfig& cfg,
                                 const TestSettings& settings) {
  if (cfg.dependence_order != 0) {
    throw std::invalid_argument(
        "null_z_diagnostic: requires an independent scenario "
        "(dependence_order == 0)");
  }
  TestSettings diag_settings = settings;
  diag_settings.method = TestMethod::mhsic;
  const StudyResult study = run_study(cfg, diag_settings);

  NullDiagnostic diag;
  std::vector<double> zs;
  zs.reserve(study.records.size());
  for (const ReplicateRecord& r : study.records) {
    if (r.degenerate) {
      ++diag.degenerate_count;
    } else {
      zs.push_back(r.z);
    }
  }
  diag.replicates_used = zs.size();
  if (zs.empty()) {
    return diag;
  }
  double sum = 0.0;
  for (double z : zs) sum += z;
  diag.z_mean = sum / static_cast<double>(zs.size());
  if (zs.size() > 1) {
    double acc = 0.0;
    for (double z : zs) {
      const double d = z - diag.z_mean;
      acc += d * d;
    }
    diag.z_variance = acc / (static_cast<double>(zs.size()) - 1.0);
  }
  diag.ks_distance = ks_distance_to_normal(zs);
  return diag;
}

}  // namespace fhsic
