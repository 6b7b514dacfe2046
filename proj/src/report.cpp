#include "fhsic/report.hpp"

#include <algorithm>
#include <cstdarg>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fhsic {

namespace {

std::string strf(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

}  // namespace

std::string format_test_report(const TestOutcome& outcome,
                               double kernel_coefficient) {
  std::string s;
  s += "independence test (weighted HSIC, normal null)\n";
  s += strf("  n                 : %zu\n", outcome.n);
  s += strf("  gamma             : %.6g\n", outcome.gamma);
  s += strf("  kernel coefficient: %.6g\n", kernel_coefficient);
  s += strf("  significance      : %.6g\n", outcome.significance);
  s += strf("  statistic         : %.10g\n", outcome.statistic);
  s += strf("  variance component: %.10g\n", outcome.var_component);
  s += strf("  null variance     : %.10g\n", outcome.null_var);
  if (outcome.degenerate) {
    s += "  z                 : n/a (degenerate: null variance is zero)\n";
    s += "  p-value           : 1\n";
    s += "  decision          : no evidence against independence "
         "(degenerate)\n";
  } else {
    s += strf("  z                 : %.10g\n", outcome.z);
    s += strf("  p-value           : %.10g\n", outcome.p_value);
    s += strf("  reject when stat >: %.10g\n", outcome.threshold);
    s += strf("  decision          : %s at level %.6g\n",
              outcome.reject ? "reject independence"
                             : "fail to reject independence",
              outcome.significance);
  }
  return s;
}

std::string format_study_table(std::span<const StudyResult> studies,
                               const TestSettings& settings) {
  if (studies.empty()) {
    return "(no studies)\n";
  }
  // Column set: dependence orders, ascending. Row set: (link, method) in
  // first-appearance order.
  std::vector<std::size_t> orders;
  struct RowKey {
    std::string link;
    std::string method;
  };
  std::vector<RowKey> rows;
  std::map<std::pair<std::string, std::size_t>, double> cells;
  for (const StudyResult& st : studies) {
    const std::string link = link_name(st.scenario.link);
    const std::string method = method_name(st.method);
    if (std::find(orders.begin(), orders.end(),
                  st.scenario.dependence_order) == orders.end()) {
      orders.push_back(st.scenario.dependence_order);
    }
    const std::string row_id = link + "\x1f" + method;
    if (std::find_if(rows.begin(), rows.end(), [&](const RowKey& r) {
          return r.link == link && r.method == method;
        }) == rows.end()) {
      rows.push_back({link, method});
    }
    cells[{row_id, st.scenario.dependence_order}] = st.rejection_rate;
  }
  std::sort(orders.begin(), orders.end());

  const ScenarioConfig& cfg = studies.front().scenario;
  std::string s;
  s += "empirical rejection rates\n";
  s += strf(
      "  n=%zu  replicates=%zu  alpha=%.3f  gamma=%.3f  kernel-coeff=%.6g  "
      "seed=%llu\n\n",
      cfg.n, cfg.replicates, settings.significance, settings.weights.gamma,
      settings.kernel.coefficient,
      static_cast<unsigned long long>(cfg.master_seed));
  s += strf("  %-12s %-7s", "link", "method");
  for (std::size_t m : orders) {
    s += strf(" %8s", strf("m=%zu", m).c_str());
  }
  s += '\n';
  for (const RowKey& row : rows) {
    s += strf("  %-12s %-7s", row.link.c_str(), row.method.c_str());
    for (std::size_t m : orders) {
      const auto it = cells.find({row.link + "\x1f" + row.method, m});
      if (it == cells.end()) {
        s += strf(" %8s", "-");
      } else {
        s += strf(" %8.3f", it->second);
      }
    }
    s += '\n';
  }
  return s;
}

std::string format_diagnostic_report(const NullDiagnostic& diag,
                                     const ScenarioConfig& cfg,
                                     const TestSettings& settings) {
  std::string s;
  s += "null z-score diagnostic (independent scenario)\n";
  s += strf(
      "  n=%zu  replicates=%zu  gamma=%.3f  kernel-coeff=%.6g  seed=%llu\n",
      cfg.n, cfg.replicates, settings.weights.gamma,
      settings.kernel.coefficient,
      static_cast<unsigned long long>(cfg.master_seed));
  s += strf("  z mean            : %.6g\n", diag.z_mean);
  s += strf("  z variance        : %.6g\n", diag.z_variance);
  s += strf("  KS distance to N(0,1): %.6g\n", diag.ks_distance);
  s += strf("  replicates used   : %zu\n", diag.replicates_used);
  s += strf("  degenerate        : %zu\n", diag.degenerate_count);
  return s;
}

void write_records_jsonl(std::ostream& out,
                         std::span<const StudyResult> studies) {
  for (const StudyResult& st : studies) {
    const std::string scenario = st.scenario.label();
    const char* method = method_name(st.method);
    for (const ReplicateRecord& r : st.records) {
      nlohmann::json j;
      j["scenario"] = scenario;
      j["method"] = method;
      j["replicate"] = r.replicate;
      j["statistic"] = r.statistic;
      if (r.has_z) {
        j["z"] = r.z;
      } else {
        j["z"] = nullptr;
      }
      j["p"] = r.p_value;
      j["reject"] = r.reject;
      j["degenerate"] = r.degenerate;
      out << j.dump() << '\n';
    }
  }
}

void write_outcome_json(std::ostream& out, const TestOutcome& outcome,
                        double kernel_coefficient) {
  nlohmann::json j;
  j["n"] = outcome.n;
  j["gamma"] = outcome.gamma;
  j["kernel_coeff"] = kernel_coefficient;
  j["significance"] = outcome.significance;
  j["statistic"] = outcome.statistic;
  j["var_component"] = outcome.var_component;
  j["null_variance"] = outcome.null_var;
  j["z"] = outcome.z;
  j["p"] = outcome.p_value;
  j["threshold"] = outcome.threshold;
  j["reject"] = outcome.reject;
  j["degenerate"] = outcome.degenerate;
  out << j.dump() << '\n';
}

}  // namespace fhsic
