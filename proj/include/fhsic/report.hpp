#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "fhsic/independence.hpp"
#include "fhsic/simulate.hpp"

namespace fhsic {

// All report output is a pure function of its inputs and formats numbers at
// fixed precision, so repeated runs are byte-identical.

// Human-readable report for a single test, including the exact rejection
// threshold used by the decision.
std::string format_test_report(const TestOutcome& outcome,
                               double kernel_coefficient);

// Plain-text rejection-rate table, one row per (link, method), one column
// per dependence order.
std::string format_study_table(std::span<const StudyResult> studies,
                               const TestSettings& settings);

std::string format_diagnostic_report(const NullDiagnostic& diag,
                                     const ScenarioConfig& cfg,
                                     const TestSettings& settings);

// Machine-readable streams: one self-describing JSON object per line.
void write_records_jsonl(std::ostream& out,
                         std::span<const StudyResult> studies);
void write_outcome_json(std::ostream& out, const TestOutcome& outcome,
                        double kernel_coefficient);

}  // namespace fhsic
