#pragma once

#include "ccr/analysis.hpp"

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace ccr {

// Trace report CSV: "D,boundary,trace_re,trace_im,fallacy_re,fallacy_im,max_deviation"
// followed by one data line.
template <Field T>
void write_trace_report_csv(std::ostream& os, const TraceParadoxReport<T>& report);
template <Field T>
TraceParadoxReport<T> read_trace_report_csv(std::istream& is);
template <Field T>
nlohmann::json trace_report_to_json(const TraceParadoxReport<T>& report);
template <Field T>
TraceParadoxReport<T> trace_report_from_json(const nlohmann::json& doc);

// Convergence CSV: "ell,max_interior_error,observed_order"; the order field is
// empty where it is undefined. JSON: array of objects with the same keys, null
// for an undefined order.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> read_convergence_csv(std::istream& is);
nlohmann::json convergence_to_json(const std::vector<ConvergenceRow>& rows);
std::vector<ConvergenceRow> convergence_from_json(const nlohmann::json& doc);

// Dispersion CSV: "mode,eigenvalue,expected,residual".
void write_dispersion_csv(std::ostream& os, const DispersionResult& result);
DispersionResult read_dispersion_csv(std::istream& is);
nlohmann::json dispersion_to_json(const DispersionResult& result);

}  // namespace ccr
