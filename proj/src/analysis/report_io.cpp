#include "ccr/report_io.hpp"

#include "ccr/errors.hpp"
#include "ccr/serialization.hpp"

#include <istream>
#include <ostream>
#include <string>

namespace ccr {
namespace {

constexpr const char* kTraceHeader = "D,boundary,trace_re,trace_im,fallacy_re,fallacy_im,max_deviation";
constexpr const char* kConvergenceHeader = "ell,max_interior_error,observed_order";
constexpr const char* kDispersionHeader = "mode,eigenvalue,expected,residual";

void expect_header(std::istream& is, const char* header) {
    std::string line;
    if (!std::getline(is, line) || line != header)
        throw ValidationError(std::string("expected CSV header '") + header + "'");
}

std::vector<std::string> next_record(std::istream& is, std::size_t fields) {
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) {
            auto parts = split_csv_line(line);
            if (parts.size() != fields)
                throw ValidationError("CSV line needs " + std::to_string(fields) + " fields: '" + line + "'");
            return parts;
        }
    return {};
}

template <Field T>
nlohmann::json complex_to_json(const T& z) {
    using traits = scalar_traits<T>;
    if constexpr (traits::mode == NumericMode::ExactRational) {
        return {{"re", to_string(z.re)}, {"im", to_string(z.im)}};
    } else {
        return {{"re", z.real()}, {"im", z.imag()}};
    }
}

template <Field T>
T complex_from_json(const nlohmann::json& j) {
    if constexpr (scalar_traits<T>::mode == NumericMode::ExactRational) {
        return {parse_rational(j.at("re").get<std::string>()), parse_rational(j.at("im").get<std::string>())};
    } else {
        return {j.at("re").get<double>(), j.at("im").get<double>()};
    }
}

}  // namespace

template <Field T>
void write_trace_report_csv(std::ostream& os, const TraceParadoxReport<T>& r) {
    using traits = scalar_traits<T>;
    os << kTraceHeader << '\n'
       << r.dim << ',' << to_string(r.boundary) << ',' << traits::render(traits::real(r.trace_commutator)) << ','
       << traits::render(traits::imag(r.trace_commutator)) << ','
       << traits::render(traits::real(r.fallacy_value)) << ',' << traits::render(traits::imag(r.fallacy_value))
       << ',' << render_shortest(r.max_deviation_from_unit) << '\n';
}

template <Field T>
TraceParadoxReport<T> read_trace_report_csv(std::istream& is) {
    using traits = scalar_traits<T>;
    expect_header(is, kTraceHeader);
    const auto f = next_record(is, 7);
    if (f.empty()) throw ValidationError("trace report CSV has no data line");
    TraceParadoxReport<T> r;
    r.dim = parse_int(f[0]);
    r.boundary = parse_boundary(f[1]);
    r.trace_commutator = traits::from_parts(traits::parse(f[2]), traits::parse(f[3]));
    r.fallacy_value = traits::from_parts(traits::parse(f[4]), traits::parse(f[5]));
    r.max_deviation_from_unit = parse_double(f[6]);
    return r;
}

template <Field T>
nlohmann::json trace_report_to_json(const TraceParadoxReport<T>& r) {
    return {{"D", r.dim},
            {"boundary", to_string(r.boundary)},
            {"mode", to_string(scalar_traits<T>::mode)},
            {"trace_commutator", complex_to_json(r.trace_commutator)},
            {"fallacy_value", complex_to_json(r.fallacy_value)},
            {"max_deviation_from_unit", r.max_deviation_from_unit}};
}

template <Field T>
TraceParadoxReport<T> trace_report_from_json(const nlohmann::json& doc) {
    try {
        if (parse_mode(doc.at("mode").get<std::string>()) != scalar_traits<T>::mode)
            throw ModeError("trace report mode does not match the requested field");
        TraceParadoxReport<T> r;
        r.dim = doc.at("D").get<int>();
        r.boundary = parse_boundary(doc.at("boundary").get<std::string>());
        r.trace_commutator = complex_from_json<T>(doc.at("trace_commutator"));
        r.fallacy_value = complex_from_json<T>(doc.at("fallacy_value"));
        r.max_deviation_from_unit = doc.at("max_deviation_from_unit").get<double>();
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed trace report JSON: ") + ex.what());
    }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRow>& rows) {
    os << kConvergenceHeader << '\n';
    for (const auto& row : rows) {
        os << render_shortest(row.ell) << ',' << render_shortest(row.max_interior_error) << ',';
        if (row.observed_order) os << render_shortest(*row.observed_order);
        os << '\n';
    }
}

std::vector<ConvergenceRow> read_convergence_csv(std::istream& is) {
    expect_header(is, kConvergenceHeader);
    std::vector<ConvergenceRow> rows;
    for (auto f = next_record(is, 3); !f.empty(); f = next_record(is, 3)) {
        ConvergenceRow row;
        row.ell = parse_double(f[0]);
        row.max_interior_error = parse_double(f[1]);
        if (!f[2].empty()) row.observed_order = parse_double(f[2]);
        rows.push_back(row);
    }
    return rows;
}

nlohmann::json convergence_to_json(const std::vector<ConvergenceRow>& rows) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& row : rows)
        out.push_back({{"ell", row.ell},
                       {"max_interior_error", row.max_interior_error},
                       {"observed_order", row.observed_order ? nlohmann::json(*row.observed_order) : nullptr}});
    return out;
}

std::vector<ConvergenceRow> convergence_from_json(const nlohmann::json& doc) {
    try {
        std::vector<ConvergenceRow> rows;
        for (const auto& j : doc) {
            ConvergenceRow row;
            row.ell = j.at("ell").get<double>();
            row.max_interior_error = j.at("max_interior_error").get<double>();
            if (!j.at("observed_order").is_null()) row.observed_order = j.at("observed_order").get<double>();
            rows.push_back(row);
        }
        return rows;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed convergence JSON: ") + ex.what());
    }
}

void write_dispersion_csv(std::ostream& os, const DispersionResult& r) {
    os << kDispersionHeader << '\n'
       << r.mode << ',' << render_shortest(r.eigenvalue) << ',' << render_shortest(r.expected) << ','
       << render_shortest(r.residual) << '\n';
}

DispersionResult read_dispersion_csv(std::istream& is) {
    expect_header(is, kDispersionHeader);
    const auto f = next_record(is, 4);
    if (f.empty()) throw ValidationError("dispersion CSV has no data line");
    return {parse_int(f[0]), parse_double(f[1]), parse_double(f[2]), parse_double(f[3])};
}

nlohmann::json dispersion_to_json(const DispersionResult& r) {
    return {{"mode", r.mode}, {"eigenvalue", r.eigenvalue}, {"expected", r.expected}, {"residual", r.residual}};
}

#define CCR_INSTANTIATE(T)                                                                   \
    template void write_trace_report_csv<T>(std::ostream&, const TraceParadoxReport<T>&);    \
    template TraceParadoxReport<T> read_trace_report_csv<T>(std::istream&);                  \
    template nlohmann::json trace_report_to_json<T>(const TraceParadoxReport<T>&);           \
    template TraceParadoxReport<T> trace_report_from_json<T>(const nlohmann::json&);

CCR_INSTANTIATE(ExactComplex)
CCR_INSTANTIATE(FloatComplex)

#undef CCR_INSTANTIATE

}  // namespace ccr
