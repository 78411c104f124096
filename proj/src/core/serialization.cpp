#include "ccr/serialization.hpp"

#include "ccr/errors.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace ccr {
namespace {

template <Field T>
nlohmann::json part_to_json(const typename scalar_traits<T>::real_type& x) {
    if constexpr (scalar_traits<T>::mode == NumericMode::ExactRational) {
        return to_string(x);
    } else {
        return x;
    }
}

template <Field T>
typename scalar_traits<T>::real_type part_from_json(const nlohmann::json& j) {
    if constexpr (scalar_traits<T>::mode == NumericMode::ExactRational) {
        if (!j.is_string()) throw ValidationError("exact matrix parts must be strings");
        return parse_rational(j.get<std::string>());
    } else {
        if (!j.is_number()) throw ValidationError("floating matrix parts must be numbers");
        return j.get<double>();
    }
}

template <Field T>
T parse_value(const std::string& re, const std::string& im) {
    return scalar_traits<T>::from_parts(scalar_traits<T>::parse(re), scalar_traits<T>::parse(im));
}

}  // namespace

int parse_int(const std::string& text) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw ValidationError("malformed index '" + text + "'");
    }
    if (used != text.size()) throw ValidationError("malformed index '" + text + "'");
    return value;
}

namespace {

void expect_header(std::istream& is, const std::string& header) {
    std::string line;
    if (!std::getline(is, line) || line != header)
        throw ValidationError("expected CSV header '" + header + "'");
}

template <Field T>
void check_mode(const nlohmann::json& doc) {
    const NumericMode mode = parse_mode(doc.at("mode").get<std::string>());
    if (mode != scalar_traits<T>::mode)
        throw ModeError("document holds " + to_string(mode) + " data, caller expects " +
                        to_string(scalar_traits<T>::mode));
}

}  // namespace

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

template <Field T>
void write_matrix_csv(std::ostream& os, const BandedMatrix<T>& a) {
    using traits = scalar_traits<T>;
    os << "row,col,re,im\n";
    for (const auto& e : a.nonzeros())
        os << e.row << ',' << e.col << ',' << traits::render(traits::real(e.value)) << ','
           << traits::render(traits::imag(e.value)) << '\n';
}

template <Field T>
BandedMatrix<T> read_matrix_csv(std::istream& is, const MatrixShape& shape) {
    BandedMatrix<T> out(shape);
    expect_header(is, "row,col,re,im");
    std::set<std::pair<int, int>> seen;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 4) throw ValidationError("matrix CSV line needs 4 fields: '" + line + "'");
        const int row = parse_int(fields[0]);
        const int col = parse_int(fields[1]);
        if (!seen.insert({row, col}).second) throw ValidationError("duplicate matrix entry: '" + line + "'");
        out.set(row, col, parse_value<T>(fields[2], fields[3]));
    }
    return out;
}

template <Field T>
nlohmann::json matrix_to_json(const BandedMatrix<T>& a) {
    using traits = scalar_traits<T>;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : a.nonzeros())
        entries.push_back({{"row", e.row},
                           {"col", e.col},
                           {"re", part_to_json<T>(traits::real(e.value))},
                           {"im", part_to_json<T>(traits::imag(e.value))}});
    return {{"dim", a.dim()},
            {"lower_bw", a.lower_bandwidth()},
            {"upper_bw", a.upper_bandwidth()},
            {"boundary", to_string(a.boundary())},
            {"mode", to_string(traits::mode)},
            {"entries", std::move(entries)}};
}

template <Field T>
BandedMatrix<T> matrix_from_json(const nlohmann::json& doc) {
    try {
        check_mode<T>(doc);
        BandedMatrix<T> out(MatrixShape{doc.at("dim").get<int>(), doc.at("lower_bw").get<int>(),
                                        doc.at("upper_bw").get<int>(),
                                        parse_boundary(doc.at("boundary").get<std::string>())});
        for (const auto& e : doc.at("entries"))
            out.set(e.at("row").get<int>(), e.at("col").get<int>(),
                    scalar_traits<T>::from_parts(part_from_json<T>(e.at("re")), part_from_json<T>(e.at("im"))));
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed matrix JSON: ") + ex.what());
    }
}

nlohmann::json grid_to_json(const Grid& grid) {
    return {{"half_width", grid.half_width()},
            {"spacing", to_string(grid.spacing())},
            {"boundary", to_string(grid.boundary())},
            {"hbar", to_string(grid.hbar())}};
}

Grid grid_from_json(const nlohmann::json& doc) {
    try {
        return Grid(doc.at("half_width").get<int>(), parse_rational(doc.at("spacing").get<std::string>()),
                    parse_boundary(doc.at("boundary").get<std::string>()),
                    parse_rational(doc.at("hbar").get<std::string>()));
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed grid JSON: ") + ex.what());
    }
}

template <Field T>
void write_wave_csv(std::ostream& os, const WaveVector<T>& psi) {
    using traits = scalar_traits<T>;
    os << "n,re,im\n";
    for (int n = psi.grid().min_row(); n <= psi.grid().max_row(); ++n)
        os << n << ',' << traits::render(traits::real(psi[n])) << ',' << traits::render(traits::imag(psi[n]))
           << '\n';
}

template <Field T>
WaveVector<T> read_wave_csv(std::istream& is, const Grid& grid) {
    WaveVector<T> out(grid);
    expect_header(is, "n,re,im");
    std::string line;
    int expected = grid.min_row();
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != 3) throw ValidationError("wave CSV line needs 3 fields: '" + line + "'");
        const int n = parse_int(fields[0]);
        if (n != expected) throw ValidationError("wave CSV rows out of order at '" + line + "'");
        out[n] = parse_value<T>(fields[1], fields[2]);
        ++expected;
    }
    if (expected != grid.max_row() + 1) throw DimensionError("wave CSV has the wrong number of rows");
    return out;
}

template <Field T>
nlohmann::json wave_to_json(const WaveVector<T>& psi) {
    using traits = scalar_traits<T>;
    nlohmann::json entries = nlohmann::json::array();
    for (int n = psi.grid().min_row(); n <= psi.grid().max_row(); ++n)
        entries.push_back(
            {{"n", n}, {"re", part_to_json<T>(traits::real(psi[n]))}, {"im", part_to_json<T>(traits::imag(psi[n]))}});
    return {{"grid", grid_to_json(psi.grid())},
            {"dim", psi.dim()},
            {"mode", to_string(traits::mode)},
            {"entries", std::move(entries)}};
}

template <Field T>
WaveVector<T> wave_from_json(const nlohmann::json& doc) {
    try {
        check_mode<T>(doc);
        WaveVector<T> out(grid_from_json(doc.at("grid")));
        const auto& entries = doc.at("entries");
        if (static_cast<int>(entries.size()) != out.dim()) throw DimensionError("wave JSON has the wrong length");
        for (const auto& e : entries)
            out[e.at("n").get<int>()] =
                scalar_traits<T>::from_parts(part_from_json<T>(e.at("re")), part_from_json<T>(e.at("im")));
        return out;
    } catch (const nlohmann::json::exception& ex) {
        throw ValidationError(std::string("malformed wave JSON: ") + ex.what());
    }
}

#define CCR_INSTANTIATE(T)                                                           \
    template void write_matrix_csv<T>(std::ostream&, const BandedMatrix<T>&);        \
    template BandedMatrix<T> read_matrix_csv<T>(std::istream&, const MatrixShape&);  \
    template nlohmann::json matrix_to_json<T>(const BandedMatrix<T>&);               \
    template BandedMatrix<T> matrix_from_json<T>(const nlohmann::json&);             \
    template void write_wave_csv<T>(std::ostream&, const WaveVector<T>&);            \
    template WaveVector<T> read_wave_csv<T>(std::istream&, const Grid&);             \
    template nlohmann::json wave_to_json<T>(const WaveVector<T>&);                   \
    template WaveVector<T> wave_from_json<T>(const nlohmann::json&);

CCR_INSTANTIATE(ExactComplex)
CCR_INSTANTIATE(FloatComplex)

#undef CCR_INSTANTIATE

}  // namespace ccr
