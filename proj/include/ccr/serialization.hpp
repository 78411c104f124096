#pragma once

#include "ccr/banded_matrix.hpp"
#include "ccr/wave_vector.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ccr {

// Matrix CSV: header "row,col,re,im", then one line per nonzero entry in
// row-major order. Indices are signed grid labels. Exact values render as
// canonical "p/q" (bare integers for unit denominators); floating values use
// the shortest decimal that round-trips.
//
// Matrix JSON: {"dim", "lower_bw", "upper_bw", "boundary", "mode", "entries"}
// where entries is a list of {"row", "col", "re", "im"}. Exact parts are
// strings, floating parts are numbers.

template <Field T>
void write_matrix_csv(std::ostream& os, const BandedMatrix<T>& a);

/// CSV carries no shape, so the caller supplies it. Throws ValidationError on bad input.
template <Field T>
BandedMatrix<T> read_matrix_csv(std::istream& is, const MatrixShape& shape);

template <Field T>
nlohmann::json matrix_to_json(const BandedMatrix<T>& a);

/// Throws ModeError if the document's mode differs from T's field.
template <Field T>
BandedMatrix<T> matrix_from_json(const nlohmann::json& doc);

// Wave vector CSV: header "n,re,im", one line per grid row (zeros included).
// JSON: {"grid": {"half_width", "spacing", "boundary", "hbar"}, "dim", "mode", "entries"}
// with entries a list of {"n", "re", "im"}.

template <Field T>
void write_wave_csv(std::ostream& os, const WaveVector<T>& psi);

template <Field T>
WaveVector<T> read_wave_csv(std::istream& is, const Grid& grid);

template <Field T>
nlohmann::json wave_to_json(const WaveVector<T>& psi);

template <Field T>
WaveVector<T> wave_from_json(const nlohmann::json& doc);

nlohmann::json grid_to_json(const Grid& grid);
Grid grid_from_json(const nlohmann::json& doc);

/// Whole-string signed integer; ValidationError otherwise.
int parse_int(const std::string& text);

/// Splits one CSV line on commas; no quoting is used by any format here.
std::vector<std::string> split_csv_line(const std::string& line);

}  // namespace ccr
