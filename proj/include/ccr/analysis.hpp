#pragma once

#include "ccr/banded_matrix.hpp"
#include "ccr/grid.hpp"
#include "ccr/operators.hpp"
#include "ccr/wave_vector.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ccr {

/// What [d/dq, q] psi is compared against, row by row.
///
/// Interior rows (|n| < N): (psi_{n+1} + psi_{n-1}) / 2.
/// Open edge rows: psi_{n-1}/2 at n = +N and psi_{n+1}/2 at n = -N, the only
/// in-grid neighbour. Periodic edge rows: the wrapped average, which the
/// corner entries of [d/dq, q] do not reproduce, so those residuals are nonzero.
template <Field T>
WaveVector<T> neighbour_average(const Grid& grid, const WaveVector<T>& psi);

/// [d/dq, q] psi minus neighbour_average. Exactly zero on interior rows in the
/// exact field for any psi, and on Open edge rows as well.
template <Field T>
WaveVector<T> averaging_residual(const Grid& grid, const WaveVector<T>& psi);

/// [p, q] psi - i hbar psi on every row.
template <Field T>
WaveVector<T> commutator_unit_residual(const Grid& grid, const WaveVector<T>& psi);

/// max over interior rows of |([p, q] psi)_n - i hbar psi_n|.
/// Leading behaviour for smooth psi: (hbar l^2 / 2) |psi''|.
template <Field T>
double commutator_vs_unit(const Grid& grid, const WaveVector<T>& psi);

/// [p, q] - i hbar 1.
template <Field T>
BandedMatrix<T> unit_deviation(const Grid& grid);

template <Field T>
struct TraceParadoxReport {
    int dim = 0;
    Boundary boundary = Boundary::Open;
    T trace_commutator;
    T fallacy_value;  ///< i hbar D, what Tr(i hbar 1) would demand
    double max_deviation_from_unit = 0.0;

    friend bool operator==(const TraceParadoxReport&, const TraceParadoxReport&) = default;
};

template <Field T>
TraceParadoxReport<T> trace_paradox(const Grid& grid);

struct ConvergenceRow {
    double ell = 0.0;
    double max_interior_error = 0.0;
    std::optional<double> observed_order;  ///< log2 of the previous/current error ratio

    friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct ConvergenceSetup {
    Rational ell0 = Rational(1, 2);
    int steps = 5;            ///< number of halvings; steps + 1 rows
    Rational window = 4;      ///< fixed physical half-width W
    Rational hbar = 1;
};

/// Runs commutator_vs_unit in the floating field on l_k = l0 / 2^k,
/// k = 0..steps, with N_k = floor(W / l_k) so [-W, W] stays fixed.
std::vector<ConvergenceRow> convergence_study(const std::function<double(double)>& f,
                                              const ConvergenceSetup& setup);

struct DispersionResult {
    int mode = 0;
    double eigenvalue = 0.0;  ///< Rayleigh quotient of p on the plane wave
    double expected = 0.0;    ///< -(hbar/l) sin(k l), k = 2 pi m / (D l)
    double residual = 0.0;    ///< max_n |(p psi)_n - eigenvalue psi_n|

    friend bool operator==(const DispersionResult&, const DispersionResult&) = default;
};

/// (psi)_n = exp(i 2 pi m n / D).
WaveVector<FloatComplex> plane_wave(const Grid& grid, int mode);

/// Periodic grids only (UnsupportedError otherwise); requires |mode| <= N.
DispersionResult dispersion_check(const Grid& grid, int mode);

}  // namespace ccr
