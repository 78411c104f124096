#include "ccr/analysis.hpp"

#include "ccr/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ccr {
namespace {

void require_on_grid(const Grid& grid, int dim) {
    if (grid.dim() != dim)
        throw DimensionError("wave vector length " + std::to_string(dim) + " does not match grid dimension " +
                             std::to_string(grid.dim()));
}

template <Field T>
WaveVector<T> difference(const WaveVector<T>& a, const WaveVector<T>& b) {
    WaveVector<T> out(a.grid());
    for (int n = a.grid().min_row(); n <= a.grid().max_row(); ++n) out[n] = a[n] - b[n];
    return out;
}

}  // namespace

template <Field T>
WaveVector<T> neighbour_average(const Grid& grid, const WaveVector<T>& psi) {
    require_on_grid(grid, psi.dim());
    const T half = scalar_traits<T>::make(Rational(1, 2));
    const int top = grid.max_row();
    WaveVector<T> out(psi.grid());
    for (int n = -top; n <= top; ++n) {
        if (grid.is_interior(n)) {
            out[n] = half * (psi[n + 1] + psi[n - 1]);
        } else if (grid.boundary() == Boundary::Open) {
            out[n] = half * psi[n == top ? n - 1 : n + 1];
        } else {
            const int above = n == top ? -top : n + 1;
            const int below = n == -top ? top : n - 1;
            out[n] = half * (psi[above] + psi[below]);
        }
    }
    return out;
}

template <Field T>
WaveVector<T> averaging_residual(const Grid& grid, const WaveVector<T>& psi) {
    require_on_grid(grid, psi.dim());
    const auto bracket = commutator(build_derivative<T>(grid), build_position<T>(grid));
    return difference(ccr::apply(bracket, psi), neighbour_average(grid, psi));
}

template <Field T>
WaveVector<T> commutator_unit_residual(const Grid& grid, const WaveVector<T>& psi) {
    require_on_grid(grid, psi.dim());
    const auto bracket = commutator(build_momentum<T>(grid), build_position<T>(grid));
    const auto unit = identity_scaled<T>(grid, scalar_traits<T>::make(0, grid.hbar()));
    return difference(ccr::apply(bracket, psi), ccr::apply(unit, psi));
}

template <Field T>
double commutator_vs_unit(const Grid& grid, const WaveVector<T>& psi) {
    const auto residual = commutator_unit_residual(grid, psi);
    double worst = 0.0;
    for (int n = grid.min_row(); n <= grid.max_row(); ++n)
        if (grid.is_interior(n)) worst = std::max(worst, scalar_traits<T>::magnitude(residual[n]));
    return worst;
}

template <Field T>
BandedMatrix<T> unit_deviation(const Grid& grid) {
    const auto bracket = commutator(build_momentum<T>(grid), build_position<T>(grid));
    return subtract(bracket, identity_scaled<T>(grid, scalar_traits<T>::make(0, grid.hbar())));
}

template <Field T>
TraceParadoxReport<T> trace_paradox(const Grid& grid) {
    const auto bracket = commutator(build_momentum<T>(grid), build_position<T>(grid));
    const auto unit = identity_scaled<T>(grid, scalar_traits<T>::make(0, grid.hbar()));
    TraceParadoxReport<T> report;
    report.dim = grid.dim();
    report.boundary = grid.boundary();
    report.trace_commutator = trace(bracket);
    report.fallacy_value = trace(unit);
    report.max_deviation_from_unit = max_magnitude(subtract(bracket, unit));
    return report;
}

std::vector<ConvergenceRow> convergence_study(const std::function<double(double)>& f,
                                              const ConvergenceSetup& setup) {
    if (setup.steps < 2) throw ValidationError("convergence study needs at least 2 halvings");
    if (sgn(setup.ell0) <= 0) throw ValidationError("initial spacing must be positive");
    if (sgn(setup.window) <= 0) throw ValidationError("window must be positive");

    std::vector<ConvergenceRow> rows;
    Rational ell = setup.ell0;
    for (int k = 0; k <= setup.steps; ++k) {
        const Rational ratio = setup.window / ell;
        const mpz_class n_k = ratio.get_num() / ratio.get_den();
        if (n_k < 1) throw ValidationError("window narrower than the initial spacing");
        if (n_k > 1'000'000) throw ValidationError("window/spacing ratio too large");
        const Grid grid(static_cast<int>(n_k.get_si()), ell, Boundary::Open, setup.hbar);
        const auto psi = sample<FloatComplex>(grid, f);

        ConvergenceRow row;
        row.ell = to_double(ell);
        row.max_interior_error = commutator_vs_unit(grid, psi);
        if (!rows.empty() && rows.back().max_interior_error > 0.0 && row.max_interior_error > 0.0)
            row.observed_order = std::log2(rows.back().max_interior_error / row.max_interior_error);
        rows.push_back(row);
        ell /= 2;
    }
    return rows;
}

WaveVector<FloatComplex> plane_wave(const Grid& grid, int mode) {
    WaveVector<FloatComplex> out(grid);
    const int dim = grid.dim();
    for (int n = grid.min_row(); n <= grid.max_row(); ++n) {
        // Reduce m n mod D in integers so the phase stays in [0, 2 pi).
        const long phase_index = ((static_cast<long>(mode) * n) % dim + dim) % dim;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase_index) / dim;
        out[n] = std::polar(1.0, angle);
    }
    return out;
}

DispersionResult dispersion_check(const Grid& grid, int mode) {
    if (grid.boundary() != Boundary::Periodic)
        throw UnsupportedError("dispersion check requires a periodic grid");
    if (std::abs(mode) > grid.half_width())
        throw ValidationError("mode " + std::to_string(mode) + " outside |m| <= N = " +
                              std::to_string(grid.half_width()));

    const auto psi = plane_wave(grid, mode);
    const auto p_psi = ccr::apply(build_momentum<FloatComplex>(grid), psi);

    FloatComplex numerator = 0.0;
    double norm = 0.0;
    for (int n = grid.min_row(); n <= grid.max_row(); ++n) {
        numerator += std::conj(psi[n]) * p_psi[n];
        norm += std::norm(psi[n]);
    }

    DispersionResult result;
    result.mode = mode;
    result.eigenvalue = numerator.real() / norm;
    const double kl = 2.0 * std::numbers::pi * mode / grid.dim();
    result.expected = -to_double(grid.hbar() / grid.spacing()) * std::sin(kl);
    for (int n = grid.min_row(); n <= grid.max_row(); ++n)
        result.residual = std::max(result.residual, std::abs(p_psi[n] - result.eigenvalue * psi[n]));
    return result;
}

#define CCR_INSTANTIATE(T)                                                                 \
    template WaveVector<T> neighbour_average<T>(const Grid&, const WaveVector<T>&);        \
    template WaveVector<T> averaging_residual<T>(const Grid&, const WaveVector<T>&);       \
    template WaveVector<T> commutator_unit_residual<T>(const Grid&, const WaveVector<T>&); \
    template double commutator_vs_unit<T>(const Grid&, const WaveVector<T>&);              \
    template BandedMatrix<T> unit_deviation<T>(const Grid&);                               \
    template TraceParadoxReport<T> trace_paradox<T>(const Grid&);

CCR_INSTANTIATE(ExactComplex)
CCR_INSTANTIATE(FloatComplex)

#undef CCR_INSTANTIATE

}  // namespace ccr
