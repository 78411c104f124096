#pragma once

#include "ccr/banded_matrix.hpp"
#include "ccr/errors.hpp"
#include "ccr/grid.hpp"
#include "ccr/scalar.hpp"
#include "ccr/wave_vector.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ccr {

// ---------------------------------------------------------------------------
// Construction of the canonical operators on a grid.
// ---------------------------------------------------------------------------

/// Diagonal position operator, entry (n, n) = l n. Independent of the boundary rule.
template <Field T>
BandedMatrix<T> build_position(const Grid& grid) {
    BandedMatrix<T> q(grid.dim(), 0, 0, grid.boundary());
    for (int n = grid.min_row(); n <= grid.max_row(); ++n)
        q.set(n, n, scalar_traits<T>::make(grid.position(n)));
    return q;
}

/// Symmetric difference (psi_{n+1} - psi_{n-1}) / 2l as a matrix.
///
/// Open truncates the stencil at the two outer rows. Periodic adds the corner
/// entries (N, -N) = +1/2l and (-N, N) = -1/2l. Real antisymmetric either way.
template <Field T>
BandedMatrix<T> build_derivative(const Grid& grid) {
    const Rational half_inv = Rational(1) / (2 * grid.spacing());
    const T up = scalar_traits<T>::make(half_inv);
    const T down = scalar_traits<T>::make(Rational(-half_inv));
    const int n_max = grid.max_row();

    BandedMatrix<T> d(grid.dim(), 1, 1, grid.boundary());
    for (int n = grid.min_row(); n <= n_max; ++n) {
        if (n < n_max) d.set(n, n + 1, up);
        if (n > -n_max) d.set(n, n - 1, down);
    }
    if (grid.boundary() == Boundary::Periodic) {
        d.set(n_max, -n_max, up);
        d.set(-n_max, n_max, down);
    }
    return d;
}

/// Multiplies every entry by c.
template <Field T>
BandedMatrix<T> scale(const T& c, const BandedMatrix<T>& a) {
    BandedMatrix<T> out(a.shape());
    a.for_each_stored([&](int r, int col, const T& v) { out.set(r, col, c * v); });
    return out;
}

/// p = i hbar d/dq, following the +i sign convention. Hermitian.
template <Field T>
BandedMatrix<T> build_momentum(const Grid& grid) {
    return scale(scalar_traits<T>::make(0, grid.hbar()), build_derivative<T>(grid));
}

/// c times the unit matrix; with c = i hbar this is the canonical right-hand side.
template <Field T>
BandedMatrix<T> identity_scaled(const Grid& grid, const T& c) {
    BandedMatrix<T> out(grid.dim(), 0, 0, grid.boundary());
    for (int n = grid.min_row(); n <= grid.max_row(); ++n) out.set(n, n, c);
    return out;
}

// ---------------------------------------------------------------------------
// Banded algebra.
// ---------------------------------------------------------------------------

namespace detail {

template <Field T>
void require_compatible(const BandedMatrix<T>& a, const BandedMatrix<T>& b, const char* op) {
    if (a.dim() != b.dim())
        throw DimensionError(std::string(op) + ": dimension mismatch " + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()));
    if (a.boundary() != b.boundary())
        throw ValidationError(std::string(op) + ": operands built with different boundary rules");
}

template <Field T>
BandedMatrix<T> combine(const BandedMatrix<T>& a, const BandedMatrix<T>& b, bool subtract, const char* op) {
    require_compatible(a, b, op);
    BandedMatrix<T> out(MatrixShape{a.dim(), std::max(a.lower_bandwidth(), b.lower_bandwidth()),
                                    std::max(a.upper_bandwidth(), b.upper_bandwidth()), a.boundary()});
    a.for_each_stored([&](int r, int c, const T& v) { out.add_to(r, c, v); });
    b.for_each_stored([&](int r, int c, const T& v) { out.add_to(r, c, subtract ? T(-v) : v); });
    return out;
}

}  // namespace detail

template <Field T>
BandedMatrix<T> add(const BandedMatrix<T>& a, const BandedMatrix<T>& b) {
    return detail::combine(a, b, false, "add");
}

template <Field T>
BandedMatrix<T> subtract(const BandedMatrix<T>& a, const BandedMatrix<T>& b) {
    return detail::combine(a, b, true, "subtract");
}

/// Exact product. The band of AB spans bw(A) + bw(B) on each side, capped at D-1;
/// contributions from off-band entries that land outside it stay off-band.
template <Field T>
BandedMatrix<T> matmul(const BandedMatrix<T>& a, const BandedMatrix<T>& b) {
    detail::require_compatible(a, b, "matmul");
    const int cap = a.dim() - 1;
    BandedMatrix<T> out(MatrixShape{a.dim(), std::min(cap, a.lower_bandwidth() + b.lower_bandwidth()),
                                    std::min(cap, a.upper_bandwidth() + b.upper_bandwidth()), a.boundary()});
    const int n = a.half_width();
    for (int row = -n; row <= n; ++row) {
        a.for_each_in_row(row, [&](int, int k, const T& aik) {
            if (scalar_traits<T>::is_zero(aik)) return;
            b.for_each_in_row(k, [&](int, int col, const T& bkj) {
                if (!scalar_traits<T>::is_zero(bkj)) out.add_to(row, col, aik * bkj);
            });
        });
    }
    return out;
}

template <Field T>
BandedMatrix<T> commutator(const BandedMatrix<T>& a, const BandedMatrix<T>& b) {
    return subtract(matmul(a, b), matmul(b, a));
}

template <Field T>
T trace(const BandedMatrix<T>& a) {
    T sum(0);
    for (int n = -a.half_width(); n <= a.half_width(); ++n) sum += a(n, n);
    return sum;
}

/// Matrix-vector product; the result lives on psi's grid.
template <Field T>
WaveVector<T> apply(const BandedMatrix<T>& a, const WaveVector<T>& psi) {
    if (a.dim() != psi.dim())
        throw DimensionError("apply: matrix dimension " + std::to_string(a.dim()) +
                             " vs vector length " + std::to_string(psi.dim()));
    WaveVector<T> out(psi.grid());
    const int n = a.half_width();
    for (int row = -n; row <= n; ++row) {
        T acc(0);
        a.for_each_in_row(row, [&](int, int col, const T& v) {
            if (!scalar_traits<T>::is_zero(v)) acc += v * psi[col];
        });
        out[row] = std::move(acc);
    }
    return out;
}

template <Field T>
BandedMatrix<T> operator+(const BandedMatrix<T>& a, const BandedMatrix<T>& b) { return add(a, b); }
template <Field T>
BandedMatrix<T> operator-(const BandedMatrix<T>& a, const BandedMatrix<T>& b) { return subtract(a, b); }
template <Field T>
BandedMatrix<T> operator*(const BandedMatrix<T>& a, const BandedMatrix<T>& b) { return matmul(a, b); }
template <Field T>
BandedMatrix<T> operator*(const T& c, const BandedMatrix<T>& a) { return scale(c, a); }
template <Field T>
WaveVector<T> operator*(const BandedMatrix<T>& a, const WaveVector<T>& psi) { return apply(a, psi); }

// ---------------------------------------------------------------------------
// Structure checks. Both return 0 exactly when the property holds exactly.
// ---------------------------------------------------------------------------

/// max |A - A^dagger| over all entries.
template <Field T>
double hermitian_deviation(const BandedMatrix<T>& a) {
    using traits = scalar_traits<T>;
    typename traits::real_type worst(0);
    a.for_each_stored([&](int r, int c, const T& v) {
        const T diff = v - traits::conj(a(c, r));
        auto m = traits::squared_magnitude(diff);
        if (m > worst) worst = m;
    });
    return traits::root(worst);
}

/// max over entries of |Re(A + A^T)| and |Im A|: zero iff A is real antisymmetric.
template <Field T>
double antisymmetry_deviation(const BandedMatrix<T>& a) {
    using traits = scalar_traits<T>;
    double worst = 0.0;
    a.for_each_stored([&](int r, int c, const T& v) {
        const T sum = v + a(c, r);
        worst = std::max(worst, traits::magnitude(T(traits::real(sum))));
        worst = std::max(worst, traits::magnitude(T(traits::imag(v))));
    });
    return worst;
}

/// Largest entry magnitude.
template <Field T>
double max_magnitude(const BandedMatrix<T>& a) {
    double worst = 0.0;
    a.for_each_stored([&](int, int, const T& v) { worst = std::max(worst, scalar_traits<T>::magnitude(v)); });
    return worst;
}

inline BandedMatrix<FloatComplex> to_float(const BandedMatrix<ExactComplex>& a) {
    BandedMatrix<FloatComplex> out(a.shape());
    a.for_each_stored([&](int r, int c, const ExactComplex& v) { out.set(r, c, to_float(v)); });
    return out;
}

}  // namespace ccr
