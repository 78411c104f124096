#pragma once

#include "ccr/errors.hpp"
#include "ccr/grid.hpp"
#include "ccr/scalar.hpp"

#include <Eigen/Core>

#include <string>
#include <type_traits>
#include <utility>

namespace ccr {

/// Samples psi(l n) of a wavefunction, one per grid row; entry n is psi at q_n.
template <Field T>
class WaveVector {
public:
    using Scalar = T;
    using Values = Eigen::Matrix<T, Eigen::Dynamic, 1>;

    explicit WaveVector(Grid grid) : grid_(std::move(grid)), values_(Values::Zero(grid_.dim())) {}

    WaveVector(Grid grid, Values values) : grid_(std::move(grid)), values_(std::move(values)) {
        if (values_.size() != grid_.dim())
            throw DimensionError("wave vector length " + std::to_string(values_.size()) +
                                 " does not match grid dimension " + std::to_string(grid_.dim()));
    }

    const Grid& grid() const noexcept { return grid_; }
    int dim() const noexcept { return grid_.dim(); }
    const Values& values() const noexcept { return values_; }

    const T& operator[](int n) const { return values_(index(n)); }
    T& operator[](int n) { return values_(index(n)); }

    friend bool operator==(const WaveVector& a, const WaveVector& b) {
        if (!(a.grid_ == b.grid_)) return false;
        for (Eigen::Index i = 0; i < a.values_.size(); ++i)
            if (a.values_(i) != b.values_(i)) return false;
        return true;
    }

private:
    int index(int n) const {
        if (!grid_.contains(n))
            throw DimensionError("row " + std::to_string(n) + " outside grid");
        return grid_.index_of(n);
    }

    Grid grid_;
    Values values_;
};

/// Samples a real-valued f at every grid point. In the exact field f maps
/// Rational to Rational; in the floating field it maps double to double.
template <Field T, class F>
WaveVector<T> sample(const Grid& grid, F&& f) {
    WaveVector<T> out(grid);
    for (int n = grid.min_row(); n <= grid.max_row(); ++n) {
        if constexpr (std::is_same_v<T, ExactComplex>) {
            out[n] = ExactComplex(Rational(f(grid.position(n))));
        } else {
            out[n] = FloatComplex(static_cast<double>(f(to_double(grid.position(n)))), 0.0);
        }
    }
    return out;
}

inline WaveVector<FloatComplex> to_float(const WaveVector<ExactComplex>& psi) {
    WaveVector<FloatComplex> out(psi.grid());
    for (int n = psi.grid().min_row(); n <= psi.grid().max_row(); ++n) out[n] = to_float(psi[n]);
    return out;
}

}  // namespace ccr
