#pragma once

#include "ccr/errors.hpp"
#include "ccr/grid.hpp"
#include "ccr/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ccr {

struct MatrixShape {
    int dim = 1;
    int lower_bw = 0;
    int upper_bw = 0;
    Boundary boundary = Boundary::Open;

    friend bool operator==(const MatrixShape&, const MatrixShape&) = default;
};

template <class T>
struct MatrixEntry {
    int row;
    int col;
    T value;
};

/// Square complex matrix stored by diagonals.
///
/// Rows and columns are addressed by signed grid labels -N..+N, D = 2N+1.
/// Entries inside [-lower_bw, +upper_bw] of the main diagonal live in a
/// (lower_bw + upper_bw + 1) x D band array, column j of which holds column j
/// of the matrix. Anything outside the band (the wrap-around corners of a
/// periodic operator, and whatever products of those produce) is kept in an
/// explicit off-band table. Off-band slots never hold zero.
template <Field T>
class BandedMatrix {
public:
    using Scalar = T;
    using BandStorage = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    using Dense = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    using OffBand = std::map<std::pair<int, int>, T>;

    explicit BandedMatrix(const MatrixShape& shape) : shape_(shape) {
        if (shape.dim < 1 || shape.dim % 2 == 0)
            throw DimensionError("matrix dimension must be odd and positive, got " +
                                 std::to_string(shape.dim));
        if (shape.lower_bw < 0 || shape.upper_bw < 0 || shape.lower_bw >= shape.dim ||
            shape.upper_bw >= shape.dim)
            throw DimensionError("bandwidths must lie in [0, D-1]");
        band_ = BandStorage::Zero(shape.lower_bw + shape.upper_bw + 1, shape.dim);
    }

    BandedMatrix(int dim, int lower_bw, int upper_bw, Boundary boundary = Boundary::Open)
        : BandedMatrix(MatrixShape{dim, lower_bw, upper_bw, boundary}) {}

    const MatrixShape& shape() const noexcept { return shape_; }
    int dim() const noexcept { return shape_.dim; }
    int half_width() const noexcept { return (shape_.dim - 1) / 2; }
    int lower_bandwidth() const noexcept { return shape_.lower_bw; }
    int upper_bandwidth() const noexcept { return shape_.upper_bw; }
    Boundary boundary() const noexcept { return shape_.boundary; }

    bool contains(int row, int col) const noexcept {
        const int n = half_width();
        return row >= -n && row <= n && col >= -n && col <= n;
    }
    bool in_band(int row, int col) const noexcept {
        const int offset = col - row;
        return offset >= -shape_.lower_bw && offset <= shape_.upper_bw;
    }

    const T& operator()(int row, int col) const {
        check(row, col);
        if (in_band(row, col)) return band_(band_row(row, col), col + half_width());
        auto it = off_band_.find({row, col});
        return it == off_band_.end() ? zero() : it->second;
    }

    void set(int row, int col, T value) {
        check(row, col);
        if (in_band(row, col)) {
            band_(band_row(row, col), col + half_width()) = std::move(value);
        } else if (scalar_traits<T>::is_zero(value)) {
            off_band_.erase({row, col});
        } else {
            off_band_[{row, col}] = std::move(value);
        }
    }

    void add_to(int row, int col, const T& value) {
        check(row, col);
        if (in_band(row, col)) {
            band_(band_row(row, col), col + half_width()) += value;
            return;
        }
        auto [it, inserted] = off_band_.try_emplace({row, col}, value);
        if (!inserted) {
            it->second += value;
            if (scalar_traits<T>::is_zero(it->second)) off_band_.erase(it);
        } else if (scalar_traits<T>::is_zero(value)) {
            off_band_.erase(it);
        }
    }

    const OffBand& off_band() const noexcept { return off_band_; }

    /// Calls f(row, col, value) for every stored slot of `row` in column order,
    /// including explicit zeros inside the band.
    template <class F>
    void for_each_in_row(int row, F&& f) const {
        const int n = half_width();
        auto off = off_band_.lower_bound({row, -n});
        const auto off_end = off_band_.lower_bound({row + 1, -n});
        const int band_lo = std::max(-n, row - shape_.lower_bw);
        const int band_hi = std::min(n, row + shape_.upper_bw);
        for (; off != off_end && off->first.second < band_lo; ++off) f(row, off->first.second, off->second);
        for (int col = band_lo; col <= band_hi; ++col) f(row, col, band_(band_row(row, col), col + n));
        for (; off != off_end; ++off) f(row, off->first.second, off->second);
    }

    template <class F>
    void for_each_stored(F&& f) const {
        for (int row = -half_width(); row <= half_width(); ++row) for_each_in_row(row, f);
    }

    /// Nonzero entries in row-major order.
    std::vector<MatrixEntry<T>> nonzeros() const {
        std::vector<MatrixEntry<T>> out;
        for_each_stored([&](int r, int c, const T& v) {
            if (!scalar_traits<T>::is_zero(v)) out.push_back({r, c, v});
        });
        return out;
    }

    Dense to_dense() const {
        Dense out = Dense::Zero(dim(), dim());
        const int n = half_width();
        for_each_stored([&](int r, int c, const T& v) { out(r + n, c + n) = v; });
        return out;
    }

    /// Entrywise equality of the represented matrices; storage layout is ignored.
    friend bool operator==(const BandedMatrix& a, const BandedMatrix& b) {
        if (a.dim() != b.dim() || a.boundary() != b.boundary()) return false;
        const int n = a.half_width();
        for (int r = -n; r <= n; ++r)
            for (int c = -n; c <= n; ++c)
                if (a(r, c) != b(r, c)) return false;
        return true;
    }

private:
    int band_row(int row, int col) const noexcept { return shape_.upper_bw + row - col; }

    void check(int row, int col) const {
        if (!contains(row, col))
            throw DimensionError("index (" + std::to_string(row) + "," + std::to_string(col) +
                                 ") outside a matrix of dimension " + std::to_string(dim()));
    }

    static const T& zero() {
        static const T z(0);
        return z;
    }

    MatrixShape shape_;
    BandStorage band_;
    OffBand off_band_;
};

}  // namespace ccr
