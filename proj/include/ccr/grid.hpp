#pragma once

#include "ccr/rational.hpp"

#include <string>
#include <string_view>

namespace ccr {

enum class Boundary { Open, Periodic };

std::string to_string(Boundary boundary);
Boundary parse_boundary(std::string_view text);

/// Centered, odd-dimensional discretization of the q axis.
///
/// Rows carry signed labels n = -N..+N with row 0 at q = 0 and q_n = spacing * n.
/// The storage index of row n is n + N.
class Grid {
public:
    /// Throws ValidationError unless half_width >= 1, spacing > 0 and hbar > 0.
    Grid(int half_width, Rational spacing, Boundary boundary = Boundary::Open, Rational hbar = 1);

    int half_width() const noexcept { return half_width_; }
    int dim() const noexcept { return 2 * half_width_ + 1; }
    const Rational& spacing() const noexcept { return spacing_; }
    const Rational& hbar() const noexcept { return hbar_; }
    Boundary boundary() const noexcept { return boundary_; }

    int min_row() const noexcept { return -half_width_; }
    int max_row() const noexcept { return half_width_; }
    bool contains(int n) const noexcept { return n >= -half_width_ && n <= half_width_; }
    int index_of(int n) const noexcept { return n + half_width_; }
    int row_of(int index) const noexcept { return index - half_width_; }

    Rational position(int n) const { return spacing_ * n; }

    /// |n| < N. The two outermost rows have only one in-grid neighbour.
    bool is_interior(int n) const noexcept { return n > -half_width_ && n < half_width_; }

    friend bool operator==(const Grid& a, const Grid& b) {
        return a.half_width_ == b.half_width_ && a.spacing_ == b.spacing_ &&
               a.boundary_ == b.boundary_ && a.hbar_ == b.hbar_;
    }

private:
    int half_width_;
    Rational spacing_;
    Boundary boundary_;
    Rational hbar_;
};

}  // namespace ccr
