#include "ccr/grid.hpp"

#include "ccr/errors.hpp"

namespace ccr {

Grid::Grid(int half_width, Rational spacing, Boundary boundary, Rational hbar)
    : half_width_(half_width), spacing_(std::move(spacing)), boundary_(boundary), hbar_(std::move(hbar)) {
    if (half_width_ < 1) throw ValidationError("grid half-width N must be >= 1, got " + std::to_string(half_width_));
    if (sgn(spacing_) <= 0) throw ValidationError("grid spacing must be positive, got " + spacing_.get_str());
    if (sgn(hbar_) <= 0) throw ValidationError("hbar must be positive, got " + hbar_.get_str());
}

std::string to_string(Boundary boundary) { return boundary == Boundary::Open ? "open" : "periodic"; }

Boundary parse_boundary(std::string_view text) {
    if (text == "open") return Boundary::Open;
    if (text == "periodic") return Boundary::Periodic;
    throw ValidationError("unknown boundary '" + std::string(text) + "' (expected open|periodic)");
}

}  // namespace ccr
