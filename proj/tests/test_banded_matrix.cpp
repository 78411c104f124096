#include "ccr/banded_matrix.hpp"
#include "ccr/operators.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace ccr;
using test::Dense;

TEST_CASE("band storage and off-band slots") {
    BandedMatrix<ExactComplex> a(5, 1, 0);
    CHECK(a.half_width() == 2);
    a.set(0, -1, ExactComplex(3));
    a.set(2, -2, ExactComplex(Rational(1, 2)));  // outside the band
    CHECK(a(0, -1) == ExactComplex(3));
    CHECK(a(2, -2) == ExactComplex(Rational(1, 2)));
    CHECK(a(-2, 2) == ExactComplex(0));
    CHECK(a.off_band().size() == 1);

    a.add_to(2, -2, ExactComplex(Rational(-1, 2)));
    CHECK(a.off_band().empty());
    a.set(-2, 2, ExactComplex(0));
    CHECK(a.off_band().empty());

    CHECK_THROWS_AS(a(3, 0), DimensionError);
    CHECK_THROWS_AS(BandedMatrix<ExactComplex>(4, 0, 0), DimensionError);
    CHECK_THROWS_AS(BandedMatrix<ExactComplex>(3, 3, 0), DimensionError);
}

TEST_CASE("row iteration visits band and off-band slots in column order") {
    BandedMatrix<ExactComplex> a(5, 0, 1);
    a.set(1, -2, ExactComplex(7));
    a.set(1, 1, ExactComplex(1));
    a.set(1, 2, ExactComplex(2));
    std::vector<int> cols;
    a.for_each_in_row(1, [&](int, int c, const ExactComplex&) { cols.push_back(c); });
    CHECK(cols == std::vector<int>{-2, 1, 2});
}

TEST_CASE("matmul agrees with the dense oracle on random banded inputs") {
    std::mt19937 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = test::random_odd_dim(rng);
        const Boundary b = trial % 2 ? Boundary::Periodic : Boundary::Open;
        const auto x = test::random_banded(rng, dim, b);
        const auto y = test::random_banded(rng, dim, b);
        const auto product = matmul(x, y);
        CHECK(test::equals_dense(product, test::dense_product(test::densify(x), test::densify(y))));
        CHECK(product.lower_bandwidth() <= std::min(dim - 1, x.lower_bandwidth() + y.lower_bandwidth()));
        CHECK(product.upper_bandwidth() <= std::min(dim - 1, x.upper_bandwidth() + y.upper_bandwidth()));
    }
}

TEST_CASE("floating matmul matches Eigen's dense product") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = test::random_odd_dim(rng);
        const auto x = to_float(test::random_banded(rng, dim, Boundary::Open));
        const auto y = to_float(test::random_banded(rng, dim, Boundary::Open));
        const Eigen::MatrixXcd expected = x.to_dense() * y.to_dense();
        const Eigen::MatrixXcd got = matmul(x, y).to_dense();
        CHECK((expected - got).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + expected.cwiseAbs().maxCoeff()));
    }
}

TEST_CASE("A * I = A") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 2 * (1 + trial % 4) + 1;
        const Grid grid((dim - 1) / 2, 1);
        const auto a = test::random_banded(rng, dim, Boundary::Open);
        const auto unit = identity_scaled<ExactComplex>(grid, ExactComplex(1));
        CHECK(matmul(a, unit) == a);
        CHECK(matmul(unit, a) == a);
    }
}

TEST_CASE("operand compatibility") {
    BandedMatrix<ExactComplex> a(3, 1, 1), b(5, 1, 1), c(3, 1, 1, Boundary::Periodic);
    CHECK_THROWS_AS(matmul(a, b), DimensionError);
    CHECK_THROWS_AS(add(a, b), DimensionError);
    CHECK_THROWS_AS(matmul(a, c), ValidationError);
    const Grid g5(2, 1);
    CHECK_THROWS_AS(ccr::apply(a, WaveVector<ExactComplex>(g5)), DimensionError);
}

TEST_CASE("add, subtract and scale are entrywise") {
    std::mt19937 rng(3);
    const auto x = test::random_banded(rng, 7, Boundary::Open);
    const auto y = test::random_banded(rng, 7, Boundary::Open);
    const ExactComplex c(Rational(2, 3), Rational(-1));
    const auto sum = x + y;
    const auto diff = x - y;
    const auto scaled = c * x;
    for (int r = -3; r <= 3; ++r)
        for (int k = -3; k <= 3; ++k) {
            CHECK(sum(r, k) == x(r, k) + y(r, k));
            CHECK(diff(r, k) == x(r, k) - y(r, k));
            CHECK(scaled(r, k) == c * x(r, k));
        }
}
