#include "ccr/analysis.hpp"
#include "ccr/report_io.hpp"
#include "ccr/serialization.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace ccr;
using C = ExactComplex;

TEST_CASE("matrix CSV layout") {
    const Grid g(1, 1);
    std::ostringstream os;
    write_matrix_csv(os, build_momentum<C>(g));
    CHECK(os.str() ==
          "row,col,re,im\n"
          "-1,0,0,1/2\n"
          "0,-1,0,-1/2\n"
          "0,1,0,1/2\n"
          "1,0,0,-1/2\n");

    std::ostringstream fs;
    write_matrix_csv(fs, build_momentum<FloatComplex>(Grid(1, Rational(1, 10))));
    CHECK(fs.str() ==
          "row,col,re,im\n"
          "-1,0,0,5\n"
          "0,-1,0,-5\n"
          "0,1,0,5\n"
          "1,0,0,-5\n");
}

TEST_CASE("matrix CSV and JSON round-trip (property, exact)") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const int dim = test::random_odd_dim(rng);
        const auto a = test::random_banded(rng, dim, trial % 2 ? Boundary::Periodic : Boundary::Open);

        std::ostringstream os;
        write_matrix_csv(os, a);
        std::istringstream is(os.str());
        const auto back = read_matrix_csv<C>(is, a.shape());
        CHECK(back == a);

        const auto json_back = matrix_from_json<C>(nlohmann::json::parse(matrix_to_json(a).dump()));
        CHECK(json_back == a);
        CHECK(json_back.shape() == a.shape());
    }
}

TEST_CASE("floating matrices round-trip bit-exactly") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 6;
        const Grid g(n, Rational(1, 3 + trial), Boundary::Periodic, Rational(7, 5));
        const auto a = matmul(build_momentum<FloatComplex>(g), build_momentum<FloatComplex>(g));
        std::ostringstream os;
        write_matrix_csv(os, a);
        std::istringstream is(os.str());
        CHECK(read_matrix_csv<FloatComplex>(is, a.shape()) == a);
        CHECK(matrix_from_json<FloatComplex>(nlohmann::json::parse(matrix_to_json(a).dump())) == a);
    }
}

TEST_CASE("deserialization errors") {
    const MatrixShape shape{3, 1, 1, Boundary::Open};
    auto read = [&](const std::string& text) {
        std::istringstream is(text);
        return read_matrix_csv<C>(is, shape);
    };
    CHECK_THROWS_AS(read("r,c,re,im\n"), ValidationError);
    CHECK_THROWS_AS(read("row,col,re,im\n0,0,1\n"), ValidationError);
    CHECK_THROWS_AS(read("row,col,re,im\n0,x,1,0\n"), ValidationError);
    CHECK_THROWS_AS(read("row,col,re,im\n5,0,1,0\n"), DimensionError);
    CHECK_THROWS_AS(read("row,col,re,im\n0,0,1,0\n0,0,2,0\n"), ValidationError);
    CHECK_THROWS_AS(read("row,col,re,im\n0,0,1/0,0\n"), ValidationError);

    auto doc = matrix_to_json(build_position<C>(Grid(1, 1)));
    CHECK_THROWS_AS(matrix_from_json<FloatComplex>(doc), ModeError);
    doc.erase("dim");
    CHECK_THROWS_AS(matrix_from_json<C>(doc), ValidationError);
}

TEST_CASE("wave vector round-trip") {
    std::mt19937 rng(5);
    const Grid g(4, Rational(1, 3), Boundary::Periodic, 2);
    const auto psi = test::random_wave(rng, g);
    std::ostringstream os;
    write_wave_csv(os, psi);
    std::istringstream is(os.str());
    CHECK(read_wave_csv<C>(is, g) == psi);
    CHECK(wave_from_json<C>(nlohmann::json::parse(wave_to_json(psi).dump())) == psi);
    CHECK_THROWS_AS(wave_from_json<FloatComplex>(wave_to_json(psi)), ModeError);

    std::istringstream short_csv("n,re,im\n-4,0,0\n");
    CHECK_THROWS_AS(read_wave_csv<C>(short_csv, g), DimensionError);
}

TEST_CASE("report formats") {
    SUBCASE("trace report") {
        const auto report = trace_paradox<C>(Grid(50, 1));
        std::ostringstream os;
        write_trace_report_csv(os, report);
        CHECK(os.str() == "D,boundary,trace_re,trace_im,fallacy_re,fallacy_im,max_deviation\n"
                          "101,open,0,0,0,101,1\n");
        std::istringstream is(os.str());
        CHECK(read_trace_report_csv<C>(is) == report);
        CHECK(trace_report_from_json<C>(nlohmann::json::parse(trace_report_to_json(report).dump())) == report);
    }
    SUBCASE("convergence rows") {
        const std::vector<ConvergenceRow> rows{{0.5, 0.25, std::nullopt}, {0.25, 0.0625, 2.0}, {0.125, 1e-20, 0.3}};
        std::ostringstream os;
        write_convergence_csv(os, rows);
        CHECK(os.str() == "ell,max_interior_error,observed_order\n0.5,0.25,\n0.25,0.0625,2\n0.125,1e-20,0.3\n");
        std::istringstream is(os.str());
        CHECK(read_convergence_csv(is) == rows);
        CHECK(convergence_from_json(nlohmann::json::parse(convergence_to_json(rows).dump())) == rows);
    }
    SUBCASE("dispersion") {
        const auto r = dispersion_check(Grid(2, 1, Boundary::Periodic), 1);
        std::ostringstream os;
        write_dispersion_csv(os, r);
        std::istringstream is(os.str());
        CHECK(read_dispersion_csv(is) == r);
    }
}
