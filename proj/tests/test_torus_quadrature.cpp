#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "boundstate/torus_quadrature.hpp"
#include "oracles.hpp"

using namespace boundstate;

namespace {
const double kE11 = (4.0 - M_PI) / (2 * M_PI);
const double kE12 = (16.0 - 5 * M_PI) / (2 * M_PI);
const double kE22 = (32.0 - 10 * M_PI) / M_PI;
}  // namespace

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(GridSpec(15), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(17), std::invalid_argument);
    CHECK_THROWS_AS(GridSpec(0), std::invalid_argument);
    CHECK_NOTHROW(GridSpec(16));
    CHECK_THROWS_AS(integrate_torus([](double, double) { return 1.0; }, GridSpec{14}),
                    std::invalid_argument);
}

TEST_CASE("integrate_torus basics") {
    const GridSpec g(64);
    CHECK(integrate_torus([](double, double) { return 1.0; }, g) ==
          doctest::Approx(4 * M_PI * M_PI).epsilon(1e-13));
    CHECK(integrate_torus([](double p1, double) { return std::cos(p1) * std::cos(p1); }, g) ==
          doctest::Approx(2 * M_PI * M_PI).epsilon(1e-13));
}

TEST_CASE("integrate_torus resolvent self-convergence") {
    auto f = [](double p1, double p2) {
        return 1.0 / (2.0 * (2.0 - std::cos(p1) - std::cos(p2)) + 1.0);  // z = -1
    };
    const double coarse = integrate_torus(f, GridSpec(256));
    const double fine = integrate_torus(f, GridSpec(512));
    CHECK(std::abs(coarse - fine) < 1e-10);
}

TEST_CASE("gram2 domain checks") {
    const GridSpec g(64);
    CHECK_THROWS_AS(gram2(4.0, g), std::domain_error);
    CHECK_THROWS_AS(gram2(1e-9, g), std::domain_error);       // near edge, inside
    CHECK_THROWS_AS(gram2(-1e-9, g), std::domain_error);      // near edge, outside
    CHECK_THROWS_AS(gram2(8.0 + 1e-9, g), std::domain_error);
    CHECK_NOTHROW(gram2(0.0, g));   // exact edge uses the singular-node rule
    CHECK_NOTHROW(gram2(8.0, g));
    CHECK_NOTHROW(gram2(-0.5, g));
}

TEST_CASE("gram2 decays like 1/z far from the band") {
    const GramMatrix2 a = gram2(-1e6, GridSpec(128));
    CHECK(std::abs(a.a11) < 1e-5);
    CHECK(std::abs(a.a12) < 1e-5);
    CHECK(std::abs(a.a22) < 1e-5);
}

TEST_CASE("edge constants against the Bessel-Laplace oracle and moment identities") {
    const EdgeConstants e = edge_constants(GridSpec(512));
    const double oracle = test_oracles::bessel_laplace_a11_at_zero();
    CHECK(oracle == doctest::Approx(kE11).epsilon(1e-8));
    CHECK(e.e11 == doctest::Approx(oracle).epsilon(1e-7));
    CHECK(e.e11 == doctest::Approx(0.1366198).epsilon(1e-6));
    CHECK(e.e12 == doctest::Approx(4 * e.e11 - 0.5).epsilon(1e-9));
    CHECK(e.e22 == doctest::Approx(16 * e.e11 - 2).epsilon(1e-9));
    CHECK(e.e12 == doctest::Approx(kE12).epsilon(1e-8));
    CHECK(e.e22 == doctest::Approx(kE22).epsilon(1e-8));
    CHECK(e.d > 0);
    CHECK(e.d == doctest::Approx((16.0 - 5 * M_PI) / (4 * M_PI)).epsilon(1e-8));
    CHECK(e.e12 / e.d == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(e.lambda_star == doctest::Approx(8.0).epsilon(1e-8));
    CHECK(e.mu_star == doctest::Approx(2 * (4.0 - M_PI) / (16.0 - 5 * M_PI)).epsilon(1e-8));
}

TEST_CASE("gram2 band reflection") {
    Gram2Evaluator gram(GridSpec{256});
    for (double z : {-5.0, -1.0, -0.1}) {
        const GramMatrix2 lo = gram(z), hi = gram(8.0 - z);
        CHECK(lo.a11 == doctest::Approx(-hi.a11).epsilon(1e-12));
        CHECK(lo.a22 == doctest::Approx(-hi.a22).epsilon(1e-12));
        CHECK(lo.a12 == doctest::Approx(hi.a12).epsilon(1e-12));
    }
    CHECK(gram(-1.0).a11 == doctest::Approx(-gram(9.0).a11).epsilon(1e-12));
}

TEST_CASE("gram2 monotone, signed, and Cauchy-Schwarz") {
    Gram2Evaluator gram(GridSpec{256});
    double prev11 = -1.0, prev22 = -1.0;
    for (int i = 1; i <= 50; ++i) {
        const double z = -10.0 + 10.0 * i / 51.0;
        const GramMatrix2 a = gram(z);
        CHECK(a.a11 > 0);
        CHECK(a.a22 > 0);
        CHECK(a.a11 > prev11);
        CHECK(a.a22 > prev22);
        CHECK(a.a11 * a.a22 - a.a12 * a.a12 > 0);
        prev11 = a.a11;
        prev22 = a.a22;
    }
    // above the band the functions are negative and shrink in magnitude with
    // z (the paper's Theorem 3.2(c) proof uses 1 + lambda a11 increasing)
    prev11 = prev22 = -1.0;
    for (int i = 1; i <= 50; ++i) {
        const double z = 8.0 + 10.0 * i / 51.0;
        const GramMatrix2 a = gram(z);
        CHECK(a.a11 < 0);
        CHECK(a.a22 < 0);
        if (i > 1) {
            CHECK(std::abs(a.a11) < std::abs(prev11));
            CHECK(std::abs(a.a22) < std::abs(prev22));
        }
        prev11 = a.a11;
        prev22 = a.a22;
    }
}

TEST_CASE("gram convergence in n") {
    for (double z : {-5.0, -0.06, 8.06, 13.0}) {
        const GramMatrix2 coarse = gram2(z, GridSpec(256));
        const GramMatrix2 fine = gram2(z, GridSpec(512));
        CHECK(std::abs(coarse.a11 - fine.a11) < 1e-8);
        CHECK(std::abs(coarse.a12 - fine.a12) < 1e-8);
        CHECK(std::abs(coarse.a22 - fine.a22) < 1e-8);
    }
    const Quasimomentum K{M_PI / 2, 0.0};
    const GramMatrix7 coarse = gram7(K, -2.0, GridSpec(256));
    const GramMatrix7 fine = gram7(K, -2.0, GridSpec(512));
    for (int m = 0; m < 7; ++m)
        for (int n = 0; n < 7; ++n) CHECK(std::abs(coarse.g[m][n] - fine.g[m][n]) < 1e-8);
}

TEST_CASE("gram7 degenerate band closed form") {
    // K = (pi,pi): E == 4, so g = M / (4 - z) with M the diagonal moment matrix
    const GramMatrix7 g = gram7({M_PI, M_PI}, 5.0, GridSpec(64));
    CHECK(g.g[0][0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(g.g[1][1] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(g.g[3][3] == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(g.g[5][5] == doctest::Approx(-0.25).epsilon(1e-12));
    CHECK(g.g[6][6] == doctest::Approx(-0.25).epsilon(1e-12));
    for (int m = 0; m < 7; ++m)
        for (int n = m + 1; n < 7; ++n) CHECK(g.g[m][n] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gram7 symmetry and diagonal signs") {
    const GridSpec g(128);
    const GramMatrix7 below = gram7({0.3, -1.1}, -2.0, g);
    const GramMatrix7 above = gram7({0.3, -1.1}, essential_band({0.3, -1.1}).e_max + 1.5, g);
    for (int m = 0; m < 7; ++m) {
        CHECK(below.g[m][m] > 0);
        CHECK(above.g[m][m] < 0);
        for (int n = 0; n < 7; ++n) CHECK(below.g[m][n] == below.g[n][m]);
    }
    CHECK_THROWS_AS(gram7({0.3, -1.1}, 4.0, g), std::domain_error);
}

TEST_CASE("gram7 swap symmetry and antisymmetric combination reproduce gram2") {
    const GridSpec g(256);
    const double z = -1.0;
    const GramMatrix7 s = gram7({0, 0}, z, g);
    CHECK(s.g[1][1] == doctest::Approx(s.g[2][2]).epsilon(1e-12));
    CHECK(s.g[3][3] == doctest::Approx(s.g[4][4]).epsilon(1e-12));
    const GramMatrix2 a = gram2(z, g);
    // phi_1 = e1 - e2, phi_2 = e3 - e4 and a_ij carries an extra 1/2
    CHECK(a.a11 == doctest::Approx((s.g[1][1] + s.g[2][2] - 2 * s.g[1][2]) / 2).epsilon(1e-10));
    CHECK(a.a22 == doctest::Approx((s.g[3][3] + s.g[4][4] - 2 * s.g[3][4]) / 2).epsilon(1e-10));
    CHECK(a.a12 ==
          doctest::Approx((s.g[1][3] - s.g[1][4] - s.g[2][3] + s.g[2][4]) / 2).epsilon(1e-10));
}
