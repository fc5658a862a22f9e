#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "boundstate/determinant_spectrum.hpp"
#include "boundstate/lattice_oracle.hpp"

using namespace boundstate;

TEST_CASE("eigensolve basics") {
    SymMatrix ident;
    ident.dim = 4;
    ident.a = {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1};
    for (double w : eigensolve(ident)) CHECK(w == doctest::Approx(1.0));

    SymMatrix flip;
    flip.dim = 2;
    flip.a = {0, 1, 1, 0};
    const auto ev = eigensolve(flip);
    CHECK(ev[0] == doctest::Approx(-1.0));
    CHECK(ev[1] == doctest::Approx(1.0));

    SymMatrix bad;
    bad.dim = 2;
    bad.a = {0, 1, 2, 0};
    CHECK_THROWS_AS(eigensolve(bad), std::invalid_argument);
}

TEST_CASE("box and sector validation") {
    CHECK_THROWS_AS(build_matrix({0, 0, 0}, {0, 0}, {5, Sector::full_even}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_matrix({0, 0, 0}, {0.5, 0.0}, {12, Sector::swap_symmetric}),
                    std::invalid_argument);
    CHECK_NOTHROW(build_matrix({0, 0, 0}, {0.5, 0.5}, {12, Sector::swap_antisymmetric}));
}

TEST_CASE("free compression stays inside the band") {
    const auto ev = eigensolve(build_matrix({0, 0, 0}, {0, 0}, {12}));
    CHECK(ev.front() >= 0.0 - 1e-12);
    CHECK(ev.back() <= 8.0 + 1e-12);
    // band edges approached from inside as the box grows
    const auto ev20 = eigensolve(build_matrix({0, 0, 0}, {0, 0}, {20}));
    CHECK(ev20.front() < ev.front());
    CHECK(ev20.back() > ev.back());
    CHECK(ev20.front() == doctest::Approx(0.0).epsilon(0.05));
    CHECK(ev20.back() == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("gamma sits on the origin diagonal") {
    const CouplingParams c{2.5, 0.0, 0.0};
    const SymMatrix m = build_matrix(c, {0, 0}, {10});
    // representative 0 is the origin in the full-even basis
    bool found = false;
    for (int i = 0; i < m.dim; ++i)
        if (m.at(i, i) == doctest::Approx(4.0 + 2.5)) found = true;
    CHECK(found);
}

TEST_CASE("degenerate band diagonal matrix matches det7") {
    const CouplingParams c{1.0, 0.0, 0.0};
    const Quasimomentum K{M_PI, M_PI};
    const auto ev = eigensolve(build_matrix(c, K, {10}));
    const OracleReport r = count_outside(ev, essential_band(K), 1e-4);
    CHECK(r.n_below == 0);
    REQUIRE(r.n_above == 1);
    CHECK(r.eigs_above[0] == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("count_outside margins") {
    const EssentialBand band{0.0, 8.0};
    const OracleReport r = count_outside({-1.0, -5e-5, 0.5, 8.00005, 9.0}, band, 1e-4);
    CHECK(r.n_below == 1);
    CHECK(r.n_above == 1);
    CHECK(r.n_indeterminate == 2);
}

TEST_CASE("oracle matches determinant zeros for a deep sample") {
    const CouplingParams c{0.0, 20.0, 8.0};
    const Quasimomentum K{0, 0};
    const OracleReport r = count_outside(eigensolve(build_matrix(c, K, {20})), {0.0, 8.0}, 1e-4);
    const ZeroReport zr = bound_state_report(c, K, GridSpec(256));
    REQUIRE(r.n_above == static_cast<int>(zr.above.size()));
    CHECK(r.n_below == 0);
    for (int i = 0; i < r.n_above; ++i)
        CHECK(r.eigs_above[i] == doctest::Approx(zr.above[i]).epsilon(1e-7));
}

TEST_CASE("sector additivity at K=0") {
    const CouplingParams c{1.0, 12.0, 3.0};
    const Quasimomentum K{0, 0};
    const EssentialBand band = essential_band(K);
    const OracleReport full =
        count_outside(eigensolve(build_matrix(c, K, {14, Sector::full_even})), band, 1e-4);
    const OracleReport sym =
        count_outside(eigensolve(build_matrix(c, K, {14, Sector::swap_symmetric})), band, 1e-4);
    const OracleReport anti = count_outside(
        eigensolve(build_matrix(c, K, {14, Sector::swap_antisymmetric})), band, 1e-4);
    CHECK(full.n_below == sym.n_below + anti.n_below);
    CHECK(full.n_above == sym.n_above + anti.n_above);
    // sector dimensions partition the even space
    const int dfull = build_matrix(c, K, {14, Sector::full_even}).dim;
    const int dsym = build_matrix(c, K, {14, Sector::swap_symmetric}).dim;
    const int danti = build_matrix(c, K, {14, Sector::swap_antisymmetric}).dim;
    CHECK(dfull == dsym + danti);
}

TEST_CASE("antisymmetric sector ignores gamma") {
    const Quasimomentum K{0, 0};
    std::vector<double> reference;
    for (double gamma : {-5.0, 0.0, 5.0}) {
        const CouplingParams c{gamma, 20.0, 8.0};
        const auto ev = eigensolve(build_matrix(c, K, {16, Sector::swap_antisymmetric}));
        if (reference.empty()) {
            reference = ev;
        } else {
            REQUIRE(ev.size() == reference.size());
            for (std::size_t i = 0; i < ev.size(); ++i)
                CHECK(ev[i] == doctest::Approx(reference[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("run_oracle reports box convergence") {
    const CouplingParams c{0.0, -12.0, 0.0};
    const OracleReport r = run_oracle(c, {0, 0}, {20});
    CHECK(r.converged);
    CHECK(r.n_below == 2);
    CHECK(r.convergence_delta < 1e-6);
    REQUIRE(r.eigs_below_refined.size() == 2);
}
